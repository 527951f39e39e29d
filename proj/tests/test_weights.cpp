#include <cmath>

#include "doctest.h"
#include "dunkl/error.hpp"
#include "dunkl/weights.hpp"

using namespace dunkl;

TEST_CASE("B_p class of power weights is exact") {
  for (double p : {1.5, 2.0, 3.0}) {
    for (double a : {-1.5, -0.5, 0.0, 0.5, p - 1.0, p}) {
      const SupReport r = bp_check(WeightSpec::power(a), p);
      const bool member = a > -1.0 && a < p - 1.0;
      CHECK(r.finite() == member);
      if (member) CHECK(r.sup == doctest::Approx((a + 1.0) / (p - 1.0 - a)).epsilon(1e-6));
      CHECK(bp_equivalent_condition(WeightSpec::power(a), p).verdict == r.verdict);
    }
  }
}

TEST_CASE("verdict labels") {
  const SupReport bp = bp_check(WeightSpec::power(-0.5), 2.0);
  CHECK(verdict_label(bp) == "member");
  const SupReport h = hardy_condition_A(WeightSpec::power(0.0), WeightSpec::power(0.0), 2.0, 2.0);
  CHECK(verdict_label(h) == "finite");
  CHECK(h.sup == doctest::Approx(1.0));
}

TEST_CASE("tabulated weights match their power law") {
  std::vector<double> t;
  std::vector<double> w;
  for (int i = -40; i <= 40; ++i) {
    t.push_back(std::pow(10.0, i / 10.0));
    w.push_back(std::pow(t.back(), -0.5));
  }
  const SupReport r = bp_check(WeightSpec::tabulated(t, w), 2.0);
  CHECK(r.finite());
  CHECK(r.sup == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("Hardy conditions detect growth mismatch") {
  // mu = t^2 against theta = 1 with p = q = 2: (s^3/3)^(1/2) s^(-1/2) grows
  CHECK(!hardy_condition_A(WeightSpec::power(2.0), WeightSpec::power(0.0), 2.0, 2.0).finite());
  CHECK_THROWS_AS(hardy_condition_A(WeightSpec::power(0.0), WeightSpec::power(0.0), 3.0, 2.0), Error);
}

TEST_CASE("index constraint") {
  const DunklIndex idx = DunklIndex::make(3, 0.0);
  CHECK(pitt_index_check(idx, -1.0, 1.0, 2.0, 2.0).admissible);
  const PittIndex bad = pitt_index_check(idx, -1.0, 2.0, 2.0, 2.0);
  CHECK(!bad.admissible);
  CHECK(bad.constraint_residual == doctest::Approx(1.0 / 6.0));
  CHECK(bad.reason.find("constraint") != std::string::npos);
  CHECK(!pitt_index_check(idx, -3.5, 3.5, 2.0, 2.0).admissible);
  CHECK(!pitt_index_check(idx, -1.0, 1.0, 2.0, 1.5).admissible);
}

TEST_CASE("q >= 2 weight condition tracks the index constraint") {
  const DunklIndex idx = DunklIndex::make(2, 0.5);
  for (double alpha : {-2.0, -1.0, -0.25}) {
    for (double beta : {0.5, 1.0, 2.0}) {
      const SupReport r = theorem1_condition(idx, weight_rearrangement(idx, WeightSpec::power(alpha)),
                                             reciprocal_rearrangement(idx, WeightSpec::power(beta)).pow(-1.0),
                                             2.0, 2.0);
      CHECK(r.finite() == pitt_index_check(idx, alpha, beta, 2.0, 2.0).admissible);
    }
  }
}

TEST_CASE("hypotheses below q = 2") {
  const DunklIndex idx = DunklIndex::make(3, 0.0);
  const double p = 4.0 / 3.0, q = 1.5;
  const double N = idx.N;
  const double beta = 0.5;
  const double alpha = q * (N * (1.0 - 1.0 / p - 1.0 / q) - beta / p);
  const Theorem2Hypotheses h = theorem2_hypotheses(idx, weight_rearrangement(idx, WeightSpec::power(alpha)),
                                                   reciprocal_rearrangement(idx, WeightSpec::power(beta)), p, q);
  CHECK(h.holds);
}
