#include <cmath>
#include <random>

#include "doctest.h"
#include "dunkl/error.hpp"
#include "dunkl/rearrange.hpp"
#include "dunkl/weights.hpp"

using namespace dunkl;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("closed forms for the named families") {
  const DunklIndex idx = DunklIndex::make(3, 1.0);
  const double N = idx.N;
  const Rearrangement g = decreasing_rearrangement(idx, RadialFunction::gaussian(1.0));
  CHECK(g.method == "closed_form");
  for (double t : {1e-3, 0.1, 1.0, 7.0}) {
    CHECK(g.f_star(t) == doctest::Approx(std::exp(-0.5 * std::pow(t * N / idx.d_k, 2.0 / N))).epsilon(1e-12));
  }
  for (double s : {0.01, 0.5, 0.99}) {
    CHECK(g.D(s) == doctest::Approx(idx.d_k / N * std::pow(2.0 * std::log(1.0 / s), N / 2.0)).epsilon(1e-12));
  }
  const Rearrangement ind = decreasing_rearrangement(idx, RadialFunction::indicator(2.0));
  CHECK(ind.f_star(0.99 * ball_measure(idx, 2.0)) == 1.0);
  CHECK(ind.f_star(1.01 * ball_measure(idx, 2.0)) == 0.0);
  CHECK(ind.D(0.5) == doctest::Approx(ball_measure(idx, 2.0)));
  CHECK(ind.D(1.0) == 0.0);
  // growing powers have no rearrangement
  CHECK_THROWS_AS(decreasing_rearrangement(idx, RadialFunction::power(0.5)), Error);
}

TEST_CASE("power weights rearrange to powers of t") {
  for (auto [d, gm] : {std::pair{1, 0.5}, {2, 0.0}, {3, 1.0}}) {
    const DunklIndex idx = DunklIndex::make(d, gm);
    const double N = idx.N;
    const Rearrangement R = decreasing_rearrangement(idx, RadialFunction::power(-1.5));
    for (double t : {1e-3, 1.0, 1e3}) {
      CHECK(rel(R.f_star(t), std::pow(N / idx.d_k, -1.5 / N) * std::pow(t, -1.5 / N)) < 1e-12);
    }
  }
}

TEST_CASE("the three layer-cake members agree") {
  const DunklIndex idx = DunklIndex::make(2, 0.5);
  for (const auto& f : {RadialFunction::gaussian(0.7), RadialFunction::indicator(1.3),
                        RadialFunction::power_gaussian(-0.4), RadialFunction::power_gaussian(1.5)}) {
    for (double p : {1.0, 2.0, 3.5}) {
      const LpIdentity L = lp_identity_check(idx, f, p);
      CHECK(rel(L.layer_cake, L.space_norm) < 1e-6);
      CHECK(rel(L.rearranged_norm, L.space_norm) < 1e-6);
    }
  }
}

TEST_CASE("rearrangements are non-increasing and right-continuous in the sampled sense") {
  const DunklIndex idx = DunklIndex::make(3, 0.0);
  const Rearrangement R = decreasing_rearrangement(idx, RadialFunction::power_gaussian(2.0, 0.8));
  CHECK(R.method == "sorted_cells");
  double prev = R.sup;
  for (double t = 1e-4; t < 1e2; t *= 1.07) {
    const double v = R.f_star(t);
    CHECK(v <= prev);
    prev = v;
  }
  // D and f* are generalized inverses of each other
  for (double s : {0.05, 0.2, 0.5}) CHECK(R.f_star(R.D(s) * (1.0 + 1e-9)) <= s + 1e-9);
}

TEST_CASE("Hardy-Littlewood inequality") {
  const DunklIndex idx = DunklIndex::make(3, 0.5);
  const auto f = RadialFunction::power_gaussian(1.0);
  const auto g = RadialFunction::gaussian(2.0);
  const auto h = RadialFunction::indicator(0.7);
  const Curve fs = decreasing_rearrangement(idx, f).f_star;
  const Curve gs = decreasing_rearrangement(idx, g).f_star;
  const Curve hs = decreasing_rearrangement(idx, h).f_star;
  const double fg = radial_integral(idx, product(f, g), 1.0);
  CHECK(fg < integrate_product(fs, 1.0, gs, 1.0, 0.0, quad::inf));
  // both decreasing: equality
  const double hg = radial_integral(idx, product(h, g), 1.0);
  CHECK(hg == doctest::Approx(integrate_product(hs, 1.0, gs, 1.0, 0.0, quad::inf)).epsilon(1e-9));
}

TEST_CASE("maximal average dominates the rearrangement") {
  const DunklIndex idx = DunklIndex::make(2, 1.0);
  const Curve fs = decreasing_rearrangement(idx, RadialFunction::power_gaussian(0.5)).f_star;
  const Curve avg = average(fs);
  for (double t = 1e-3; t < 1e2; t *= 1.5) CHECK(avg(t) >= fs(t) * (1.0 - 1e-12));
}

TEST_CASE("distribution function against Monte Carlo in R^3") {
  // gamma = 0: nu_k is Lebesgue measure over (2 pi)^(3/2)
  const DunklIndex idx = DunklIndex::make(3, 0.0);
  const auto f = RadialFunction::power_gaussian(1.0);
  const Rearrangement R = decreasing_rearrangement(idx, f);
  std::mt19937_64 rng(20261019);
  std::uniform_real_distribution<double> U(-4.0, 4.0);
  const std::vector<double> levels{0.2, 0.4, 0.55};
  std::vector<long> hits(levels.size(), 0);
  const long n = 400000;
  for (long i = 0; i < n; ++i) {
    const double x = U(rng), y = U(rng), z = U(rng);
    const double v = f(std::sqrt(x * x + y * y + z * z));
    for (std::size_t k = 0; k < levels.size(); ++k) hits[k] += v > levels[k];
  }
  const double scale = 512.0 / std::pow(2.0 * M_PI, 1.5) / n;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    CHECK(rel(hits[k] * scale, R.D(levels[k])) < 0.05);
  }
}

namespace {

// nonnegative radial step function with n random levels on (0, 3)
RadialFunction random_steps(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<double> r;
  std::vector<double> v;
  for (int i = 1; i <= n; ++i) {
    r.push_back(3.0 * i / n);
    v.push_back(U(rng));
  }
  return RadialFunction::tabulated(r, v, Interp::step);
}

}  // namespace

TEST_CASE("layer cake on a random decreasing table") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<double> r;
  std::vector<double> v;
  double level = 1.0;
  for (int i = 1; i <= 40; ++i) {
    r.push_back(0.1 * i);
    level *= 0.7 + 0.3 * U(rng);
    v.push_back(level);
  }
  const auto f = RadialFunction::tabulated(r, v);
  const DunklIndex idx = DunklIndex::make(3, 0.5);
  for (double p : {1.0, 2.0, 3.5}) {
    const LpIdentity L = lp_identity_check(idx, f, p);
    CHECK(rel(L.layer_cake, L.space_norm) < 1e-6);
    CHECK(rel(L.rearranged_norm, L.space_norm) < 1e-6);
  }
}

TEST_CASE("Hardy-Littlewood and its reverse form on random step pairs") {
  std::mt19937_64 rng(11);
  const DunklIndex idx = DunklIndex::make(2, 0.5);
  for (int trial = 0; trial < 5; ++trial) {
    const RadialFunction f = random_steps(rng, 8);
    const RadialFunction th = random_steps(rng, 6);
    const double direct = radial_integral(idx, product(f, th), 1.0);
    const Curve fs = decreasing_rearrangement(idx, f).f_star;
    const Curve ts = decreasing_rearrangement(idx, th).f_star;
    CHECK(direct <= integrate_product(fs, 1.0, ts, 1.0, 0.0, quad::inf) * (1.0 + 1e-12));

    // reverse form: positive weight, random in the middle, growing like r at both ends
    std::uniform_real_distribution<double> U(0.2, 2.0);
    std::vector<double> t{0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0};
    std::vector<double> w{0.01, 0.1};
    for (int i = 0; i < 3; ++i) w.push_back(U(rng));
    w.push_back(10.0);
    w.push_back(100.0);
    const WeightSpec vt = WeightSpec::tabulated(t, w);
    const double weighted = radial_integral(idx, f, 1.0, vt);
    const Curve W = reciprocal_rearrangement(idx, vt).pow(-1.0);
    CHECK(integrate_product(fs, 1.0, W, 1.0, 0.0, quad::inf) <= weighted * (1.0 + 1e-9));
  }
}

TEST_CASE("reverse form is an equality for an indicator and a power weight") {
  const DunklIndex idx = DunklIndex::make(3, 1.0);
  for (double r : {0.5, 2.0}) {
    for (double beta : {0.5, 1.0}) {
      const RadialFunction f = RadialFunction::indicator(r);
      const double ref = idx.d_k / (beta + idx.N) * std::pow(r, beta + idx.N);
      const Curve W = reciprocal_rearrangement(idx, WeightSpec::power(beta)).pow(-1.0);
      const Curve fs = decreasing_rearrangement(idx, f).f_star;
      CHECK(rel(integrate_product(fs, 1.0, W, 1.0, 0.0, quad::inf), ref) < 1e-8);
      CHECK(rel(radial_integral(idx, f, 1.0, WeightSpec::power(beta)), ref) < 1e-8);
    }
  }
}

TEST_CASE("Hardy's lemma") {
  // g = f + h with h = +c on [0, 1), -c on [1, 2): the running integrals of f stay below those of g
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(0.5, 1.5);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> fv;
    for (int i = 0; i < 4; ++i) fv.push_back(U(rng));
    const double c = 0.4 * std::min(fv[0], fv[1]);
    const Curve f = Curve::steps({0.0, 1.0, 2.0, 3.0, 4.0}, fv);
    const Curve g = Curve::steps({0.0, 1.0, 2.0, 3.0, 4.0}, {fv[0] + c, fv[1] - c, fv[2], fv[3]});
    for (double t = 0.1; t < 4.0; t += 0.1) CHECK(f.integral(0.0, t) <= g.integral(0.0, t) + 1e-12);
    for (const Curve& phi : {Curve::power(1.0, -0.5), Curve::steps({0.0, 0.5, 2.5}, {3.0, 1.0})}) {
      CHECK(integrate_product(f, 1.0, phi, 1.0, 0.0, 4.0) <= integrate_product(g, 1.0, phi, 1.0, 0.0, 4.0) + 1e-12);
    }
  }
}
