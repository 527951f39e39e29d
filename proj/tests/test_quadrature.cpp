#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "dunkl/error.hpp"
#include "dunkl/quadrature.hpp"

using namespace dunkl::quad;
using std::numbers::pi;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (int n : {1, 2, 5, 10, 15, 20, 32}) {
    const Rule& rule = gauss_legendre(n);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    // degree 2n-1 monomial on [0, 1]
    const int deg = 2 * n - 1;
    const double got = apply(rule, [deg](double x) { return std::pow(x, deg); }, 0.0, 1.0);
    CHECK(got == doctest::Approx(1.0 / (deg + 1)).epsilon(1e-13));
  }
}

TEST_CASE("adaptive handles a kink at a breakpoint and one in the interior") {
  const std::vector<double> edges{-1.0, 0.0, 2.0};
  auto f = [](double x) { return std::abs(x) + std::abs(x - 1.3); };
  Options opts;
  opts.rel_tol = 1e-14;
  const Result r = adaptive(f, edges, opts);
  // int_{-1}^{2} |x| dx = 2.5 ; int_{-1}^{2} |x - 1.3| dx = (2.3^2 + 0.7^2)/2
  CHECK(r.value == doctest::Approx(2.5 + 0.5 * (2.3 * 2.3 + 0.7 * 0.7)).epsilon(1e-12));
}

TEST_CASE("half-line integration with origin singularity and gaussian tail") {
  // int_0^inf r^{-1/2} e^{-r} dr = sqrt(pi)
  auto f = [](double r) { return std::exp(-r) / std::sqrt(r); };
  CHECK(integrate(f, 0.0, inf).value == doctest::Approx(std::sqrt(pi)).epsilon(1e-11));
  // int_0^inf r^2 e^{-r^2/2} dr = sqrt(pi/2)
  auto g = [](double r) { return r * r * std::exp(-0.5 * r * r); };
  CHECK(integrate(g, 0.0, inf).value == doctest::Approx(std::sqrt(pi / 2.0)).epsilon(1e-12));
}

TEST_CASE("power-law tails are extrapolated") {
  // int_1^inf r^{-2.5} dr = 1/1.5
  auto f = [](double r) { return std::pow(r, -2.5); };
  CHECK(integrate(f, 1.0, inf).value == doctest::Approx(1.0 / 1.5).epsilon(1e-9));
  // int_0^1 r^{-0.9} dr = 10
  auto g = [](double r) { return std::pow(r, -0.9); };
  CHECK(integrate(g, 0.0, 1.0).value == doctest::Approx(10.0).epsilon(1e-8));
}

TEST_CASE("divergent integrals are reported") {
  auto tail = [](double r) { return 1.0 / (1.0 + r); };
  CHECK_THROWS_AS(integrate(tail, 0.0, inf), dunkl::Error);
  auto origin = [](double r) { return 1.0 / r; };
  try {
    integrate(origin, 0.0, 1.0);
    FAIL("expected divergence");
  } catch (const dunkl::Error& e) {
    CHECK(e.kind() == dunkl::ErrorKind::divergence);
  }
}

TEST_CASE("support end and breakpoints") {
  Hints hints;
  hints.support_end = 2.0;
  hints.breakpoints = {1.0};
  auto f = [](double r) { return r < 1.0 ? 1.0 : 3.0; };
  CHECK(integrate(f, 0.0, inf, hints).value == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("windowed extrapolation of a slowly decaying oscillatory tail") {
  // int_0^inf (sin r / r)^2 dr = pi/2, with evaluation capped at r = 512.
  Hints hints;
  hints.eval_limit = 512.0;
  auto f = [](double r) {
    const double s = r < 1e-8 ? 1.0 : std::sin(r) / r;
    return s * s;
  };
  const Result r = integrate(f, 0.0, inf, hints);
  CHECK(r.value == doctest::Approx(pi / 2.0).epsilon(1e-8));
}

TEST_CASE("Wynn epsilon accelerates a geometric-power mixture") {
  std::vector<double> seq;
  for (int k = 0; k < 5; ++k) {
    const double s = std::ldexp(1.0, k + 4);
    seq.push_back(1.0 - 0.7 / s + 0.3 / (s * s * s));
  }
  CHECK(wynn_epsilon(seq) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("smooth cutoff") {
  CHECK(smooth_cutoff(-1.0) == 1.0);
  CHECK(smooth_cutoff(0.5) == doctest::Approx(0.5));
  CHECK(smooth_cutoff(1.0) == 0.0);
  double previous = 1.0;
  for (double x = 0.0; x <= 1.0; x += 0.01) {
    CHECK(smooth_cutoff(x) <= previous);
    previous = smooth_cutoff(x);
  }
}
