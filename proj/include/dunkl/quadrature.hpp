#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace dunkl::quad {

using Integrand = std::function<double(double)>;

inline constexpr double inf = std::numeric_limits<double>::infinity();

/// Gauss-Legendre rule on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached n-point Gauss-Legendre rule (thread-safe, computed once per n).
const Rule& gauss_legendre(int n);

/// Fixed rule mapped to [a, b].
template <class F>
double apply(const Rule& rule, const F& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

struct Result {
  double value = 0.0;
  double error = 0.0;
};

/// 21-point Gauss-Kronrod on [a, b]; the error is the gap to its embedded
/// 10-point Gauss rule, so the check costs no extra evaluations.
template <class F>
Result kronrod21(const F& f, double a, double b) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 21>;
  using GL = boost::math::quadrature::gauss<double, 10>;
  const auto& x = GK::abscissa();
  const auto& wk = GK::weights();
  const auto& wg = GL::weights();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  const double f0 = f(mid);
  double fine = wk[0] * f0;
  double coarse = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double pair = f(mid - half * x[i]) + f(mid + half * x[i]);
    fine += wk[i] * pair;
    if (i % 2 == 1) coarse += wg[i / 2] * pair;
  }
  return {fine * half, std::abs(fine - coarse) * half};
}

struct Options {
  double rel_tol = 1e-11;
  double abs_tol = 0.0;
  int max_intervals = 20000;
};

/// Globally adaptive Gauss-Legendre over the partition given by `edges`
/// (sorted, finite). The interval with the largest error is bisected until the
/// summed error estimate meets the tolerance.
Result adaptive(const Integrand& f, std::span<const double> edges, const Options& opts = {});

/// Describes where an integrand on (0, inf) lives.
struct Hints {
  double scale = 1.0;               // characteristic length
  std::vector<double> breakpoints;  // kinks or jumps inside (0, inf)
  double support_end = inf;         // integrand is exactly zero beyond
  double eval_limit = inf;          // never evaluate beyond; extrapolate instead
};

/// Integral over [lo, hi] with 0 <= lo < hi <= inf. An integrable power-type
/// singularity at 0 is handled by dyadic panels shrinking toward the origin;
/// an infinite upper limit by dyadic panels growing outward, with geometric
/// tail extrapolation for power-law decay and smooth-window Wynn extrapolation
/// when `eval_limit` is reached first. Throws Error(divergence) or
/// Error(divergent_tail) when the integral is infinite.
Result integrate(const Integrand& f, double lo, double hi, const Hints& hints = {},
                 const Options& opts = {});

/// Wynn epsilon extrapolation of a sequence of partial values.
double wynn_epsilon(std::span<const double> seq);

/// C-infinity cutoff: 1 on x <= 0, 0 on x >= 1, smooth in between.
double smooth_cutoff(double x);

}  // namespace dunkl::quad
