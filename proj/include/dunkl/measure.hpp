#pragma once

#include <string>

#include "dunkl/quadrature.hpp"
#include "dunkl/radial_function.hpp"
#include "dunkl/weight.hpp"

namespace dunkl {

/// Dimension d and multiplicity sum gamma, with the derived homogeneous
/// dimension N = 2 gamma + d, Bessel order nu = N/2 - 1 and surface constant
/// d_k = 1 / (2^nu Gamma(nu + 1)) (Mehta constant normalized to 1).
struct DunklIndex {
  int d = 1;
  double gamma = 0.0;
  double N = 1.0;
  double nu = -0.5;
  double d_k = 1.0;

  static DunklIndex make(int d, double gamma);
  /// Measure of the unit ball, d_k / N.
  double unit_ball() const { return d_k / N; }
  std::string describe() const;
};

/// d_k R^N / N
double ball_measure(const DunklIndex& idx, double R);

/// Quadrature hints describing |F|^p w r^(N-1) on (0, inf).
quad::Hints radial_hints(const RadialFunction& F);

/// d_k int_0^inf |F(r)|^p w(r) r^(N-1) dr. Throws Error(divergence) or
/// Error(divergent_tail) when the integral is infinite.
quad::Result radial_integral_detailed(const DunklIndex& idx, const RadialFunction& F, double p,
                                      const WeightSpec& w = WeightSpec::power(0.0));
double radial_integral(const DunklIndex& idx, const RadialFunction& F, double p,
                       const WeightSpec& w = WeightSpec::power(0.0));

/// Weighted norm (radial_integral)^(1/p).
double lp_norm(const DunklIndex& idx, const RadialFunction& F, double p,
               const WeightSpec& w = WeightSpec::power(0.0));

}  // namespace dunkl
