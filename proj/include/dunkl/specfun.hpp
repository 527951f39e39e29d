#pragma once

#include <array>
#include <vector>

namespace dunkl::specfun {

/// Gamma function for x > 0. Throws Error(domain) otherwise.
double gamma_fn(double x);

/// Bessel function of the first kind J_nu(x), nu >= -1/2, x >= 0.
double bessel_J(double nu, double x);

/// Normalized Bessel function j_nu(x) = 2^nu Gamma(nu+1) J_nu(x) / x^nu, with
/// j_nu(0) = 1. This is the radial kernel of the Dunkl transform.
double bessel_j_normalized(double nu, double x);

/// Evaluator for one fixed order. Holds the order-dependent constants so that
/// transform kernels can evaluate j_nu at many arguments cheaply. Immutable
/// after construction and safe to share between threads.
class BesselKernel {
 public:
  explicit BesselKernel(double nu);

  double order() const noexcept { return nu_; }

  /// J_nu(x)
  double J(double x) const;

  /// j_nu(x), the normalized form.
  double j(double x) const;

  /// Arguments at or below this value use the ascending series.
  static constexpr double series_limit = 17.0;

 private:
  // Branches, exposed to the unit tests through the friend below.
  double series_normalized(double x) const;
  double asymptotic_J(double x) const;

  double nu_;
  double log_gamma_nu1_;  // log Gamma(nu + 1)
  double base_order_;     // nu reduced into [-1/2, 1/2)
  int steps_;             // nu = base_order_ + steps_

  friend struct BesselKernelProbe;
};

/// Test access to the two evaluation branches of BesselKernel.
struct BesselKernelProbe {
  static double series_J(const BesselKernel& k, double x);
  static double asymptotic_J(const BesselKernel& k, double x);
};

/// Approximate positive zeros of J_nu by McMahon's expansion. Used only to
/// place quadrature panel edges, so modest accuracy suffices; the returned
/// sequence is strictly increasing.
double bessel_zero_estimate(double nu, int k);

}  // namespace dunkl::specfun
