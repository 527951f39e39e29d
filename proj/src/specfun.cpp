#include "dunkl/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dunkl/error.hpp"

namespace dunkl {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::divergent_tail: return "divergent_tail";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::inadmissible_parameters: return "inadmissible_parameters";
    case ErrorKind::invalid_input: return "invalid_input";
  }
  return "unknown";
}

namespace specfun {
namespace {

void check_order(double nu) {
  if (!(nu >= -0.5)) {
    fail(ErrorKind::domain, "Bessel order must be >= -1/2, got " + std::to_string(nu));
  }
}

void check_argument(double x) {
  if (!(x >= 0.0)) {
    fail(ErrorKind::domain, "Bessel argument must be >= 0, got " + std::to_string(x));
  }
}

// Hankel expansion of J_mu for large x. Summation stops at the smallest term.
double hankel_asymptotic(double mu, double x) {
  const double four_mu2 = 4.0 * mu * mu;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (four_mu2 - odd * odd) / (8.0 * k * x);
    const double magnitude = std::abs(term);
    if (magnitude > previous || magnitude < 1e-18) break;
    previous = magnitude;
    // Signs follow (-1)^{k/2} for even k and (-1)^{(k-1)/2} for odd k.
    const int r = k % 4;
    if (r == 1) q += term;
    else if (r == 2) p -= term;
    else if (r == 3) q -= term;
    else p += term;
  }
  const double chi = x - (0.5 * mu + 0.25) * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) {
    fail(ErrorKind::domain, "gamma_fn requires x > 0, got " + std::to_string(x));
  }
  return std::tgamma(x);
}

BesselKernel::BesselKernel(double nu) : nu_(nu) {
  check_order(nu);
  log_gamma_nu1_ = std::lgamma(nu + 1.0);
  steps_ = static_cast<int>(std::floor(nu + 0.5));
  base_order_ = nu - steps_;
}

double BesselKernel::series_normalized(double x) const {
  // sum_k (-(x/2)^2)^k / (k! (nu+1)_k), accumulated in extended precision
  const long double y = -0.25L * static_cast<long double>(x) * x;
  const long double nu = nu_;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 1; k < 500; ++k) {
    term *= y / (static_cast<long double>(k) * (k + nu));
    sum += term;
    if (k > 0.5 * x && std::abs(term) < 1e-21L * std::abs(sum)) break;
  }
  return static_cast<double>(sum);
}

double BesselKernel::asymptotic_J(double x) const {
  double lower = hankel_asymptotic(base_order_, x);
  if (steps_ == 0) return lower;
  double upper = hankel_asymptotic(base_order_ + 1.0, x);
  // Forward recurrence is stable while the order stays below x.
  for (int k = 1; k < steps_; ++k) {
    const double mu = base_order_ + k;
    const double next = 2.0 * mu / x * upper - lower;
    lower = upper;
    upper = next;
  }
  return upper;
}

double BesselKernel::J(double x) const {
  check_argument(x);
  if (x == 0.0) {
    if (nu_ == 0.0) return 1.0;
    return nu_ > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  if (x > series_limit && x > nu_) return asymptotic_J(x);
  const double prefactor = std::exp(nu_ * std::log(0.5 * x) - log_gamma_nu1_);
  return prefactor * series_normalized(x);
}

double BesselKernel::j(double x) const {
  check_argument(x);
  if (x == 0.0) return 1.0;
  if (x > series_limit && x > nu_) {
    return std::exp(log_gamma_nu1_ + nu_ * std::log(2.0 / x)) * asymptotic_J(x);
  }
  return series_normalized(x);
}

double BesselKernelProbe::series_J(const BesselKernel& k, double x) {
  return std::exp(k.nu_ * std::log(0.5 * x) - k.log_gamma_nu1_) * k.series_normalized(x);
}

double BesselKernelProbe::asymptotic_J(const BesselKernel& k, double x) {
  return k.asymptotic_J(x);
}

double bessel_J(double nu, double x) { return BesselKernel(nu).J(x); }

double bessel_j_normalized(double nu, double x) { return BesselKernel(nu).j(x); }

double bessel_zero_estimate(double nu, int k) {
  if (k < 1) fail(ErrorKind::domain, "zero index must be >= 1");
  const double mu = 4.0 * nu * nu;
  const double beta = (k + 0.5 * nu - 0.25) * std::numbers::pi;
  const double b8 = 8.0 * beta;
  const double z = beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8);
  // McMahon is poor for small k at large order; j_{nu,k} > nu + (k-1) pi/2 keeps
  // the sequence increasing and on the right side of the turning point.
  return std::max(z, nu + 1.0 + (k - 1) * 0.5 * std::numbers::pi);
}

}  // namespace specfun
}  // namespace dunkl
