#pragma once

#include <string>
#include <vector>

#include "dunkl/measure.hpp"
#include "dunkl/radial_function.hpp"

namespace dunkl {

/// Exponents of the smoothness condition. delta = ((q-1) N - alpha) / q.
struct BesovParams {
  DunklIndex idx;
  double p = 2.0;
  double q = 2.0;
  double alpha = 0.0;
  double beta = 0.0;
  double delta = 0.0;
  bool hlp_corner = false;  // beta = 0, alpha = N(p-2), p = q

  /// Validates 1 < p <= 2, p <= q, -N < alpha < 0, 0 < beta < N(p-1),
  /// (p + alpha)/(p - 1) < N and the index constraint; the corner
  /// beta = 0, alpha = N(p-2), p = q is accepted as well. Throws
  /// Error(inadmissible_parameters) otherwise.
  static BesovParams make(const DunklIndex& idx, double p, double q, double alpha, double beta);
};

/// Test function defined through its transform s^2 exp(-s^2).
struct PhiSpec {
  RadialFunction transform_profile;
  RadialFunction spatial_profile;
  double admissibility_constant = 0.0;  // |phi^(s)| > c s^2 on [1/2, 1]
};

PhiSpec make_phi(const DunklIndex& idx);

/// f *_k phi_t as a profile: the inverse transform of F f(s) phi^(t s).
RadialFunction smoothed(const DunklIndex& idx, const RadialFunction& Ff, const PhiSpec& phi, double t);

struct BesovSeminorm {
  double value = 0.0;  // +inf when an end slope does not converge
  std::vector<double> t_grid;
  std::vector<double> norms;      // ||f *_k phi_t||_{p,k,v}
  std::vector<double> integrand;  // norms * t^-delta, integrated against dt/t
  double slope_low = 0.0;
  double slope_high = 0.0;
  bool converged_low = false;   // slope_low > 0.05
  bool converged_high = false;  // slope_high < -0.05
  bool converged() const { return converged_low && converged_high; }
};

/// 61 geometric points on [1e-3, 1e3].
std::vector<double> default_t_grid();

BesovSeminorm besov_seminorm(const BesovParams& params, const RadialFunction& f, const PhiSpec& phi,
                             const std::vector<double>& t_grid = default_t_grid());

struct AnnulusBound {
  double t = 1.0;
  double lhs = 0.0;  // t^2 (int_{1/(2t) <= |x| <= 1/t} |F f|^q |x|^(alpha + 2q))^(1/q)
  double rhs = 0.0;  // ||f *_k phi_t||_{p,k,v}
  double ratio = 0.0;
};

AnnulusBound annulus_bound(const BesovParams& params, const RadialFunction& f, const PhiSpec& phi,
                           double t);

struct AnnulusSweep {
  std::vector<AnnulusBound> points;
  double sup = 0.0;
};
/// annulus_bound over a grid, with the transform of f computed once.
AnnulusSweep annulus_sweep(const BesovParams& params, const RadialFunction& f, const PhiSpec& phi,
                           const std::vector<double>& t_grid);

struct Theorem3Report {
  BesovSeminorm besov;
  double transform_l1_norm = 0.0;
  std::string l1_status = "ok";
  double annulus_sup = 0.0;
  double annulus_sup_refined = 0.0;  // on the grid refined twice
  bool conclusion = false;           // besov finite implies the L^1 norm is finite
};

/// Annulus ratios use 25 points on [1e-2, 1e2] and the same range refined x2.
Theorem3Report verify_theorem3(const BesovParams& params, const RadialFunction& f, const PhiSpec& phi);

}  // namespace dunkl
