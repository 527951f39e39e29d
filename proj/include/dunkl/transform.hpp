#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dunkl/measure.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/radial_function.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl {

struct TransformOptions {
  double truncation = 1e-18;  // relative envelope at which gaussian tails are cut
};

/// Radial Dunkl transform at a single frequency,
///   s -> d_k int_0^inf j_nu(r s) F(r) r^(N-1) dr.
/// The r-axis is split at the zeros of J_nu(r s), at the profile's
/// breakpoints and on a grid of half its scale; every panel gets a fixed
/// 21-point Gauss-Kronrod rule. The decomposition depends only on s, so results are
/// reproducible bit for bit in any evaluation order.
class TransformKernel {
 public:
  TransformKernel(const DunklIndex& idx, const RadialFunction& f, TransformOptions opts = {});

  quad::Result operator()(double s) const;

  const DunklIndex& index() const { return idx_; }
  const RadialFunction& source() const { return f_; }
  /// Radius beyond which the profile is ignored (or windowed off).
  double truncation_radius() const { return r_end_; }

 private:
  std::vector<double> panel_edges(double s) const;
  double integrand(double r, double s) const;
  quad::Result integrate_panels(const std::vector<double>& edges, double s, double window_start) const;

  DunklIndex idx_;
  RadialFunction f_;
  TransformOptions opts_;
  specfun::BesselKernel bessel_;
  std::vector<double> base_edges_;
  double r_end_ = 0.0;
  bool windowed_ = false;  // algebraic tail: smooth-window extrapolation
  int grade_levels_ = 0;   // geometric panels toward a singular origin
  int radial_power_ = -1;  // N - 1 when a small integer, else -1 (use pow)
};

struct TransformResult {
  std::vector<double> grid;
  std::vector<double> values;
  std::vector<double> errors;
  double quadrature_error_estimate = 0.0;  // max over the grid
  RadialFunction output;                   // pchip through the grid values
  std::string input;

  /// CSV with header s,value,error_estimate.
  void write_csv(std::ostream& out) const;
};

/// 257 geometric points on [1e-3, 1e2].
std::vector<double> default_frequency_grid();

/// Transform on a grid, frequencies evaluated in parallel.
TransformResult dunkl_transform_radial(const DunklIndex& idx, const RadialFunction& f,
                                       const std::vector<double>& s_grid);
/// Single-threaded reference; results are bit-identical to the parallel one.
TransformResult dunkl_transform_radial_serial(const DunklIndex& idx, const RadialFunction& f,
                                              const std::vector<double>& s_grid);
/// The kernel is symmetric under the c_k = 1 normalization, so the inverse is
/// the same integral.
TransformResult inverse_transform_radial(const DunklIndex& idx, const RadialFunction& g,
                                         const std::vector<double>& r_grid);

struct TransformedOptions {
  double rel_tol = 1e-13;   // Chebyshev tail tolerance relative to the peak
  double cap_factor = 512;  // table extent, in units of 1/scale, for slow decay
};

/// The transform as a continuous profile: a piecewise Chebyshev table up to
/// the point where it is negligible. Slowly decaying transforms are tabulated
/// up to cap_factor / scale and evaluated directly beyond, with eval_limit set
/// there so integrators extrapolate instead of evaluating further.
RadialFunction transformed(const DunklIndex& idx, const RadialFunction& f,
                           const TransformedOptions& opts = {});

/// f *_k g as the inverse transform of the product of transforms.
RadialFunction convolve_radial(const DunklIndex& idx, const RadialFunction& f,
                               const RadialFunction& g);

struct HausdorffYoungReport {
  double p = 2.0;
  double lhs = 0.0;  // ||F_k f||_{p'}
  double rhs = 0.0;  // ||f||_p
  double ratio = 1.0;
};

HausdorffYoungReport hausdorff_young_report(const DunklIndex& idx, const RadialFunction& f, double p);

/// p / (p - 1), with inf for p = 1.
double conjugate_exponent(double p);

}  // namespace dunkl
