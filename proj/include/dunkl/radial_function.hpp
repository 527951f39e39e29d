#pragma once

#include <functional>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace dunkl {

enum class Interp { pchip, step };

/// How a profile behaves for large r.
enum class Decay {
  compact,    // exactly zero beyond support_end
  gaussian,   // like exp(-r^2 / (2 rate^2))
  algebraic,  // like r^-rate, possibly oscillating
  growing,    // not decaying (power weights with exponent >= 0)
};

/// Everything the integrators need to know about a profile without
/// evaluating it: where it lives, where it kinks, how it behaves at the ends.
struct ProfileInfo {
  double scale = 1.0;                // characteristic length
  std::vector<double> breakpoints;   // kinks, jumps, panel edges inside (0, inf)
  double support_end = std::numeric_limits<double>::infinity();
  Decay decay = Decay::compact;
  double decay_rate = 0.0;
  double origin_exponent = 0.0;      // F(r) ~ c r^a as r -> 0
  double eval_limit = std::numeric_limits<double>::infinity();  // evaluation is costly beyond
  bool monotone = false;             // |F| is non-increasing on (0, inf)
};

/// A radial profile F on [0, inf). Cheap to copy; immutable and shareable
/// across threads once constructed.
class RadialFunction {
 public:
  using Eval = std::function<double(double)>;

  /// The zero function.
  RadialFunction();

  static RadialFunction zero() { return {}; }
  /// exp(-r^2 / (2 sigma^2))
  static RadialFunction gaussian(double sigma = 1.0);
  /// 1 on [0, R), 0 beyond
  static RadialFunction indicator(double R);
  /// r^a exp(-r^2 / (2 sigma^2)), a > -1 is enough for local integrability in any N >= 1
  static RadialFunction power_gaussian(double a, double sigma = 1.0);
  /// r^a; used for power weights, not integrable on its own
  static RadialFunction power(double a);
  /// Tabulated on a strictly increasing positive grid. pchip: monotone cubic,
  /// value at the first node below it, zero beyond the last node. step: value
  /// i on [r_{i-1}, r_i) with r_{-1} = 0, zero beyond the last node.
  static RadialFunction tabulated(std::vector<double> grid, std::vector<double> values,
                                  Interp rule = Interp::pchip);
  /// Arbitrary evaluator with caller-supplied metadata.
  static RadialFunction custom(Eval eval, ProfileInfo info, std::string description);

  double operator()(double r) const;
  const ProfileInfo& info() const;
  const std::string& description() const;
  bool is_zero() const;

  /// Named family of this profile ("gaussian", "indicator", "power_gaussian",
  /// "power", "tabulated", "zero" or "custom").
  const std::string& family() const;

  /// Parameters of the named families: F = amplitude * r^a * exp(-r^2/(2 sigma^2))
  /// for gaussian / power_gaussian / power, amplitude on [0, R) for indicator.
  struct Params {
    double amplitude = 1.0;
    double a = 0.0;
    double sigma = 1.0;
    double R = 0.0;
  };
  Params params() const;

  /// r -> F(lambda r)
  RadialFunction dilated(double lambda) const;
  /// r -> c F(r)
  RadialFunction scaled(double c) const;

  /// Grid and values of a tabulated profile (empty otherwise).
  const std::vector<double>& grid() const;
  const std::vector<double>& values() const;

  struct Impl;

 private:
  explicit RadialFunction(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// Pointwise product.
RadialFunction product(const RadialFunction& a, const RadialFunction& b);

/// Options for piecewise Chebyshev approximation.
struct ChebyshevOptions {
  double abs_tol = 1e-13;   // on trailing coefficients
  int degree = 32;
  double min_width = 1e-9;  // relative to the interval length
  int max_panels = 4096;
};

/// Piecewise Chebyshev interpolant of `f` on [0, hi]; panels are bisected
/// until the trailing coefficients fall below abs_tol. Node evaluations within
/// a refinement round run in parallel. `beyond` (may be empty) is used for
/// r > hi; otherwise the result is zero there. Panel edges are appended to the
/// returned profile's breakpoints.
RadialFunction chebyshev_table(const RadialFunction::Eval& f, double hi, ProfileInfo info,
                               std::string description, const ChebyshevOptions& opts = {},
                               RadialFunction::Eval beyond = {});

/// Headerless two-column CSV (radius, value).
RadialFunction read_profile_csv(std::istream& in, Interp rule = Interp::pchip);
void write_profile_csv(std::ostream& out, const RadialFunction& f, const std::vector<double>& grid);

/// Geometric grid of n points from a to b inclusive.
std::vector<double> geometric_grid(double a, double b, int n);

}  // namespace dunkl
