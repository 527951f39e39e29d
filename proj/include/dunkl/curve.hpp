#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <vector>

#include "dunkl/quadrature.hpp"

namespace dunkl {

/// A function on (0, inf) stored as consecutive segments with explicit
/// breakpoints. Power segments c t^e are integrated in closed form; function
/// segments by quadrature. The curve is zero outside its segments.
class Curve {
 public:
  struct Segment {
    double lo = 0.0;
    double hi = quad::inf;
    bool is_power = true;
    double c = 0.0;
    double e = 0.0;
    std::shared_ptr<const std::function<double(double)>> fn;
    quad::Hints hints;

    double operator()(double t) const;
  };

  Curve() = default;

  /// c t^e on (lo, hi).
  static Curve power(double c, double e, double lo = 0.0, double hi = quad::inf);
  /// Piecewise constant: values[i] on [edges[i], edges[i+1]).
  static Curve steps(const std::vector<double>& edges, const std::vector<double>& values);
  /// Log-log linear interpolation through (t_i, w_i) (all positive), with
  /// power-law extrapolation below and above fitted over the outermost decade.
  static Curve loglog(const std::vector<double>& t, const std::vector<double>& w);
  /// Arbitrary evaluator on (lo, hi).
  static Curve function(std::function<double(double)> f, double lo = 0.0, double hi = quad::inf,
                        quad::Hints hints = {});

  /// Appends a segment; segments must be added in increasing order.
  Curve& append(Segment seg);

  double operator()(double t) const;
  const std::vector<Segment>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }
  /// Upper end of the last segment (0 for the empty curve).
  double end() const { return segments_.empty() ? 0.0 : segments_.back().hi; }
  /// True when the curve is a single power segment on all of (0, inf).
  bool is_pure_power() const;
  std::vector<double> breakpoints() const;

  /// t -> curve(t)^k. Zero values raised to negative powers give +inf.
  Curve pow(double k) const;
  Curve scaled(double c) const;

  /// Integral over [lo, hi]; throws Error(divergence) / Error(divergent_tail).
  double integral(double lo, double hi) const;

  void write_csv(std::ostream& out, const std::vector<double>& grid) const;

 private:
  std::vector<Segment> segments_;
};

/// int_lo^hi a(t)^pa b(t)^pb dt, closed form on overlapping power segments.
double integrate_product(const Curve& a, double pa, const Curve& b, double pb, double lo,
                         double hi);

/// t -> (1/t) int_0^t c. Exact power curve when c is a pure power.
Curve average(const Curve& c);

/// Closed-form integral of c t^e over [lo, hi] (hi may be inf, lo may be 0).
double power_integral(double c, double e, double lo, double hi);

}  // namespace dunkl
