#pragma once

#include <string>
#include <vector>

#include "dunkl/curve.hpp"

namespace dunkl {

/// A weight on (0, inf): a power t^a, a tabulated curve (log-log
/// interpolation with power-law ends), or an arbitrary curve such as a
/// rearrangement. Also used for radial weights w(|x|) on space.
class WeightSpec {
 public:
  enum class Kind { power, tabulated, curve };

  /// The unit weight.
  WeightSpec() : curve_(Curve::power(1.0, 0.0)), label_("power:0") {}

  static WeightSpec power(double exponent, double coeff = 1.0);
  static WeightSpec tabulated(std::vector<double> t, std::vector<double> w);
  static WeightSpec from_curve(Curve c, std::string label);
  /// "power:<a>", "power:<a>:<coeff>", "unit", "zero" or "table:<csv path>".
  static WeightSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  double exponent() const { return exponent_; }
  double coeff() const { return coeff_; }
  bool is_zero() const { return kind_ == Kind::power && coeff_ == 0.0; }
  const Curve& curve() const { return curve_; }
  double operator()(double t) const { return curve_(t); }
  const std::string& describe() const { return label_; }

 private:
  Kind kind_ = Kind::power;
  double exponent_ = 0.0;
  double coeff_ = 1.0;
  Curve curve_;
  std::string label_;
};

}  // namespace dunkl
