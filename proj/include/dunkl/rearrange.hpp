#pragma once

#include <string>

#include "dunkl/curve.hpp"
#include "dunkl/measure.hpp"
#include "dunkl/radial_function.hpp"

namespace dunkl {

struct RearrangeOptions {
  int cells = 20000;  // radial cells for profiles that are not monotone
};

/// Distribution function D(s) = nu_k{|f| > s} and decreasing rearrangement
/// f*(t) = inf{s : D(s) <= t} of a radial function.
struct Rearrangement {
  Curve D;
  Curve f_star;
  RadialFunction source;
  std::string method;  // closed_form, monotone or sorted_cells
  double sup = 0.0;    // f*(0+)
};

/// Closed forms for the named families; for monotone |F|,
/// f*(t) = |F|((t N / d_k)^(1/N)) and D from the level-set radius; otherwise
/// cells sorted by value. Throws Error(divergence) when a level set has
/// infinite measure for every level (growing profiles).
Rearrangement decreasing_rearrangement(const DunklIndex& idx, const RadialFunction& f,
                                       const RearrangeOptions& opts = {});

inline Curve distribution(const DunklIndex& idx, const RadialFunction& f) {
  return decreasing_rearrangement(idx, f).D;
}

/// The three members of the layer-cake identity, all equal to ||f||_p^p.
struct LpIdentity {
  double space_norm = 0.0;       // int |f|^p dnu_k
  double layer_cake = 0.0;       // p int s^(p-1) D(s) ds
  double rearranged_norm = 0.0;  // int (f*)^p dt
};

LpIdentity lp_identity_check(const DunklIndex& idx, const RadialFunction& f, double p);

}  // namespace dunkl
