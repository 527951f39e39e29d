#pragma once

#include <map>
#include <string>
#include <vector>

#include "dunkl/measure.hpp"
#include "dunkl/radial_function.hpp"
#include "dunkl/weight.hpp"

namespace dunkl {

struct InequalityParams {
  double p = 2.0;
  double q = 2.0;
  double alpha = 0.0;
  double beta = 0.0;
  DunklIndex idx;
};

/// Both sides of one inequality on one function. A side that diverges is
/// +inf with its status naming the error kind.
struct InequalityReport {
  std::string id;  // thm1, thm2_pitt, hlp, rearrangement_34, annulus
  std::string function;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs; 0 when both vanish
  std::string lhs_status = "ok";
  std::string rhs_status = "ok";
  InequalityParams params;
  std::map<std::string, double> diagnostics;
};

/// (int ((F f)*)^q u*)^(1/q) against (int (f*)^p [(1/v)*]^-1)^(1/p).
InequalityReport verify_theorem1(const DunklIndex& idx, const RadialFunction& f, const WeightSpec& u,
                                 const WeightSpec& v, double p, double q);

/// The construction from the necessity argument: f = indicator(R) with
/// R^N = r m / (1 + m^2), m the unit-ball measure, and the links of the
/// resulting chain of estimates sampled at `samples` points each.
struct NecessityProbe {
  double r = 1.0;
  double R = 0.0;
  double r_prime = 0.0;       // r m^2 / (1 + m^2), the measure of supp f*
  double lower_bound_lhs = 0.0;  // (r'/2) (int_0^(1/r) u*)^(1/q)
  double lhs = 0.0;           // (int ((F f)*)^q u*)^(1/q)
  double rhs = 0.0;           // (int_0^r' [(1/v)*]^-1)^(1/p)
  double condition_value = 0.0;  // r (int_0^(1/r) u*)^(1/q) (int_0^r [(1/v)*]^-1)^(-1/p)
  // each link: the smallest margin (left minus right side) over its samples
  double bessel_margin = 0.0;        // j_nu(y) - 1/2 on 0 < y < 1
  double transform_margin = 0.0;     // F f(x) - r'/2 on |x| < 1/R
  double distribution_margin = 0.0;  // D_{F f}(s) - 1/r on 0 < s < r'/2
  bool bessel_ok = false;
  bool transform_ok = false;
  bool distribution_ok = false;
  bool lower_bound_ok = false;  // lhs >= lower_bound_lhs
  bool all_ok() const { return bessel_ok && transform_ok && distribution_ok && lower_bound_ok; }
};

NecessityProbe theorem1_necessity_probe(const DunklIndex& idx, double r, const WeightSpec& u,
                                        const WeightSpec& v, double p, double q, int samples = 50);

/// (int |F f|^q |x|^alpha)^(1/q) against (int |f|^p |x|^beta)^(1/p). Throws
/// Error(inadmissible_parameters) unless pitt_index_check admits the tuple.
InequalityReport verify_pitt(const DunklIndex& idx, const RadialFunction& f, double alpha,
                             double beta, double p, double q);
/// The same two sides without the admissibility check.
InequalityReport pitt_sides(const DunklIndex& idx, const RadialFunction& f, double alpha,
                            double beta, double p, double q);

/// (int |F f|^p |x|^(N(p-2)))^(1/p) against ||f||_p, 1 < p <= 2.
InequalityReport verify_hlp(const DunklIndex& idx, const RadialFunction& f, double p);

/// Per-s ratio int_0^s ((F f)*)^q / int_0^s (int_0^(1/t) f*)^q dt.
struct RatioCurve {
  std::vector<double> grid;
  std::vector<double> ratios;
  double sup = 0.0;
};
RatioCurve rearrangement_34_diagnostic(const DunklIndex& idx, const RadialFunction& f, double q,
                                       const std::vector<double>& s_grid);

}  // namespace dunkl
