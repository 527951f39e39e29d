#include "dunkl/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "dunkl/curve.hpp"
#include "dunkl/error.hpp"
#include "dunkl/rearrange.hpp"
#include "dunkl/specfun.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/weights.hpp"

namespace dunkl {

namespace {

constexpr double kInf = quad::inf;

double side(const std::function<double()>& fn, std::string& status) {
  try {
    return fn();
  } catch (const Error& e) {
    status = to_string(e.kind());
    return kInf;
  }
}

void finish(InequalityReport& rep) {
  if (rep.rhs == 0.0) {
    rep.ratio = rep.lhs == 0.0 ? 0.0 : kInf;
  } else {
    rep.ratio = rep.lhs / rep.rhs;
  }
}

InequalityReport start(std::string id, const DunklIndex& idx, const RadialFunction& f, double p,
                       double q, double alpha, double beta) {
  InequalityReport rep;
  rep.id = std::move(id);
  rep.function = f.description();
  rep.params = {p, q, alpha, beta, idx};
  return rep;
}

// (int a^k w)^(1/k) over (0, inf)
double curve_norm(const Curve& a, double k, const Curve& w) {
  return std::pow(integrate_product(a, k, w, 1.0, 0.0, kInf), 1.0 / k);
}

}  // namespace

InequalityReport verify_theorem1(const DunklIndex& idx, const RadialFunction& f, const WeightSpec& u,
                                 const WeightSpec& v, double p, double q) {
  if (!(p > 1.0) || !(q >= p) || q < 2.0) {
    fail(ErrorKind::inadmissible_parameters, "need 1 < p <= q and q >= 2");
  }
  InequalityReport rep = start("thm1", idx, f, p, q, u.exponent(), v.exponent());
  if (f.is_zero()) return rep;
  const Curve u_star = weight_rearrangement(idx, u);
  const Curve W = reciprocal_rearrangement(idx, v).pow(-1.0);
  rep.lhs = side(
      [&] {
        const Rearrangement RF = decreasing_rearrangement(idx, transformed(idx, f));
        rep.diagnostics["transform_sup"] = RF.sup;
        return curve_norm(RF.f_star, q, u_star);
      },
      rep.lhs_status);
  rep.rhs = side(
      [&] {
        const Rearrangement Rf = decreasing_rearrangement(idx, f);
        rep.diagnostics["function_sup"] = Rf.sup;
        return curve_norm(Rf.f_star, p, W);
      },
      rep.rhs_status);
  finish(rep);
  return rep;
}

NecessityProbe theorem1_necessity_probe(const DunklIndex& idx, double r, const WeightSpec& u,
                                        const WeightSpec& v, double p, double q, int samples) {
  if (!(r > 0.0)) fail(ErrorKind::domain, "probe radius must be positive");
  if (samples < 1) fail(ErrorKind::invalid_input, "need at least one sample");
  NecessityProbe out;
  const double m = idx.unit_ball();
  const double N = idx.N;
  out.r = r;
  out.R = std::pow(r * m / (1.0 + m * m), 1.0 / N);
  out.r_prime = r * m * m / (1.0 + m * m);

  const Curve u_star = weight_rearrangement(idx, u);
  const Curve W = reciprocal_rearrangement(idx, v).pow(-1.0);
  const double U = u_star.integral(0.0, 1.0 / r);
  out.lower_bound_lhs = 0.5 * out.r_prime * std::pow(U, 1.0 / q);
  out.rhs = std::pow(W.integral(0.0, out.r_prime), 1.0 / p);
  out.condition_value = U == 0.0 ? 0.0 : r * std::pow(U, 1.0 / q) * std::pow(W.integral(0.0, r), -1.0 / p);

  const double step = 1.0 / (samples + 1);
  const specfun::BesselKernel kernel(idx.nu);
  out.bessel_margin = kInf;
  for (int i = 1; i <= samples; ++i) {
    out.bessel_margin = std::min(out.bessel_margin, kernel.j(i * step) - 0.5);
  }

  const RadialFunction F = transformed(idx, RadialFunction::indicator(out.R));
  out.transform_margin = kInf;
  for (int i = 1; i <= samples; ++i) {
    out.transform_margin = std::min(out.transform_margin, F(i * step / out.R) - 0.5 * out.r_prime);
  }

  const Rearrangement RF = decreasing_rearrangement(idx, F);
  out.distribution_margin = kInf;
  for (int i = 1; i <= samples; ++i) {
    out.distribution_margin = std::min(out.distribution_margin, RF.D(i * step * 0.5 * out.r_prime) - 1.0 / r);
  }
  out.lhs = curve_norm(RF.f_star, q, u_star);

  out.bessel_ok = out.bessel_margin > 0.0;
  out.transform_ok = out.transform_margin > 0.0;
  out.distribution_ok = out.distribution_margin > 0.0;
  out.lower_bound_ok = out.lhs >= out.lower_bound_lhs;
  return out;
}

InequalityReport pitt_sides(const DunklIndex& idx, const RadialFunction& f, double alpha,
                            double beta, double p, double q) {
  InequalityReport rep = start("thm2_pitt", idx, f, p, q, alpha, beta);
  rep.diagnostics["constraint_residual"] = pitt_index_check(idx, alpha, beta, p, q).constraint_residual;
  if (f.is_zero()) return rep;
  rep.lhs = side([&] { return lp_norm(idx, transformed(idx, f), q, WeightSpec::power(alpha)); },
                 rep.lhs_status);
  rep.rhs = side([&] { return lp_norm(idx, f, p, WeightSpec::power(beta)); }, rep.rhs_status);
  finish(rep);
  return rep;
}

InequalityReport verify_pitt(const DunklIndex& idx, const RadialFunction& f, double alpha,
                             double beta, double p, double q) {
  const PittIndex check = pitt_index_check(idx, alpha, beta, p, q);
  if (!check.admissible) {
    fail(ErrorKind::inadmissible_parameters,
         check.reason + " (residual " + std::to_string(check.constraint_residual) + ")");
  }
  return pitt_sides(idx, f, alpha, beta, p, q);
}

InequalityReport verify_hlp(const DunklIndex& idx, const RadialFunction& f, double p) {
  if (!(p > 1.0) || p > 2.0) fail(ErrorKind::inadmissible_parameters, "need 1 < p <= 2");
  const double alpha = idx.N * (p - 2.0);
  InequalityReport rep = start("hlp", idx, f, p, p, alpha, 0.0);
  if (f.is_zero()) return rep;
  rep.lhs = side([&] { return lp_norm(idx, transformed(idx, f), p, WeightSpec::power(alpha)); },
                 rep.lhs_status);
  rep.rhs = side([&] { return lp_norm(idx, f, p); }, rep.rhs_status);
  finish(rep);
  return rep;
}

RatioCurve rearrangement_34_diagnostic(const DunklIndex& idx, const RadialFunction& f, double q,
                                       const std::vector<double>& s_grid) {
  if (q < 2.0) fail(ErrorKind::inadmissible_parameters, "need q >= 2");
  RatioCurve out;
  if (f.is_zero()) return out;
  const Rearrangement RF = decreasing_rearrangement(idx, transformed(idx, f));
  const Rearrangement Rf = decreasing_rearrangement(idx, f);
  // t -> int_0^(1/t) f* = A(1/t) / t with A the running average
  const Curve A = average(Rf.f_star);
  const double total = Rf.f_star.integral(0.0, kInf);
  std::vector<double> bps;
  for (double b : Rf.f_star.breakpoints()) bps.push_back(1.0 / b);
  std::sort(bps.begin(), bps.end());
  quad::Hints h;
  h.breakpoints = bps;
  const Curve G = Curve::function(
      [A, total](double t) {
        if (!(t > 0.0)) return total;
        return A(1.0 / t) / t;
      },
      0.0, kInf, h);
  const Curve one = Curve::power(1.0, 0.0);
  for (double s : s_grid) {
    const double num = integrate_product(RF.f_star, q, one, 1.0, 0.0, s);
    const double den = integrate_product(G, q, one, 1.0, 0.0, s);
    out.grid.push_back(s);
    out.ratios.push_back(den > 0.0 ? num / den : kInf);
    out.sup = std::max(out.sup, out.ratios.back());
  }
  return out;
}

}  // namespace dunkl
