#include "dunkl/report_io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace dunkl::io {

Json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0.0 ? "inf" : "-inf";
  return x;
}

Json numbers(const std::vector<double>& xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(number(x));
  return a;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0.0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json to_json(const DunklIndex& idx) {
  return {{"d", idx.d}, {"gamma", number(idx.gamma)}, {"N", number(idx.N)},
          {"nu", number(idx.nu)}, {"d_k", number(idx.d_k)}};
}

Json to_json(const SupReport& r) {
  return {{"expression_id", r.expression},
          {"p", number(r.p)},
          {"q", number(r.q)},
          {"grid", numbers(r.grid)},
          {"ratios", numbers(r.ratios)},
          {"sup", number(r.sup)},
          {"slopes", {{"low", number(r.slope_low)}, {"high", number(r.slope_high)}}},
          {"verdict", verdict_label(r)},
          {"reason", r.reason}};
}

Json to_json(const PittIndex& r) {
  return {{"admissible", r.admissible},
          {"constraint_residual", number(r.constraint_residual)},
          {"reason", r.reason}};
}

Json to_json(const InequalityReport& r) {
  Json diag = Json::object();
  for (const auto& [k, v] : r.diagnostics) diag[k] = number(v);
  return {{"inequality_id", r.id},
          {"function", r.function},
          {"lhs", number(r.lhs)},
          {"rhs", number(r.rhs)},
          {"ratio", number(r.ratio)},
          {"lhs_status", r.lhs_status},
          {"rhs_status", r.rhs_status},
          {"parameters",
           {{"p", number(r.params.p)},
            {"q", number(r.params.q)},
            {"alpha", number(r.params.alpha)},
            {"beta", number(r.params.beta)},
            {"index", to_json(r.params.idx)}}},
          {"diagnostics", diag}};
}

Json to_json(const NecessityProbe& r) {
  return {{"r", number(r.r)},
          {"R", number(r.R)},
          {"r_prime", number(r.r_prime)},
          {"lower_bound_lhs", number(r.lower_bound_lhs)},
          {"lhs", number(r.lhs)},
          {"rhs", number(r.rhs)},
          {"condition_value", number(r.condition_value)},
          {"margins",
           {{"bessel", number(r.bessel_margin)},
            {"transform", number(r.transform_margin)},
            {"distribution", number(r.distribution_margin)}}},
          {"checks",
           {{"bessel", r.bessel_ok},
            {"transform", r.transform_ok},
            {"distribution", r.distribution_ok},
            {"lower_bound", r.lower_bound_ok}}}};
}

Json to_json(const BesovSeminorm& r) {
  return {{"value", number(r.value)},
          {"t_grid", numbers(r.t_grid)},
          {"norms", numbers(r.norms)},
          {"integrand", numbers(r.integrand)},
          {"slopes", {{"low", number(r.slope_low)}, {"high", number(r.slope_high)}}},
          {"converged", {{"low", r.converged_low}, {"high", r.converged_high}}}};
}

Json to_json(const Theorem3Report& r) {
  return {{"besov", to_json(r.besov)},
          {"besov_norm", number(r.besov.value)},
          {"l1_norm", number(r.transform_l1_norm)},
          {"l1_status", r.l1_status},
          {"annulus_sup", number(r.annulus_sup)},
          {"annulus_sup_refined", number(r.annulus_sup_refined)},
          {"conclusion", r.conclusion}};
}

Json to_json(const LpIdentity& r) {
  return {{"space_norm", number(r.space_norm)},
          {"layer_cake", number(r.layer_cake)},
          {"rearranged_norm", number(r.rearranged_norm)}};
}

Json to_json(const RatioCurve& r) {
  return {{"grid", numbers(r.grid)}, {"ratios", numbers(r.ratios)}, {"sup", number(r.sup)}};
}

Json to_json(const TransformResult& r) {
  return {{"input", r.input},
          {"grid", numbers(r.grid)},
          {"values", numbers(r.values)},
          {"errors", numbers(r.errors)},
          {"quadrature_error_estimate", number(r.quadrature_error_estimate)}};
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace dunkl::io
