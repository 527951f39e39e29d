#include "dunkl/weights.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "dunkl/error.hpp"
#include "dunkl/rearrange.hpp"
#include "dunkl/transform.hpp"

namespace dunkl {

namespace {

constexpr double kInf = quad::inf;

const Curve& unit() {
  static const Curve c = Curve::power(1.0, 0.0);
  return c;
}

struct Fit {
  double slope = 0.0;
  double residual = 0.0;
};

// least squares in log-log over the samples with positive finite ratios
Fit loglog_fit(const std::vector<double>& s, const std::vector<double>& r,
               const std::vector<std::size_t>& idx) {
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i : idx) {
    if (r[i] > 0.0 && std::isfinite(r[i])) {
      x.push_back(std::log(s[i]));
      y.push_back(std::log(r[i]));
    }
  }
  Fit fit;
  if (x.size() < 2) return fit;
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i] / n;
    my += y[i] / n;
  }
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    fit.residual = std::max(fit.residual, std::abs(y[i] - my - fit.slope * (x[i] - mx)));
  }
  return fit;
}

SupReport sup_report(std::string expression, double p, double q, const SupOptions& opts,
                     const std::function<double(double)>& ratio) {
  if (opts.points < 4 || !(opts.lo > 0.0) || !(opts.hi > opts.lo)) {
    fail(ErrorKind::invalid_input, "bad s-grid for a sup report");
  }
  SupReport rep;
  rep.expression = std::move(expression);
  rep.p = p;
  rep.q = q;
  rep.grid = geometric_grid(opts.lo, opts.hi, opts.points);
  const std::size_t n = rep.grid.size();
  rep.ratios.assign(n, 0.0);
  std::vector<int> failure(n, -1);

#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      rep.ratios[i] = ratio(rep.grid[i]);
    } catch (const Error& e) {
      failure[i] = static_cast<int>(e.kind());
      rep.ratios[i] = e.kind() == ErrorKind::degenerate ? std::nan("") : kInf;
    }
  }

  // first failure in grid order, so the reason is independent of scheduling
  for (std::size_t i = 0; i < n; ++i) {
    if (failure[i] >= 0 && rep.reason.empty()) rep.reason = to_string(static_cast<ErrorKind>(failure[i]));
  }
  bool any_nan = false;
  bool any_inf = false;
  for (double r : rep.ratios) {
    if (std::isnan(r)) any_nan = true;
    else if (std::isinf(r)) any_inf = true;
    else rep.sup = std::max(rep.sup, r);
  }
  if (any_inf) rep.sup = kInf;

  std::vector<std::size_t> low;
  std::vector<std::size_t> high;
  for (std::size_t i = 0; i < n; ++i) {
    if (rep.grid[i] <= 10.0 * opts.lo * (1.0 + 1e-12)) low.push_back(i);
    if (rep.grid[i] >= 0.1 * opts.hi * (1.0 - 1e-12)) high.push_back(i);
  }
  const Fit fl = loglog_fit(rep.grid, rep.ratios, low);
  const Fit fh = loglog_fit(rep.grid, rep.ratios, high);
  rep.slope_low = fl.slope;
  rep.slope_high = fh.slope;

  if (any_inf) {
    rep.verdict = Verdict::non_member;
  } else if (any_nan) {
    rep.verdict = Verdict::inconclusive;
  } else if (rep.slope_low < -opts.slope_tol) {
    rep.verdict = Verdict::non_member;
    rep.reason = "grows as s -> 0";
  } else if (rep.slope_high > opts.slope_tol) {
    rep.verdict = Verdict::non_member;
    rep.reason = "grows as s -> inf";
  } else if (fl.residual > 0.1 || fh.residual > 0.1) {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "not power-like at the ends";
  } else {
    rep.verdict = Verdict::member;
    rep.reason.clear();
  }
  return rep;
}

void check_pq(double p, double q) {
  if (!(p > 1.0) || !(q >= p) || !std::isfinite(q)) {
    fail(ErrorKind::inadmissible_parameters, "need 1 < p <= q < inf");
  }
}

// (0 < x) ^ k with the usual conventions for 0 and inf
double root(double x, double k) {
  if (x == 0.0) return k > 0.0 ? 0.0 : kInf;
  if (std::isinf(x)) return k > 0.0 ? kInf : 0.0;
  return std::pow(x, k);
}

RadialFunction weight_profile(const WeightSpec& w, bool reciprocal) {
  const Curve c = reciprocal ? w.curve().pow(-1.0) : w.curve();
  if (w.kind() == WeightSpec::Kind::power) {
    if (w.coeff() == 0.0) {
      if (reciprocal) fail(ErrorKind::divergence, "reciprocal of the zero weight");
      return {};
    }
    const double a = reciprocal ? -w.exponent() : w.exponent();
    const double c0 = reciprocal ? 1.0 / w.coeff() : w.coeff();
    return RadialFunction::power(a).scaled(c0);
  }
  ProfileInfo info;
  info.breakpoints = c.breakpoints();
  info.scale = info.breakpoints.empty()
                   ? 1.0
                   : std::sqrt(info.breakpoints.front() * info.breakpoints.back());
  // end behaviour from the outermost segments
  const auto& segs = c.segments();
  const auto end_exponent = [&](const Curve::Segment& s, double t) {
    if (s.is_power) return s.e;
    return std::log(s(2.0 * t) / s(t)) / std::log(2.0);
  };
  info.origin_exponent = end_exponent(segs.front(), 0.5 * info.scale * 1e-6);
  const double e_hi = end_exponent(segs.back(), 2.0 * info.scale * 1e6);
  info.support_end = c.end();
  if (std::isinf(info.support_end)) {
    info.decay = e_hi < 0.0 ? Decay::algebraic : Decay::growing;
    info.decay_rate = -e_hi;
  }
  info.monotone = true;
  double prev = kInf;
  for (double t : geometric_grid(info.scale * 1e-8, info.scale * 1e8, 4001)) {
    const double v = std::abs(c(t));
    if (v > prev * (1.0 + 1e-12)) {
      info.monotone = false;
      break;
    }
    prev = v;
  }
  return RadialFunction::custom([c](double r) { return c(r); }, std::move(info),
                                (reciprocal ? "1/" : "") + w.describe());
}

}  // namespace

std::string verdict_label(const SupReport& r) {
  const bool bp = r.expression == "bp" || r.expression == "bp_equivalent";
  switch (r.verdict) {
    case Verdict::member:
      return bp ? "member" : "finite";
    case Verdict::non_member:
      return bp ? "non_member" : "infinite";
    case Verdict::inconclusive:
      break;
  }
  return "inconclusive";
}

double bp_ratio(const WeightSpec& mu, double p, double s) {
  if (!(p > 1.0)) fail(ErrorKind::inadmissible_parameters, "B_p needs p > 1");
  if (!(s > 0.0)) fail(ErrorKind::domain, "B_p ratio needs s > 0");
  const double upper = integrate_product(mu.curve(), 1.0, Curve::power(1.0, -p), 1.0, s, kInf);
  const double lower = mu.curve().integral(0.0, s);
  if (std::isinf(upper)) fail(ErrorKind::divergent_tail, "upper B_p integral diverges");
  if (std::isinf(lower)) fail(ErrorKind::divergence, "lower B_p integral diverges");
  if (lower == 0.0) fail(ErrorKind::degenerate, "weight vanishes on (0, s)");
  return std::pow(s, p) * upper / lower;
}

SupReport bp_check(const WeightSpec& mu, double p, const SupOptions& opts) {
  if (!(p > 1.0)) fail(ErrorKind::inadmissible_parameters, "B_p needs p > 1");
  return sup_report("bp", p, p, opts, [&](double s) { return bp_ratio(mu, p, s); });
}

double bp_equivalent_ratio(const WeightSpec& v, double p, double s) {
  if (!(p > 1.0)) fail(ErrorKind::inadmissible_parameters, "B_p needs p > 1");
  const double pc = conjugate_exponent(p);
  const double mass = v.curve().integral(0.0, s);
  if (std::isinf(mass)) fail(ErrorKind::divergence, "weight is not integrable at the origin");
  if (mass == 0.0) fail(ErrorKind::degenerate, "weight vanishes on (0, s)");
  const Curve avg = average(v.curve());
  const double inner = integrate_product(avg, 1.0 - pc, unit(), 1.0, 0.0, s);
  if (std::isinf(inner)) fail(ErrorKind::divergence, "averaged weight integral diverges");
  return std::pow(mass, 1.0 / p) * std::pow(inner, 1.0 / pc) / s;
}

SupReport bp_equivalent_condition(const WeightSpec& v, double p, const SupOptions& opts) {
  if (!(p > 1.0)) fail(ErrorKind::inadmissible_parameters, "B_p needs p > 1");
  return sup_report("bp_equivalent", p, p, opts,
                    [&](double s) { return bp_equivalent_ratio(v, p, s); });
}

SupReport hardy_condition_A(const WeightSpec& mu, const WeightSpec& th, double p, double q,
                            const SupOptions& opts) {
  check_pq(p, q);
  return sup_report("hardy_A", p, q, opts, [&](double s) {
    const double a = mu.curve().integral(0.0, s);
    const double b = th.curve().integral(0.0, s);
    if (b == 0.0) fail(ErrorKind::degenerate, "weight vanishes on (0, s)");
    if (std::isinf(a)) fail(ErrorKind::divergence, "weight is not integrable at the origin");
    return root(a, 1.0 / q) * root(b, -1.0 / p);
  });
}

SupReport hardy_condition_B(const WeightSpec& mu, const WeightSpec& th, double p, double q,
                            const SupOptions& opts) {
  check_pq(p, q);
  const double pc = conjugate_exponent(p);
  const Curve avg = average(th.curve());
  return sup_report("hardy_B", p, q, opts, [&](double s) {
    const double a = integrate_product(mu.curve(), 1.0, Curve::power(1.0, -q), 1.0, s, kInf);
    if (a == 0.0) return 0.0;
    const double b = integrate_product(avg, -pc, th.curve(), 1.0, 0.0, s);
    return root(a, 1.0 / q) * root(b, 1.0 / pc);
  });
}

SupReport theorem1_condition(const DunklIndex&, const Curve& u_star, const Curve& inv_v_star_inv,
                             double p, double q, const SupOptions& opts) {
  check_pq(p, q);
  if (q < 2.0) fail(ErrorKind::inadmissible_parameters, "this condition needs q >= 2");
  return sup_report("theorem1", p, q, opts, [&](double s) {
    const double a = u_star.integral(0.0, 1.0 / s);
    if (a == 0.0) return 0.0;
    const double b = inv_v_star_inv.integral(0.0, s);
    if (b == 0.0) fail(ErrorKind::divergence, "weight integral vanishes");
    return s * root(a, 1.0 / q) * root(b, -1.0 / p);
  });
}

SupReport theorem2_condition_ii(const DunklIndex&, const Curve& u_star, const Curve& inv_v_star,
                                double p, double q, const SupOptions& opts) {
  check_pq(p, q);
  if (!(q < 2.0)) fail(ErrorKind::inadmissible_parameters, "this condition needs q < 2");
  const double pc = conjugate_exponent(p);
  const double qc = conjugate_exponent(q);
  return sup_report("theorem2_ii", p, q, opts, [&](double s) {
    const double b = integrate_product(inv_v_star, pc - 1.0, unit(), 1.0, 0.0, s);
    if (b == 0.0) return 0.0;
    const double a = integrate_product(u_star, 1.0 - qc, unit(), 1.0, 0.0, 1.0 / s);
    return root(a, -1.0 / qc) * root(b, 1.0 / pc) / s;
  });
}

Theorem2Hypotheses theorem2_hypotheses(const DunklIndex& idx, const Curve& u_star,
                                       const Curve& inv_v_star, double p, double q,
                                       const SupOptions& opts) {
  check_pq(p, q);
  Theorem2Hypotheses out;
  if (q >= 2.0) {
    const Curve W = inv_v_star.pow(-1.0);
    out.weight_class = bp_check(WeightSpec::from_curve(W, "[(1/v)*]^-1"), p, opts);
    out.condition = theorem1_condition(idx, u_star, W, p, q, opts);
  } else {
    const double qc = conjugate_exponent(q);
    const Curve U = u_star.pow(1.0 - qc);
    out.weight_class = bp_check(WeightSpec::from_curve(U, "(u*)^(1-q')"), qc, opts);
    out.condition = theorem2_condition_ii(idx, u_star, inv_v_star, p, q, opts);
  }
  out.holds = out.weight_class.finite() && out.condition.finite();
  return out;
}

PittIndex pitt_index_check(const DunklIndex& idx, double alpha, double beta, double p, double q) {
  PittIndex out;
  const double N = idx.N;
  out.constraint_residual = (alpha / q + beta / p) / N - (1.0 - 1.0 / p - 1.0 / q);
  if (!(p > 1.0) || !(q >= p) || !std::isfinite(q)) {
    out.reason = "need 1 < p <= q < inf";
  } else if (!(alpha > -N) || !(alpha < 0.0)) {
    out.reason = "need -N < alpha < 0";
  } else if (!(beta > 0.0) || !(beta < N * (p - 1.0))) {
    out.reason = "need 0 < beta < N(p-1)";
  } else if (std::abs(out.constraint_residual) > 1e-12) {
    out.reason = "index constraint (alpha/q + beta/p)/N = 1 - 1/p - 1/q violated";
  } else {
    out.admissible = true;
  }
  return out;
}

Curve weight_rearrangement(const DunklIndex& idx, const WeightSpec& w) {
  return decreasing_rearrangement(idx, weight_profile(w, false)).f_star;
}

Curve reciprocal_rearrangement(const DunklIndex& idx, const WeightSpec& w) {
  return decreasing_rearrangement(idx, weight_profile(w, true)).f_star;
}

}  // namespace dunkl
