#pragma once

#include <string>
#include <vector>

#include "dunkl/curve.hpp"
#include "dunkl/measure.hpp"
#include "dunkl/weight.hpp"

namespace dunkl {

enum class Verdict { member, non_member, inconclusive };

/// Sampled supremum of a quotient over s > 0. The sup over all s cannot be
/// decided from samples; the verdict combines finiteness of every sample
/// with the log-log slopes fitted over the outermost decade at each end.
struct SupReport {
  std::string expression;  // bp, bp_equivalent, hardy_A, hardy_B, theorem1, theorem2_ii
  double p = 2.0;
  double q = 2.0;
  std::vector<double> grid;
  std::vector<double> ratios;  // +inf where the quotient diverges
  double sup = 0.0;            // max over finite ratios, +inf if any diverged
  double slope_low = 0.0;
  double slope_high = 0.0;
  Verdict verdict = Verdict::inconclusive;
  std::string reason;  // empty for members

  bool finite() const { return verdict == Verdict::member; }
};

/// member / non_member / inconclusive for B_p reports, finite / infinite /
/// inconclusive for the others.
std::string verdict_label(const SupReport& r);

struct SupOptions {
  double lo = 1e-4;
  double hi = 1e4;
  int points = 81;
  double slope_tol = 1e-3;  // end slopes within this band count as bounded
};

/// s^p int_s^inf mu t^-p dt / int_0^s mu. Throws Error(divergent_tail),
/// Error(divergence) or Error(degenerate).
double bp_ratio(const WeightSpec& mu, double p, double s);
SupReport bp_check(const WeightSpec& mu, double p, const SupOptions& opts = {});

/// (1/s) (int_0^s v)^(1/p) (int_0^s (avg v)^(1-p'))^(1/p'), avg v(t) = (1/t) int_0^t v.
double bp_equivalent_ratio(const WeightSpec& v, double p, double s);
SupReport bp_equivalent_condition(const WeightSpec& v, double p, const SupOptions& opts = {});

/// (int_0^s mu)^(1/q) (int_0^s th)^(-1/p)
SupReport hardy_condition_A(const WeightSpec& mu, const WeightSpec& th, double p, double q,
                            const SupOptions& opts = {});
/// (int_s^inf mu t^-q)^(1/q) (int_0^s (avg th)^(-p') th)^(1/p')
SupReport hardy_condition_B(const WeightSpec& mu, const WeightSpec& th, double p, double q,
                            const SupOptions& opts = {});

/// s (int_0^(1/s) u*)^(1/q) (int_0^s W)^(-1/p) with W = [(1/v)*]^-1.
SupReport theorem1_condition(const DunklIndex& idx, const Curve& u_star, const Curve& inv_v_star_inv,
                             double p, double q, const SupOptions& opts = {});
/// (1/s) (int_0^(1/s) (u*)^(1-q'))^(-1/q') (int_0^s [(1/v)*]^(p'-1))^(1/p')
SupReport theorem2_condition_ii(const DunklIndex& idx, const Curve& u_star, const Curve& inv_v_star,
                                double p, double q, const SupOptions& opts = {});

/// Hypotheses of the transform inequality for 1 < p <= q: for q >= 2 the B_p
/// class of [(1/v)*]^-1 together with theorem1_condition, for q < 2 the
/// B_q' class of (u*)^(1-q') together with theorem2_condition_ii.
struct Theorem2Hypotheses {
  SupReport weight_class;
  SupReport condition;
  bool holds = false;
};
Theorem2Hypotheses theorem2_hypotheses(const DunklIndex& idx, const Curve& u_star,
                                       const Curve& inv_v_star, double p, double q,
                                       const SupOptions& opts = {});

struct PittIndex {
  bool admissible = false;
  double constraint_residual = 0.0;  // (alpha/q + beta/p)/N - (1 - 1/p - 1/q)
  std::string reason;
};
/// 1 < p <= q < inf, -N < alpha < 0, 0 < beta < N(p-1) and a vanishing residual.
PittIndex pitt_index_check(const DunklIndex& idx, double alpha, double beta, double p, double q);

/// u* for a radial weight u(x) = w(|x|); exact for power weights.
Curve weight_rearrangement(const DunklIndex& idx, const WeightSpec& w);
/// (1/v)* for a radial weight v(x) = w(|x|).
Curve reciprocal_rearrangement(const DunklIndex& idx, const WeightSpec& w);

}  // namespace dunkl
