// One line per acceptance criterion: PASS/FAIL, wall time against its budget, detail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>

#include "dunkl/besov.hpp"
#include "dunkl/cli.hpp"
#include "dunkl/error.hpp"
#include "dunkl/inequalities.hpp"
#include "dunkl/rearrange.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/weights.hpp"

using namespace dunkl;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

const std::vector<std::pair<int, double>> kIndices{{1, 0.5}, {2, 0.0}, {3, 1.0}};

// power weight as a log-log table over radii [1e-4, 1e4]
WeightSpec tabulated_power(double e) {
  std::vector<double> r;
  std::vector<double> w;
  for (int i = -80; i <= 80; ++i) {
    r.push_back(std::pow(10.0, i / 20.0));
    w.push_back(std::pow(r.back(), e));
  }
  return WeightSpec::tabulated(r, w);
}

Outcome closed_form_rearrangements() {
  double worst = 0.0;
  for (auto [d, g] : kIndices) {
    const DunklIndex idx = DunklIndex::make(d, g);
    const double N = idx.N;
    const double c = N / idx.d_k;
    for (double alpha : {-0.5, -1.5}) {
      const Curve u = weight_rearrangement(idx, tabulated_power(alpha));
      for (double t : geometric_grid(1e-3, 1e3, 61)) {
        worst = std::max(worst, rel(u(t), std::pow(c, alpha / N) * std::pow(t, alpha / N)));
      }
    }
    for (double beta : {0.5, 1.0}) {
      const Curve iv = reciprocal_rearrangement(idx, tabulated_power(beta));
      for (double t : geometric_grid(1e-3, 1e3, 61)) {
        worst = std::max(worst, rel(iv(t), std::pow(c, -beta / N) * std::pow(t, -beta / N)));
      }
    }
  }
  return {worst <= 1e-6, "max rel err " + fmt("%.2e", worst)};
}

Outcome reverse_form_equality() {
  double worst = 0.0;
  for (auto [d, g] : kIndices) {
    const DunklIndex idx = DunklIndex::make(d, g);
    for (double r : {0.5, 1.0, 2.0}) {
      for (double beta : {0.5, 1.0}) {
        const double ref = idx.d_k / (beta + idx.N) * std::pow(r, beta + idx.N);
        const RadialFunction f = RadialFunction::indicator(r);
        const Curve W = reciprocal_rearrangement(idx, WeightSpec::power(beta)).pow(-1.0);
        const double lhs = integrate_product(decreasing_rearrangement(idx, f).f_star, 1.0, W, 1.0, 0.0, quad::inf);
        const double rhs = radial_integral(idx, f, 1.0, WeightSpec::power(beta));
        worst = std::max({worst, rel(lhs, ref), rel(rhs, ref)});
      }
    }
  }
  return {worst <= 1e-8, "max rel err " + fmt("%.2e", worst)};
}

Outcome plancherel_inversion() {
  double plan = 0.0;
  double trip = 0.0;
  for (auto [d, g] : kIndices) {
    const DunklIndex idx = DunklIndex::make(d, g);
    for (const auto& f : {RadialFunction::gaussian(0.8), RadialFunction::power_gaussian(2.0, 1.2)}) {
      const RadialFunction F = transformed(idx, f);
      plan = std::max(plan, std::abs(lp_norm(idx, F, 2.0) / lp_norm(idx, f, 2.0) - 1.0));
      const TransformResult back = inverse_transform_radial(idx, F, geometric_grid(1e-2, 6.0, 40));
      for (std::size_t i = 0; i < back.grid.size(); ++i) {
        trip = std::max(trip, std::abs(back.values[i] - f(back.grid[i])));
      }
    }
  }
  const DunklIndex idx = DunklIndex::make(3, 1.0);
  const double R = 1.3;
  const auto s = geometric_grid(0.05, 50.0, 20);
  const TransformResult t = dunkl_transform_radial(idx, RadialFunction::indicator(R), s);
  double ind = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double x = R * s[i];
    const double nu1 = idx.nu + 1.0;
    const double j = std::tgamma(nu1 + 1.0) * std::pow(2.0 / x, nu1) * boost::math::cyl_bessel_j(nu1, x);
    ind = std::max(ind, std::abs(t.values[i] - ball_measure(idx, R) * j));
  }
  return {plan <= 1e-6 && trip <= 1e-5 && ind <= 1e-7,
          "plancherel " + fmt("%.1e", plan) + ", round trip " + fmt("%.1e", trip) + ", indicator " +
              fmt("%.1e", ind)};
}

Outcome bp_exactness() {
  int mismatches = 0;
  double worst = 0.0;
  for (double p : {1.5, 2.0, 3.0}) {
    for (double a : {-1.5, -0.5, 0.0, 0.5, p - 1.0, p}) {
      const SupReport r = bp_check(WeightSpec::power(a), p);
      const SupReport e = bp_equivalent_condition(WeightSpec::power(a), p);
      const bool member = a > -1.0 && a < p - 1.0;
      if (r.finite() != member || e.verdict != r.verdict) ++mismatches;
      if (member) worst = std::max(worst, rel(r.sup, (a + 1.0) / (p - 1.0 - a)));
    }
  }
  return {mismatches == 0 && worst <= 1e-6,
          std::to_string(mismatches) + " verdict mismatches, sup rel err " + fmt("%.1e", worst)};
}

Outcome condition_matches_constraint() {
  const DunklIndex idx = DunklIndex::make(3, 0.0);
  const double N = idx.N;
  int tuples = 0;
  int mismatches = 0;
  const std::vector<std::pair<double, double>> pq{{1.5, 2.0}, {2.0, 2.0}, {2.0, 3.0}};
  const std::vector<std::vector<double>> alphas{{-2.8, -2.4, -2.0, -1.6, -1.2},
                                                {-2.5, -2.0, -1.5, -1.0, -0.5},
                                                {-2.5, -2.0, -1.5, -1.0, -0.5}};
  for (std::size_t k = 0; k < pq.size(); ++k) {
    const auto [p, q] = pq[k];
    for (double alpha : alphas[k]) {
      const double beta0 = p * (N * (1.0 - 1.0 / p - 1.0 / q) - alpha / q);
      const double off = beta0 + 0.1 < N * (p - 1.0) ? beta0 + 0.1 : beta0 - 0.1;
      for (double beta : {beta0, off}) {
        const SupReport r = theorem1_condition(idx, weight_rearrangement(idx, WeightSpec::power(alpha)),
                                               reciprocal_rearrangement(idx, WeightSpec::power(beta)).pow(-1.0),
                                               p, q);
        ++tuples;
        if (r.finite() != pitt_index_check(idx, alpha, beta, p, q).admissible) ++mismatches;
      }
    }
  }
  return {mismatches == 0, std::to_string(mismatches) + " of " + std::to_string(tuples) + " tuples disagree"};
}

Outcome pitt_dilation() {
  const DunklIndex idx = DunklIndex::make(3, 0.0);
  const RadialFunction f = RadialFunction::power_gaussian(1.0);
  struct T {
    double p, q, alpha, beta;
  };
  const std::vector<T> good{{2, 2, -1, 1},     {2, 2, -2, 2},      {2, 2, -0.5, 0.5},
                            {1.5, 2, -2, 0.75}, {2, 3, -1.5, 2.0}, {1.5, 1.5, -2.2, 0.7}};
  double drift = 0.0;
  for (const T& t : good) {
    const double base = verify_pitt(idx, f, t.alpha, t.beta, t.p, t.q).ratio;
    for (double lam : {0.5, 2.0, 4.0}) {
      drift = std::max(drift, rel(verify_pitt(idx, f.dilated(lam), t.alpha, t.beta, t.p, t.q).ratio, base));
    }
  }
  const T bad{2, 2, -1, 1.5};
  const double res = pitt_index_check(idx, bad.alpha, bad.beta, bad.p, bad.q).constraint_residual;
  const double base = pitt_sides(idx, f, bad.alpha, bad.beta, bad.p, bad.q).ratio;
  double scaling = 0.0;
  for (double lam : {0.5, 2.0, 4.0}) {
    const double r = pitt_sides(idx, f.dilated(lam), bad.alpha, bad.beta, bad.p, bad.q).ratio;
    scaling = std::max(scaling, rel(r / base, std::pow(lam, idx.N * res)));
  }
  return {drift <= 1e-3 && scaling <= 1e-3,
          "admissible drift " + fmt("%.1e", drift) + ", inadmissible scaling err " + fmt("%.1e", scaling)};
}

Outcome hlp_degenerate() {
  const DunklIndex idx = DunklIndex::make(3, 0.5);
  std::vector<double> r;
  std::vector<double> v;
  for (int i = 1; i <= 160; ++i) {
    r.push_back(0.05 * i);
    v.push_back(std::exp(-r.back() * r.back() / 2.0) * (1.0 + 0.3 * std::cos(r.back())));
  }
  const std::vector<RadialFunction> fams{RadialFunction::gaussian(1.0), RadialFunction::indicator(1.0),
                                         RadialFunction::power_gaussian(1.0),
                                         RadialFunction::power_gaussian(-0.5), RadialFunction::tabulated(r, v)};
  double worst = 0.0;
  for (const auto& f : fams) worst = std::max(worst, std::abs(verify_hlp(idx, f, 2.0).ratio - 1.0));
  return {worst <= 1e-6, "max |ratio - 1| " + fmt("%.1e", worst) + " over 5 families"};
}

Outcome necessity_chain() {
  const DunklIndex idx = DunklIndex::make(3, 0.0);
  int broken = 0;
  std::string margins;
  for (double r : {0.5, 1.0, 4.0}) {
    const NecessityProbe pr =
        theorem1_necessity_probe(idx, r, WeightSpec::power(-1.0), WeightSpec::power(1.0), 2.0, 2.0, 50);
    if (!pr.all_ok()) ++broken;
    margins += (margins.empty() ? "" : " ") +
               fmt("%.2g", std::min({pr.bessel_margin, pr.transform_margin, pr.distribution_margin}));
  }
  return {broken == 0, std::to_string(broken) + " radii with a broken link; min margins " + margins};
}

Outcome theorem3_desk() {
  const DunklIndex idx = DunklIndex::make(3, 0.0);
  const PhiSpec phi = make_phi(idx);
  const RadialFunction f = RadialFunction::gaussian(1.0);
  auto check = [&](double p, double q, double alpha, double beta, std::string& out) {
    const Theorem3Report t = verify_theorem3(BesovParams::make(idx, p, q, alpha, beta), f, phi);
    const double drift = rel(t.annulus_sup, t.annulus_sup_refined);
    out += "besov " + (t.besov.converged() ? fmt("%.4g", t.besov.value) : std::string("not converged")) +
           " (slopes " + fmt("%.3g", t.besov.slope_low) + "/" + fmt("%.3g", t.besov.slope_high) + "), L1 " +
           fmt("%.4g", t.transform_l1_norm) + ", annulus drift " + fmt("%.1e", drift);
    return t.besov.converged() && std::isfinite(t.transform_l1_norm) && drift <= 0.1 && t.conclusion;
  };
  std::string main_detail;
  std::string corner_detail;
  const bool main_ok = check(2.0, 2.0, -0.5, 0.5, main_detail);
  const bool corner_ok = check(1.5, 1.5, idx.N * (1.5 - 2.0), 0.0, corner_detail);
  return {main_ok && corner_ok, "main: " + main_detail + "; corner: " + corner_detail};
}

Outcome cli_determinism() {
  const std::vector<std::vector<std::string>> runs{
      {"bp-check", "--weight", "power:-0.5", "--p", "2"},
      {"hardy-check", "--mu", "power:1", "--theta", "power:0.5"},
      {"transform", "--family", "indicator", "--d", "2", "--gamma", "0.5"},
      {"rearrange", "--family", "power_gaussian", "--a", "1"},
      {"pitt-verify", "--d", "3", "--gamma", "0", "--p", "2", "--q", "2", "--alpha", "-1", "--beta", "1",
       "--family", "gaussian"},
      {"hlp-verify", "--family", "indicator"},
      {"thm1-verify", "--family", "power_gaussian", "--a", "0.5"},
      {"necessity-probe", "--r", "0.5"},
      {"besov-verify"},
      {"sweep", "--target", "thm1", "--alpha", "-2:-0.5:4", "--beta", "0.5,1.5"},
  };
  int differ = 0;
  for (auto args : runs) {
    args.insert(args.begin(), "dunkl_cli");
    std::string first;
    for (int k = 0; k < 2; ++k) {
      std::ostringstream out;
      std::ostringstream err;
      const int code = cli::run(args, out, err);
      if (code != 0) return {false, args[1] + " exited with " + std::to_string(code) + ": " + err.str()};
      if (k == 0) first = out.str();
      else if (out.str() != first) ++differ;
    }
  }
  return {differ == 0, std::to_string(differ) + " of " + std::to_string(runs.size()) + " commands differ"};
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  struct Criterion {
    int id;
    const char* name;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "closed-form rearrangements of power weights", 5, closed_form_rearrangements},
      {2, "reverse Hardy-Littlewood equality for an indicator", 1, reverse_form_equality},
      {3, "Plancherel, inversion and the indicator transform", 30, plancherel_inversion},
      {4, "B_p class exactness for power weights", 5, bp_exactness},
      {5, "q >= 2 weight condition matches the index constraint", 10, condition_matches_constraint},
      {6, "Pitt ratio under dilation", 60, pitt_dilation},
      {7, "Hardy-Littlewood-Paley at p = 2", 10, hlp_degenerate},
      {8, "necessity chain", 30, necessity_chain},
      {9, "Besov seminorm and integrability of the transform", 120, theorem3_desk},
      {10, "byte-identical CLI reports", 120, cli_determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget;
    const bool pass = o.ok && in_time;
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s [%.2f s / %.0f s] %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.budget, o.detail.c_str(), in_time ? "" : " (over budget)");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
