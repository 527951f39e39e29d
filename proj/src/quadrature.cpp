#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>

#include "dunkl/error.hpp"

namespace dunkl::quad {
namespace {

constexpr int kMaxRule = 64;
constexpr int kPanelRule = 15;

Rule build_rule(int n) {
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

struct Interval {
  double a, b;
  double value;  // refined estimate (sum over halves)
  double left, right;
  double error;
  bool operator<(const Interval& other) const { return error < other.error; }
};

Interval make_interval(const Integrand& f, double a, double b, double whole) {
  const Rule& rule = gauss_legendre(kPanelRule);
  const double m = 0.5 * (a + b);
  Interval iv{a, b, 0.0, apply(rule, f, a, m), apply(rule, f, m, b), 0.0};
  iv.value = iv.left + iv.right;
  iv.error = std::abs(iv.value - whole);
  if (!std::isfinite(iv.value)) iv.error = inf;
  return iv;
}

// Adds dyadic edges so that wide ranges are not handed to a single panel.
std::vector<double> refine_edges(double lo, double hi, const std::vector<double>& breakpoints) {
  std::vector<double> edges{lo, hi};
  for (double bp : breakpoints) {
    if (bp > lo && bp < hi) edges.push_back(bp);
  }
  if (lo > 0.0) {
    for (double e = 2.0 * lo; e < hi && edges.size() < 4096; e *= 2.0) edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Result adaptive_panel(const Integrand& f, double lo, double hi, const Hints& hints,
                      const Options& opts) {
  if (!(hi > lo)) return {};
  const auto edges = refine_edges(lo, hi, hints.breakpoints);
  return adaptive(f, edges, opts);
}

bool ratios_settled(const std::vector<double>& panels, double tol) {
  const std::size_t n = panels.size();
  if (n < 6) return false;
  std::array<double, 3> r{};
  for (int i = 0; i < 3; ++i) {
    const double den = panels[n - 2 - i];
    if (den == 0.0) return false;
    r[i] = panels[n - 1 - i] / den;
    if (!(r[i] > 0.0 && r[i] < 1.0)) return false;
  }
  return std::abs(r[0] - r[1]) <= tol * r[0] && std::abs(r[1] - r[2]) <= tol * r[0];
}

bool growing(const std::vector<double>& panels) {
  const std::size_t n = panels.size();
  if (n < 4) return false;
  for (std::size_t i = n - 3; i < n; ++i) {
    if (!(std::abs(panels[i]) >= std::abs(panels[i - 1]) * (1.0 - 1e-12)) ) return false;
    if (panels[i] == 0.0) return false;
  }
  return true;
}

}  // namespace

const Rule& gauss_legendre(int n) {
  static const std::array<Rule, kMaxRule + 1> rules = [] {
    std::array<Rule, kMaxRule + 1> all{};
    for (int k = 1; k <= kMaxRule; ++k) all[k] = build_rule(k);
    return all;
  }();
  if (n < 1 || n > kMaxRule) throw std::out_of_range("Gauss-Legendre order out of range");
  return rules[n];
}

Result adaptive(const Integrand& f, std::span<const double> edges, const Options& opts) {
  if (edges.size() < 2) return {};
  const Rule& rule = gauss_legendre(kPanelRule);
  std::priority_queue<Interval> heap;
  double total = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double a = edges[i];
    const double b = edges[i + 1];
    if (!(b > a)) continue;
    Interval iv = make_interval(f, a, b, apply(rule, f, a, b));
    total += iv.value;
    error += iv.error;
    heap.push(iv);
  }
  int count = static_cast<int>(heap.size());
  while (!heap.empty() && count < opts.max_intervals) {
    const double target = std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
    if (error <= target) break;
    Interval worst = heap.top();
    if (worst.b - worst.a <= 1e-15 * std::max(std::abs(worst.a), std::abs(worst.b))) break;
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    Interval left = make_interval(f, worst.a, m, worst.left);
    Interval right = make_interval(f, m, worst.b, worst.right);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }
  // Re-sum to shed accumulated rounding from the running updates.
  Result out;
  while (!heap.empty()) {
    out.value += heap.top().value;
    out.error += heap.top().error;
    heap.pop();
  }
  return out;
}

double smooth_cutoff(double x) {
  if (x <= 0.0) return 1.0;
  if (x >= 1.0) return 0.0;
  const double a = std::exp(-1.0 / (1.0 - x));
  const double b = std::exp(-1.0 / x);
  return a / (a + b);
}

double wynn_epsilon(std::span<const double> seq) {
  const std::size_t n = seq.size();
  if (n == 0) return 0.0;
  if (n < 3) return seq.back();
  // e[k] holds the current column of the epsilon table.
  std::vector<double> prev(n + 1, 0.0);  // epsilon_{-1}
  std::vector<double> cur(seq.begin(), seq.end());
  double best = seq.back();
  for (std::size_t col = 1; col < n; ++col) {
    std::vector<double> next(n - col);
    for (std::size_t i = 0; i + col < n; ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0.0) return cur[i + 1];
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (col % 2 == 0) best = cur.back();
  }
  return best;
}

Result integrate(const Integrand& f, double lo, double hi, const Hints& hints,
                 const Options& opts) {
  if (!(lo >= 0.0)) fail(ErrorKind::invalid_input, "integration lower limit must be >= 0");
  const double end = std::min(hi, hints.support_end);
  if (!(end > lo)) return {};

  // Finite interval away from the origin: plain adaptive quadrature.
  if (lo > 0.0 && std::isfinite(end)) return adaptive_panel(f, lo, end, hints, opts);

  double first_bp = inf;
  double last_bp = 0.0;
  for (double bp : hints.breakpoints) {
    if (bp > lo && bp < end) {
      first_bp = std::min(first_bp, bp);
      last_bp = std::max(last_bp, bp);
    }
  }
  const double limit = std::min(end, hints.eval_limit);

  double anchor = lo;
  if (lo == 0.0) anchor = std::min({hints.scale, first_bp, 0.5 * limit});
  double top = std::isfinite(end) ? end : std::min(std::max({anchor, hints.scale, last_bp}), limit);
  // leave room for the windowed extrapolation scales
  if (!std::isfinite(end) && std::isfinite(hints.eval_limit)) top = std::min(top, limit / 64.0);
  if (top < anchor) top = anchor;

  Result bulk = adaptive_panel(f, anchor, top, hints, opts);
  double total = bulk.value;
  double error = bulk.error;
  const double stop_frac = std::min(1e-16, opts.rel_tol * 1e-4);

  auto panel_opts = [&]() {
    Options o = opts;
    o.abs_tol = std::max(opts.abs_tol, 1e-3 * opts.rel_tol * std::abs(total));
    return o;
  };

  // Upper tail.
  if (!std::isfinite(end)) {
    std::vector<double> panels;
    std::vector<double> cumulative;  // integral over [0 or anchor, top * 2^k]
    double a = top;
    bool done = false;
    for (int k = 0; k < 400 && !done; ++k) {
      const double b = 2.0 * a;
      if (b > hints.eval_limit) break;
      Result p = adaptive_panel(f, a, b, hints, panel_opts());
      if (!std::isfinite(p.value)) fail(ErrorKind::divergent_tail, "integrand not finite in tail");
      cumulative.push_back(total);
      panels.push_back(p.value);
      total += p.value;
      error += p.error;
      a = b;
      const std::size_t n = panels.size();
      if (n >= 2 && std::abs(panels[n - 1]) <= stop_frac * std::abs(total) &&
          std::abs(panels[n - 2]) <= stop_frac * std::abs(total)) {
        done = true;
      } else if (n >= 3 && total == 0.0 && panels[n - 1] == 0.0 && panels[n - 2] == 0.0 &&
                 panels[n - 3] == 0.0) {
        done = true;
      } else if (ratios_settled(panels, 1e-4)) {
        const double r = panels.back() / panels[n - 2];
        const double tail = panels.back() * r / (1.0 - r);
        total += tail;
        error += std::abs(tail) * 1e-3;
        done = true;
      } else if (n >= 40 && growing(panels)) {
        fail(ErrorKind::divergent_tail, "integral diverges at infinity");
      }
    }
    if (!done) {
      if (!std::isfinite(hints.eval_limit)) {
        fail(ErrorKind::divergent_tail, "integral did not converge at infinity");
      }
      // Smooth-window partial integrals at the last few dyadic scales, then
      // Wynn extrapolation in the scale.
      cumulative.push_back(total);
      const std::size_t n = cumulative.size();  // cumulative[i] = integral up to top * 2^i
      const std::size_t m = std::min<std::size_t>(5, n - 1);
      if (m < 3) fail(ErrorKind::divergent_tail, "evaluation limit too close to reach convergence");
      std::vector<double> windowed;
      for (std::size_t j = n - 1 - m; j + 1 < n; ++j) {
        const double s = top * std::ldexp(1.0, static_cast<int>(j));
        const Integrand g = [&f, s](double x) { return f(x) * smooth_cutoff((x - s) / s); };
        Options wo = panel_opts();
        wo.max_intervals = opts.max_intervals;
        Result w = adaptive_panel(g, s, 2.0 * s, hints, wo);
        windowed.push_back(cumulative[j] + w.value);
      }
      const double extrapolated = wynn_epsilon(windowed);
      const double coarser = wynn_epsilon(std::span<const double>(windowed).first(windowed.size() - 1));
      error += std::abs(extrapolated - coarser);
      total = extrapolated;
    }
  }

  // Origin.
  if (lo == 0.0) {
    std::vector<double> panels;
    double b = anchor;
    bool done = false;
    for (int k = 0; k < 1070 && !done; ++k) {
      const double a = 0.5 * b;
      Result p = adaptive_panel(f, a, b, hints, panel_opts());
      if (!std::isfinite(p.value)) fail(ErrorKind::divergence, "integrand not finite near origin");
      panels.push_back(p.value);
      total += p.value;
      error += p.error;
      b = a;
      const std::size_t n = panels.size();
      if (n >= 2 && std::abs(panels[n - 1]) <= stop_frac * std::abs(total) &&
          std::abs(panels[n - 2]) <= stop_frac * std::abs(total)) {
        done = true;
      } else if (n >= 3 && total == 0.0 && panels[n - 1] == 0.0 && panels[n - 2] == 0.0 &&
                 panels[n - 3] == 0.0) {
        done = true;
      } else if (ratios_settled(panels, 1e-10)) {
        const double r = panels.back() / panels[n - 2];
        const double rest = panels.back() * r / (1.0 - r);
        total += rest;
        error += std::abs(rest) * 1e-9;
        done = true;
      } else if (n >= 60 && growing(panels)) {
        fail(ErrorKind::divergence, "integral diverges at the origin");
      }
    }
    if (!done) fail(ErrorKind::divergence, "integral did not converge at the origin");
  }
  return {total, error};
}

}  // namespace dunkl::quad
