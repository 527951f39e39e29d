#include "dunkl/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dunkl/error.hpp"

namespace dunkl {

namespace {

constexpr double kInf = quad::inf;

// |F| with power-law extrapolation past eval_limit, so level sets far out
// never trigger costly evaluations.
struct Magnitude {
  RadialFunction f;
  double limit = kInf;
  double at_limit = 0.0;
  double rate = 0.0;

  explicit Magnitude(const RadialFunction& g) : f(g) {
    const ProfileInfo& info = g.info();
    if (std::isfinite(info.eval_limit) && info.decay == Decay::algebraic) {
      limit = info.eval_limit;
      at_limit = std::abs(g(limit));
      rate = info.decay_rate;
    }
  }
  double operator()(double r) const {
    if (r <= limit) return std::abs(f(r));
    return at_limit * std::pow(r / limit, -rate);
  }
};

Rearrangement closed_form(const DunklIndex& idx, const RadialFunction& f) {
  const double m = idx.unit_ball();
  const double N = idx.N;
  const auto par = f.params();
  const double A = std::abs(par.amplitude);
  Rearrangement out;
  out.source = f;
  out.method = "closed_form";
  if (A == 0.0) return out;

  if (f.family() == "indicator") {
    const double T = m * std::pow(par.R, N);
    out.f_star = Curve::power(A, 0.0, 0.0, T);
    out.D = Curve::power(T, 0.0, 0.0, A);
    out.sup = A;
  } else if (f.family() == "gaussian") {
    const double s2 = par.sigma * par.sigma;
    quad::Hints th;
    th.scale = m * std::pow(par.sigma, N);
    out.f_star = Curve::function(
        [A, m, N, s2](double t) { return A * std::exp(-0.5 * std::pow(t / m, 2.0 / N) / s2); },
        0.0, kInf, th);
    quad::Hints sh;
    sh.scale = A;
    out.D = Curve::function(
        [A, m, N, s2](double s) {
          if (!(s < A)) return 0.0;
          if (s <= 0.0) return kInf;
          return m * std::pow(2.0 * s2 * std::log(A / s), 0.5 * N);
        },
        0.0, A, sh);
    out.sup = A;
  } else {  // power
    const double a = par.a;
    if (a > 0.0) fail(ErrorKind::divergence, "level sets of a growing power have infinite measure");
    if (a == 0.0) {
      out.f_star = Curve::power(A, 0.0);
      out.D = Curve::power(kInf, 0.0, 0.0, A);
      out.sup = A;
    } else {
      out.f_star = Curve::power(A * std::pow(m, -a / N), a / N);
      out.D = Curve::power(m * std::pow(A, -N / a), N / a);
      out.sup = kInf;
    }
  }
  return out;
}

// |F| non-increasing: f*(t) = |F|((t/m)^(1/N)), D from the level-set radius.
Rearrangement monotone(const DunklIndex& idx, const RadialFunction& f) {
  const ProfileInfo& info = f.info();
  if (info.decay == Decay::growing) {
    fail(ErrorKind::divergence, "level sets of a non-decaying profile have infinite measure");
  }
  const double m = idx.unit_ball();
  const double N = idx.N;
  const Magnitude mag(f);

  Rearrangement out;
  out.source = f;
  out.method = "monotone";
  out.sup = info.origin_exponent < 0.0 ? kInf : mag(0.0);

  const double t_end = std::isfinite(info.support_end) ? m * std::pow(info.support_end, N) : kInf;
  std::vector<double> t_edges{0.0};
  for (double b : info.breakpoints) {
    const double t = m * std::pow(b, N);
    if (t > t_edges.back() && t < t_end) t_edges.push_back(t);
  }
  t_edges.push_back(t_end);
  const double tscale = m * std::pow(info.scale, N);
  auto fstar = [mag, m, N](double t) { return mag(std::pow(t / m, 1.0 / N)); };
  for (std::size_t i = 0; i + 1 < t_edges.size(); ++i) {
    quad::Hints h;
    h.scale = tscale;
    auto seg = Curve::function(fstar, t_edges[i], t_edges[i + 1], h).segments().front();
    out.f_star.append(seg);
  }

  if (out.sup == 0.0) return Rearrangement{Curve{}, Curve{}, f, "monotone", 0.0};

  // inf{r : |F(r)| <= s}
  const double r0 = info.scale > 0.0 ? info.scale : 1.0;
  const double r_cap = info.support_end;
  auto radius = [mag, r0, r_cap](double s) {
    double lo = 0.0;
    double hi = std::min(r0, r_cap);
    int grow = 0;
    while (mag(hi) > s) {
      if (hi >= r_cap) return r_cap;
      lo = hi;
      hi = std::min(2.0 * hi, r_cap);
      if (++grow > 2000) fail(ErrorKind::divergence, "level set has infinite measure");
    }
    for (int it = 0; it < 1100 && hi - lo > 4e-16 * hi; ++it) {
      const double mid = lo == 0.0 ? 0.5 * hi : 0.5 * (lo + hi);
      if (mag(mid) > s) lo = mid; else hi = mid;
    }
    return lo == 0.0 ? hi : 0.5 * (lo + hi);
  };
  auto D = [radius, m, N](double s) {
    if (s <= 0.0) return kInf;
    return m * std::pow(radius(s), N);
  };

  // plateaus of |F| become jumps of D
  std::vector<double> s_edges{0.0};
  for (double b : info.breakpoints) {
    for (double v : {mag(b * (1.0 - 1e-12)), mag(b)}) {
      if (v > 0.0 && v < out.sup) s_edges.push_back(v);
    }
  }
  s_edges.push_back(out.sup);
  std::sort(s_edges.begin(), s_edges.end());
  s_edges.erase(std::unique(s_edges.begin(), s_edges.end()), s_edges.end());
  const double sscale = std::isfinite(out.sup) ? out.sup : mag(r0);
  for (std::size_t i = 0; i + 1 < s_edges.size(); ++i) {
    quad::Hints h;
    h.scale = sscale;
    out.D.append(Curve::function(D, s_edges[i], s_edges[i + 1], h).segments().front());
  }
  return out;
}

double cell_limit(const ProfileInfo& info) {
  switch (info.decay) {
    case Decay::compact:
      return info.support_end;
    case Decay::gaussian:
      return std::min(info.support_end, info.decay_rate * std::sqrt(2.0 * std::log(1e18)));
    case Decay::algebraic:
      return std::isfinite(info.eval_limit) ? info.eval_limit : 256.0 * info.scale;
    case Decay::growing:
      break;
  }
  fail(ErrorKind::divergence, "level sets of a non-decaying profile have infinite measure");
}

// Cells sorted by value. Past the cells an algebraic tail is modelled as
// E(r) |cos theta| with the phase equidistributed, E the power-law envelope
// fitted on the outermost cells.
Rearrangement sorted_cells(const DunklIndex& idx, const RadialFunction& f, int cells) {
  const ProfileInfo& info = f.info();
  const double m = idx.unit_ball();
  const double N = idx.N;
  const double r_end = cell_limit(info);

  std::vector<double> edges;
  // slow tails: half the cells on the inner 1/32, where the mass is
  const bool slow = info.decay == Decay::algebraic;
  const double split = slow ? r_end / 32.0 : r_end;
  const int inner = slow ? cells / 2 : cells;
  const double h = split / inner;
  for (int i = 0; i < inner; ++i) edges.push_back(i * h);
  const int outer = cells - inner;
  edges.push_back(split);
  for (int i = 1; i <= outer; ++i) edges.push_back(split + i * (r_end - split) / outer);
  for (double b : info.breakpoints) {
    if (b > 0.0 && b < r_end) edges.push_back(b);
  }
  for (int k = 1; k <= 40; ++k) edges.push_back(h * std::ldexp(1.0, -k));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges.back() = r_end;

  const std::size_t n = edges.size() - 1;
  std::vector<double> value(n);
  std::vector<double> measure(n);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::pow(edges[i], N);
    const double b = std::pow(edges[i + 1], N);
    value[i] = std::abs(f(std::pow(0.5 * (a + b), 1.0 / N)));
    measure[i] = m * (b - a);
  }
  if (info.decay == Decay::algebraic && info.decay_rate > 0.0) {
    double E0 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = 0.5 * (edges[i] + edges[i + 1]);
      if (r >= 0.9 * r_end) E0 = std::max(E0, value[i] * std::pow(r / r_end, info.decay_rate));
    }
    constexpr int kShells = 16;  // per octave
    constexpr int kPhases = 16;
    constexpr int kOctaves = 20;
    const double pi = std::acos(-1.0);
    for (int k = 0; k < kShells * kOctaves; ++k) {
      const double a = r_end * std::exp2(double(k) / kShells);
      const double b = r_end * std::exp2(double(k + 1) / kShells);
      const double r = std::pow(0.5 * (std::pow(a, N) + std::pow(b, N)), 1.0 / N);
      const double env = E0 * std::pow(r / r_end, -info.decay_rate);
      const double mu = m * (std::pow(b, N) - std::pow(a, N)) / kPhases;
      for (int j = 0; j < kPhases; ++j) {
        value.push_back(env * std::cos((j + 0.5) * pi / (2 * kPhases)));
        measure.push_back(mu);
      }
    }
  }
  const std::size_t total = value.size();
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return value[x] > value[y]; });

  // merge equal values into single steps
  std::vector<double> vals;
  std::vector<double> mass;
  for (std::size_t i : order) {
    if (!(value[i] > 0.0)) break;
    if (!vals.empty() && vals.back() == value[i]) {
      mass.back() += measure[i];
    } else {
      vals.push_back(value[i]);
      mass.push_back(measure[i]);
    }
  }

  Rearrangement out;
  out.source = f;
  out.method = "sorted_cells";
  if (vals.empty()) return out;
  out.sup = vals.front();

  std::vector<double> t_edges{0.0};
  for (double w : mass) t_edges.push_back(t_edges.back() + w);
  out.f_star = Curve::steps(t_edges, vals);

  // D on ascending s: D = cumulative mass of values above s
  const std::size_t K = vals.size();
  std::vector<double> s_edges{0.0};
  std::vector<double> d_vals;
  for (std::size_t j = K; j-- > 0;) {
    s_edges.push_back(vals[j]);
    d_vals.push_back(t_edges[j + 1]);
  }

  out.D = Curve::steps(s_edges, d_vals);
  return out;
}

}  // namespace

Rearrangement decreasing_rearrangement(const DunklIndex& idx, const RadialFunction& f,
                                       const RearrangeOptions& opts) {
  if (f.is_zero()) return Rearrangement{Curve{}, Curve{}, f, "closed_form", 0.0};
  const std::string& fam = f.family();
  if (fam == "indicator" || fam == "gaussian" || fam == "power") return closed_form(idx, f);
  if (f.info().monotone) return monotone(idx, f);
  if (opts.cells < 16) fail(ErrorKind::invalid_input, "too few rearrangement cells");
  return sorted_cells(idx, f, opts.cells);
}

LpIdentity lp_identity_check(const DunklIndex& idx, const RadialFunction& f, double p) {
  if (!(p >= 1.0)) fail(ErrorKind::invalid_input, "lp identity needs p >= 1");
  LpIdentity out;
  if (f.is_zero()) return out;
  const Rearrangement r = decreasing_rearrangement(idx, f);
  out.space_norm = radial_integral(idx, f, p);
  const Curve ramp = Curve::power(1.0, p - 1.0);
  out.layer_cake = p * integrate_product(ramp, 1.0, r.D, 1.0, 0.0, kInf);
  out.rearranged_norm = integrate_product(r.f_star, p, Curve::power(1.0, 0.0), 1.0, 0.0, kInf);
  return out;
}

}  // namespace dunkl
