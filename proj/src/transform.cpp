#include "dunkl/transform.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "dunkl/error.hpp"

namespace dunkl {

namespace {

constexpr double kInf = quad::inf;

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

}  // namespace

double conjugate_exponent(double p) {
  if (!(p >= 1.0)) fail(ErrorKind::domain, "exponent must be >= 1");
  return p == 1.0 ? kInf : p / (p - 1.0);
}

TransformKernel::TransformKernel(const DunklIndex& idx, const RadialFunction& f, TransformOptions opts)
    : idx_(idx), f_(f), opts_(opts), bessel_(idx.nu) {
  if (f.is_zero()) return;
  const ProfileInfo& info = f.info();
  const double a = info.origin_exponent;
  if (!(a + idx.N > 0.0)) fail(ErrorKind::divergence, f.description() + " is not integrable at the origin");

  switch (info.decay) {
    case Decay::compact:
      r_end_ = info.support_end;
      break;
    case Decay::gaussian: {
      const double sigma = info.decay_rate;
      const double growth = idx.N + std::max(a, 0.0);
      double x = 9.0;
      for (int i = 0; i < 6; ++i) {
        x = std::sqrt(2.0 * (-std::log(opts_.truncation) + growth * std::log(std::max(x, 1.0))));
      }
      r_end_ = std::min(info.support_end, sigma * x);
      break;
    }
    case Decay::algebraic:
      if (!(info.decay_rate > idx.N)) {
        fail(ErrorKind::divergence, f.description() + " is not integrable at infinity");
      }
      windowed_ = true;
      r_end_ = std::isfinite(info.eval_limit) ? info.eval_limit : 256.0 * info.scale;
      r_end_ = std::min(r_end_, info.support_end);
      if (std::isfinite(info.support_end) && info.support_end <= r_end_) windowed_ = false;
      break;
    case Decay::growing:
      fail(ErrorKind::divergence, f.description() + " does not decay");
  }
  if (!(r_end_ > 0.0) || !std::isfinite(r_end_)) {
    fail(ErrorKind::invalid_input, "cannot determine the extent of " + f.description());
  }

  base_edges_.push_back(0.0);
  for (double b : info.breakpoints) {
    if (b > 0.0 && b < r_end_) base_edges_.push_back(b);
  }
  double h = 0.5 * info.scale;
  if (r_end_ / h > 4000.0) h = r_end_ / 4000.0;
  for (double r = h; r < r_end_; r += h) base_edges_.push_back(r);
  if (windowed_) {
    for (int j = 0; j < 5; ++j) base_edges_.push_back(std::ldexp(r_end_, j - 5));
  }
  base_edges_.push_back(r_end_);
  std::sort(base_edges_.begin(), base_edges_.end());
  base_edges_.erase(std::unique(base_edges_.begin(), base_edges_.end()), base_edges_.end());

  if (near_integer(idx.N) && idx.N <= 33.0) radial_power_ = static_cast<int>(std::round(idx.N)) - 1;
  const double e = a + idx.N - 1.0;
  if (e < 0.0 || !near_integer(e)) {
    grade_levels_ = std::min(400, static_cast<int>(std::ceil(57.0 / (a + idx.N))));
  }
}

double TransformKernel::integrand(double r, double s) const {
  const double v = f_(r);
  if (v == 0.0) return 0.0;
  double w = 1.0;
  if (radial_power_ >= 0) {
    for (int i = 0; i < radial_power_; ++i) w *= r;
  } else {
    w = std::pow(r, idx_.N - 1.0);
  }
  return v * bessel_.j(r * s) * w;
}

std::vector<double> TransformKernel::panel_edges(double s) const {
  std::vector<double> zeros;
  if (s > 0.0) {
    // past the first few dozen lobes a panel spans a full period
    for (int k = 1;; k += k < 64 ? 1 : 2) {
      const double z = specfun::bessel_zero_estimate(idx_.nu, k) / s;
      if (z >= r_end_) break;
      zeros.push_back(z);
    }
  }
  std::vector<double> edges;
  edges.reserve(base_edges_.size() + zeros.size() + grade_levels_);
  std::merge(base_edges_.begin(), base_edges_.end(), zeros.begin(), zeros.end(),
             std::back_inserter(edges));
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (grade_levels_ > 0 && edges.size() > 1) {
    const double first = edges[1];
    std::vector<double> graded;
    for (int k = grade_levels_; k >= 1; --k) graded.push_back(std::ldexp(first, -k));
    edges.insert(edges.begin() + 1, graded.begin(), graded.end());
  }
  return edges;
}

quad::Result TransformKernel::integrate_panels(const std::vector<double>& edges, double s,
                                               double window_start) const {
  const double window_end = 2.0 * window_start;
  auto g = [&](double r) {
    double v = integrand(r, s);
    if (r > window_start) v *= quad::smooth_cutoff((r - window_start) / window_start);
    return v;
  };
  quad::Result out;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double a = edges[i];
    const double b = edges[i + 1];
    if (a >= window_end) break;
    const quad::Result panel = quad::kronrod21(g, a, b);
    out.value += panel.value;
    out.error += panel.error;
  }
  return out;
}

quad::Result TransformKernel::operator()(double s) const {
  if (f_.is_zero()) return {};
  if (!(s >= 0.0)) fail(ErrorKind::domain, "frequency must be >= 0");
  const auto edges = panel_edges(s);
  quad::Result res;
  if (!windowed_) {
    res = integrate_panels(edges, s, kInf);
  } else {
    std::vector<double> partial;
    for (int j = 0; j < 5; ++j) {
      const quad::Result p = integrate_panels(edges, s, std::ldexp(r_end_, j - 5));
      partial.push_back(p.value);
      res.error = std::max(res.error, p.error);
    }
    res.value = quad::wynn_epsilon(partial);
    const double coarser = quad::wynn_epsilon(std::span<const double>(partial).first(4));
    res.error += std::abs(res.value - coarser);
  }
  res.value *= idx_.d_k;
  res.error *= idx_.d_k;
  return res;
}

// ---------------------------------------------------------------------------

void TransformResult::write_csv(std::ostream& out) const {
  const auto old = out.precision(17);
  out << "s,value,error_estimate\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out << grid[i] << ',' << values[i] << ',' << errors[i] << '\n';
  }
  out.precision(old);
}

std::vector<double> default_frequency_grid() { return geometric_grid(1e-3, 1e2, 257); }

namespace {

TransformResult finish(const RadialFunction& f, const std::vector<double>& grid,
                       std::vector<double> values, std::vector<double> errors) {
  TransformResult out;
  out.grid = grid;
  out.input = f.description();
  out.quadrature_error_estimate = errors.empty() ? 0.0 : *std::max_element(errors.begin(), errors.end());
  std::vector<double> g;
  std::vector<double> v;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] > 0.0) {
      g.push_back(grid[i]);
      v.push_back(values[i]);
    }
  }
  if (!g.empty()) out.output = RadialFunction::tabulated(std::move(g), std::move(v));
  out.values = std::move(values);
  out.errors = std::move(errors);
  return out;
}

void check_grid(const std::vector<double>& grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0) || (i > 0 && !(grid[i] > grid[i - 1]))) {
      fail(ErrorKind::invalid_input, "transform grid must be non-negative and strictly increasing");
    }
  }
}

}  // namespace

TransformResult dunkl_transform_radial(const DunklIndex& idx, const RadialFunction& f,
                                       const std::vector<double>& s_grid) {
  check_grid(s_grid);
  const TransformKernel kernel(idx, f);
  std::vector<double> values(s_grid.size());
  std::vector<double> errors(s_grid.size());
  const long n = static_cast<long>(s_grid.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    const quad::Result r = kernel(s_grid[i]);
    values[i] = r.value;
    errors[i] = r.error;
  }
  return finish(f, s_grid, std::move(values), std::move(errors));
}

TransformResult dunkl_transform_radial_serial(const DunklIndex& idx, const RadialFunction& f,
                                              const std::vector<double>& s_grid) {
  check_grid(s_grid);
  const TransformKernel kernel(idx, f);
  std::vector<double> values(s_grid.size());
  std::vector<double> errors(s_grid.size());
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    const quad::Result r = kernel(s_grid[i]);
    values[i] = r.value;
    errors[i] = r.error;
  }
  return finish(f, s_grid, std::move(values), std::move(errors));
}

TransformResult inverse_transform_radial(const DunklIndex& idx, const RadialFunction& g,
                                         const std::vector<double>& r_grid) {
  return dunkl_transform_radial(idx, g, r_grid);
}

RadialFunction transformed(const DunklIndex& idx, const RadialFunction& f, const TransformedOptions& opts) {
  if (f.is_zero()) return {};
  auto kernel = std::make_shared<const TransformKernel>(idx, f);
  auto eval = [kernel](double s) { return (*kernel)(s).value; };
  const double u = 1.0 / f.info().scale;

  // Peak magnitude from a coarse look.
  double peak = std::abs(eval(0.0));
  for (double s : geometric_grid(0.05 * u, 8.0 * u, 24)) peak = std::max(peak, std::abs(eval(s)));
  if (peak == 0.0) return {};
  const double tol = opts.rel_tol * peak;

  // Extent: double until a whole octave is negligible.
  const double cap = opts.cap_factor * u;
  double hi = 8.0 * u;
  bool lazy = false;
  for (;;) {
    double octave = 0.0;
    for (int i = 0; i <= 32; ++i) octave = std::max(octave, std::abs(eval(hi * (0.5 + i / 64.0))));
    if (octave < 1e-2 * tol) break;
    if (hi >= cap) {
      lazy = true;
      break;
    }
    hi = std::min(2.0 * hi, cap);
  }

  ProfileInfo info;
  info.scale = u;
  info.decay = Decay::compact;
  if (lazy) {
    // decay rate from the mean square over the last two octaves, which does
    // not depend on where the oscillation peaks fall
    double a1 = 0.0;
    double a2 = 0.0;
    // golden-ratio points stay equidistributed against any oscillation period
    const int n = 128;
    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int i = 0; i < n; ++i) {
      const double x = std::fmod(0.5 + i * golden, 1.0);
      const double v1 = eval(hi * (0.25 + 0.25 * x));
      const double v2 = eval(hi * (0.5 + 0.5 * x));
      a1 += v1 * v1;
      a2 += 2.0 * v2 * v2;
    }
    info.decay = Decay::algebraic;
    info.decay_rate = a2 > 0.0 ? 0.5 * (1.0 - std::log2(a2 / a1)) : 64.0;
    info.eval_limit = hi;
  }
  ChebyshevOptions copts;
  copts.abs_tol = tol;
  const std::string desc = "transform(" + f.description() + ")";
  RadialFunction table =
      chebyshev_table(eval, hi, info, desc, copts, lazy ? RadialFunction::Eval(eval) : RadialFunction::Eval());

  // Monotone envelope check on a fine sample.
  bool monotone = true;
  double prev = std::abs(table(0.0));
  const int samples = 8192;
  for (int i = 1; i <= samples && monotone; ++i) {
    const double v = std::abs(table(hi * i / samples));
    if (v > prev + 1e-12 * peak) monotone = false;
    prev = std::min(prev, v);
  }
  if (lazy) return table;

  // trim the noise floor so integrators and later transforms stop early
  double cut = hi;
  const int fine = 4096;
  for (int i = fine; i > 0; --i) {
    if (std::abs(table(hi * i / fine)) > 1e-2 * tol) {
      cut = std::min(hi, hi * (i + 1) / fine);
      break;
    }
  }
  ProfileInfo trimmed = table.info();
  trimmed.monotone = monotone;
  trimmed.support_end = cut;
  trimmed.breakpoints.erase(std::remove_if(trimmed.breakpoints.begin(), trimmed.breakpoints.end(),
                                           [cut](double b) { return b >= cut; }),
                            trimmed.breakpoints.end());
  return RadialFunction::custom([table, cut](double s) { return s < cut ? table(s) : 0.0; },
                                std::move(trimmed), desc);
}

RadialFunction convolve_radial(const DunklIndex& idx, const RadialFunction& f, const RadialFunction& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const RadialFunction prod = product(transformed(idx, f), transformed(idx, g));
  return transformed(idx, prod);
}

HausdorffYoungReport hausdorff_young_report(const DunklIndex& idx, const RadialFunction& f, double p) {
  if (!(p > 1.0 && p <= 2.0)) fail(ErrorKind::domain, "Hausdorff-Young needs 1 < p <= 2");
  HausdorffYoungReport rep;
  rep.p = p;
  if (f.is_zero()) return rep;
  const double pc = conjugate_exponent(p);
  rep.lhs = lp_norm(idx, transformed(idx, f), pc);
  rep.rhs = lp_norm(idx, f, p);
  rep.ratio = rep.lhs / rep.rhs;
  return rep;
}

}  // namespace dunkl
