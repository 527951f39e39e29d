#include "dunkl/besov.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/error.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/weights.hpp"

namespace dunkl {

namespace {

constexpr double kInf = quad::inf;

double fitted_slope(const std::vector<double>& x, const std::vector<double>& y, std::size_t from,
                    std::size_t to) {
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = from; i < to; ++i) {
    if (y[i] > 0.0 && std::isfinite(y[i])) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  if (lx.size() < 2) return 0.0;
  const double n = static_cast<double>(lx.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i] / n;
    my += ly[i] / n;
  }
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

double smoothed_norm(const BesovParams& par, const RadialFunction& Ff, const PhiSpec& phi, double t) {
  return lp_norm(par.idx, smoothed(par.idx, Ff, phi, t), par.p, WeightSpec::power(par.beta));
}

double annulus_lhs(const BesovParams& par, const RadialFunction& Ff, double t) {
  const double lo = 0.5 / t;
  const double hi = 1.0 / t;
  const double e = par.alpha + 2.0 * par.q + par.idx.N - 1.0;
  quad::Hints h;
  h.scale = lo;
  for (double b : Ff.info().breakpoints) {
    if (b > lo && b < hi) h.breakpoints.push_back(b);
  }
  const double I = quad::integrate(
      [&](double s) { return std::pow(std::abs(Ff(s)), par.q) * std::pow(s, e); }, lo, hi, h)
                       .value;
  return t * t * std::pow(par.idx.d_k * I, 1.0 / par.q);
}

}  // namespace

BesovParams BesovParams::make(const DunklIndex& idx, double p, double q, double alpha, double beta) {
  BesovParams par;
  par.idx = idx;
  par.p = p;
  par.q = q;
  par.alpha = alpha;
  par.beta = beta;
  par.delta = ((q - 1.0) * idx.N - alpha) / q;
  const double N = idx.N;
  auto reject = [](const std::string& why) { fail(ErrorKind::inadmissible_parameters, why); };
  if (!(p > 1.0) || p > 2.0) reject("need 1 < p <= 2");
  if (!(q >= p) || !std::isfinite(q)) reject("need p <= q < inf");
  par.hlp_corner = beta == 0.0 && p == q && std::abs(alpha - N * (p - 2.0)) <= 1e-12 * N;
  if (par.hlp_corner) return par;
  if (!(alpha > -N) || !(alpha < 0.0)) reject("need -N < alpha < 0");
  if (!(beta > 0.0) || !(beta < N * (p - 1.0))) reject("need 0 < beta < N(p-1)");
  if (!((p + alpha) / (p - 1.0) < N)) reject("need (p + alpha)/(p - 1) < N");
  const PittIndex check = pitt_index_check(idx, alpha, beta, p, q);
  if (!check.admissible) reject(check.reason);
  return par;
}

PhiSpec make_phi(const DunklIndex& idx) {
  PhiSpec phi;
  phi.transform_profile = RadialFunction::power_gaussian(2.0, 1.0 / std::sqrt(2.0));
  phi.spatial_profile = transformed(idx, phi.transform_profile);
  phi.admissibility_constant = 0.5 * std::exp(-1.0);
  return phi;
}

RadialFunction smoothed(const DunklIndex& idx, const RadialFunction& Ff, const PhiSpec& phi, double t) {
  if (!(t > 0.0)) fail(ErrorKind::domain, "dilation parameter must be positive");
  return transformed(idx, product(Ff, phi.transform_profile.dilated(t)));
}

std::vector<double> default_t_grid() { return geometric_grid(1e-3, 1e3, 61); }

BesovSeminorm besov_seminorm(const BesovParams& par, const RadialFunction& f, const PhiSpec& phi,
                             const std::vector<double>& t_grid) {
  const std::size_t n = t_grid.size();
  if (n < 5) fail(ErrorKind::invalid_input, "t-grid needs at least five points");
  BesovSeminorm out;
  out.t_grid = t_grid;
  out.norms.assign(n, 0.0);
  out.integrand.assign(n, 0.0);
  if (f.is_zero()) {
    out.converged_low = out.converged_high = true;
    return out;
  }
  const RadialFunction Ff = transformed(par.idx, f);
  std::vector<int> failed(n, 0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      out.norms[i] = smoothed_norm(par, Ff, phi, t_grid[i]);
    } catch (const Error&) {
      out.norms[i] = kInf;
      failed[i] = 1;
    }
    out.integrand[i] = out.norms[i] * std::pow(t_grid[i], -par.delta);
  }

  // end slopes over the outermost decade
  std::size_t low_end = 0;
  while (low_end < n && t_grid[low_end] <= 10.0 * t_grid.front() * (1.0 + 1e-12)) ++low_end;
  std::size_t high_start = n;
  while (high_start > 0 && t_grid[high_start - 1] >= 0.1 * t_grid.back() * (1.0 - 1e-12)) --high_start;
  out.slope_low = fitted_slope(t_grid, out.integrand, 0, low_end);
  out.slope_high = fitted_slope(t_grid, out.integrand, high_start, n);
  out.converged_low = out.slope_low > 0.05;
  out.converged_high = out.slope_high < -0.05;
  if (!out.converged() || std::find(failed.begin(), failed.end(), 1) != failed.end()) {
    out.value = kInf;
    return out;
  }

  // trapezoid in log t plus power-law ends
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double a = out.integrand[i];
    const double b = out.integrand[i + 1];
    const double L = std::log(t_grid[i + 1] / t_grid[i]);
    // exact for a local power law, trapezoid when flat
    if (a > 0.0 && b > 0.0 && std::abs(std::log(b / a)) > 1e-12) {
      total += (b - a) * L / std::log(b / a);
    } else {
      total += 0.5 * (a + b) * L;
    }
  }
  total += out.integrand.front() / out.slope_low;
  total += out.integrand.back() / -out.slope_high;
  out.value = total;
  return out;
}

AnnulusBound annulus_bound(const BesovParams& par, const RadialFunction& f, const PhiSpec& phi,
                           double t) {
  return annulus_sweep(par, f, phi, {t}).points.front();
}

AnnulusSweep annulus_sweep(const BesovParams& par, const RadialFunction& f, const PhiSpec& phi,
                           const std::vector<double>& t_grid) {
  AnnulusSweep out;
  out.points.resize(t_grid.size());
  if (f.is_zero()) {
    for (std::size_t i = 0; i < t_grid.size(); ++i) out.points[i].t = t_grid[i];
    return out;
  }
  const RadialFunction Ff = transformed(par.idx, f);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    AnnulusBound& b = out.points[i];
    b.t = t_grid[i];
    b.lhs = annulus_lhs(par, Ff, b.t);
    b.rhs = smoothed_norm(par, Ff, phi, b.t);
    b.ratio = b.rhs > 0.0 ? b.lhs / b.rhs : (b.lhs > 0.0 ? kInf : 0.0);
  }
  for (const auto& b : out.points) out.sup = std::max(out.sup, b.ratio);
  return out;
}

Theorem3Report verify_theorem3(const BesovParams& par, const RadialFunction& f, const PhiSpec& phi) {
  Theorem3Report rep;
  rep.besov = besov_seminorm(par, f, phi);
  if (f.is_zero()) {
    rep.conclusion = true;
    return rep;
  }
  try {
    rep.transform_l1_norm = radial_integral(par.idx, transformed(par.idx, f), 1.0);
  } catch (const Error& e) {
    rep.transform_l1_norm = kInf;
    rep.l1_status = to_string(e.kind());
  }
  const AnnulusSweep fine = annulus_sweep(par, f, phi, geometric_grid(1e-2, 1e2, 49));
  rep.annulus_sup_refined = fine.sup;
  for (std::size_t i = 0; i < fine.points.size(); i += 2) {
    rep.annulus_sup = std::max(rep.annulus_sup, fine.points[i].ratio);
  }
  const bool besov_finite = std::isfinite(rep.besov.value);
  rep.conclusion = !besov_finite || std::isfinite(rep.transform_l1_norm);
  return rep;
}

}  // namespace dunkl
