#include "dunkl/radial_function.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

// Boost 1.74's pchip calls isnan unqualified.
using std::isnan;
#include <boost/math/interpolators/pchip.hpp>

#include "dunkl/error.hpp"

namespace dunkl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

struct RadialFunction::Impl {
  std::string family = "zero";
  std::string description = "zero";
  ProfileInfo info;
  Eval eval;
  // Parameters of the named families.
  double amplitude = 1.0;
  double a = 0.0;
  double sigma = 1.0;
  double R = 0.0;
  std::vector<double> grid;
  std::vector<double> values;
  Interp rule = Interp::pchip;
};

namespace {

using Impl = RadialFunction::Impl;

std::shared_ptr<Impl> make_zero() {
  auto impl = std::make_shared<Impl>();
  impl->info.support_end = 0.0;
  impl->info.monotone = true;
  impl->eval = [](double) { return 0.0; };
  return impl;
}

std::string amp_prefix(double amplitude) {
  return amplitude == 1.0 ? std::string() : fmt(amplitude) + "*";
}

std::shared_ptr<Impl> make_gaussian(double amplitude, double sigma) {
  if (!(sigma > 0.0)) fail(ErrorKind::invalid_input, "gaussian width must be positive");
  auto impl = std::make_shared<Impl>();
  impl->family = "gaussian";
  impl->amplitude = amplitude;
  impl->sigma = sigma;
  impl->description = amp_prefix(amplitude) + "gaussian(sigma=" + fmt(sigma) + ")";
  impl->info.scale = sigma;
  impl->info.decay = Decay::gaussian;
  impl->info.decay_rate = sigma;
  impl->info.monotone = true;
  const double c = 0.5 / (sigma * sigma);
  impl->eval = [amplitude, c](double r) { return amplitude * std::exp(-c * r * r); };
  return impl;
}

std::shared_ptr<Impl> make_indicator(double amplitude, double R) {
  if (!(R > 0.0)) fail(ErrorKind::invalid_input, "indicator radius must be positive");
  auto impl = std::make_shared<Impl>();
  impl->family = "indicator";
  impl->amplitude = amplitude;
  impl->R = R;
  impl->description = amp_prefix(amplitude) + "indicator(R=" + fmt(R) + ")";
  impl->info.scale = R;
  impl->info.breakpoints = {R};
  impl->info.support_end = R;
  impl->info.decay = Decay::compact;
  impl->info.monotone = true;
  impl->eval = [amplitude, R](double r) { return r < R ? amplitude : 0.0; };
  return impl;
}

std::shared_ptr<Impl> make_power_gaussian(double amplitude, double a, double sigma) {
  if (!(sigma > 0.0)) fail(ErrorKind::invalid_input, "power_gaussian width must be positive");
  auto impl = std::make_shared<Impl>();
  impl->family = "power_gaussian";
  impl->amplitude = amplitude;
  impl->a = a;
  impl->sigma = sigma;
  impl->description =
      amp_prefix(amplitude) + "power_gaussian(a=" + fmt(a) + ",sigma=" + fmt(sigma) + ")";
  impl->info.scale = sigma;
  impl->info.decay = Decay::gaussian;
  impl->info.decay_rate = sigma;
  impl->info.origin_exponent = a;
  impl->info.monotone = a <= 0.0;
  const double c = 0.5 / (sigma * sigma);
  impl->eval = [amplitude, a, c](double r) {
    if (r == 0.0) return a > 0.0 ? 0.0 : (a == 0.0 ? amplitude : kInf);
    return amplitude * std::pow(r, a) * std::exp(-c * r * r);
  };
  return impl;
}

std::shared_ptr<Impl> make_power(double amplitude, double a) {
  auto impl = std::make_shared<Impl>();
  impl->family = "power";
  impl->amplitude = amplitude;
  impl->a = a;
  impl->description = amp_prefix(amplitude) + "power(a=" + fmt(a) + ")";
  impl->info.scale = 1.0;
  impl->info.decay = a < 0.0 ? Decay::algebraic : Decay::growing;
  impl->info.decay_rate = -a;
  impl->info.origin_exponent = a;
  impl->info.monotone = a <= 0.0;
  impl->eval = [amplitude, a](double r) {
    if (a == 0.0) return amplitude;
    if (r == 0.0) return a > 0.0 ? 0.0 : kInf;
    return amplitude * std::pow(r, a);
  };
  return impl;
}

std::shared_ptr<Impl> make_tabulated(std::vector<double> grid, std::vector<double> values,
                                     Interp rule) {
  if (grid.empty() || grid.size() != values.size()) {
    fail(ErrorKind::invalid_input, "tabulated profile needs matching, non-empty grid and values");
  }
  if (!(grid.front() > 0.0)) fail(ErrorKind::invalid_input, "tabulated radii must be positive");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      fail(ErrorKind::invalid_input, "tabulated grid must be strictly increasing");
    }
  }
  for (double v : values) {
    if (!std::isfinite(v)) fail(ErrorKind::invalid_input, "tabulated values must be finite");
  }
  auto impl = std::make_shared<Impl>();
  impl->family = "tabulated";
  impl->grid = grid;
  impl->values = values;
  impl->rule = rule;
  impl->description = std::string("tabulated(") + (rule == Interp::pchip ? "pchip" : "step") +
                      ",n=" + std::to_string(grid.size()) + ")";
  auto& info = impl->info;
  info.scale = grid.front();
  info.breakpoints = grid;
  info.support_end = grid.back();
  info.decay = Decay::compact;
  info.monotone = true;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (std::abs(values[i]) > std::abs(values[i - 1])) info.monotone = false;
  }

  const double last = grid.back();
  if (rule == Interp::step) {
    impl->eval = [grid, values](double r) {
      auto it = std::upper_bound(grid.begin(), grid.end(), r);
      if (it == grid.end()) return 0.0;
      return values[static_cast<std::size_t>(it - grid.begin())];
    };
  } else if (grid.size() >= 4) {
    auto x = grid;
    auto y = values;
    boost::math::interpolators::pchip<std::vector<double>> spline(std::move(x), std::move(y));
    const double first = grid.front();
    const double v0 = values.front();
    impl->eval = [spline, first, last, v0](double r) {
      if (r <= first) return v0;
      if (r > last) return 0.0;
      return spline(r);
    };
  } else {
    // Too few nodes for a cubic: piecewise linear.
    impl->eval = [grid, values, last](double r) {
      if (r <= grid.front()) return values.front();
      if (r > last) return 0.0;
      auto it = std::upper_bound(grid.begin(), grid.end(), r);
      if (it == grid.end()) return values.back();
      const std::size_t i = static_cast<std::size_t>(it - grid.begin());
      const double w = (r - grid[i - 1]) / (grid[i] - grid[i - 1]);
      return (1.0 - w) * values[i - 1] + w * values[i];
    };
  }
  return impl;
}

}  // namespace

RadialFunction::RadialFunction() : impl_(make_zero()) {}
RadialFunction::RadialFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

RadialFunction RadialFunction::gaussian(double sigma) {
  return RadialFunction(make_gaussian(1.0, sigma));
}
RadialFunction RadialFunction::indicator(double R) {
  return RadialFunction(make_indicator(1.0, R));
}
RadialFunction RadialFunction::power_gaussian(double a, double sigma) {
  return RadialFunction(make_power_gaussian(1.0, a, sigma));
}
RadialFunction RadialFunction::power(double a) { return RadialFunction(make_power(1.0, a)); }
RadialFunction RadialFunction::tabulated(std::vector<double> grid, std::vector<double> values,
                                         Interp rule) {
  return RadialFunction(make_tabulated(std::move(grid), std::move(values), rule));
}

RadialFunction RadialFunction::custom(Eval eval, ProfileInfo info, std::string description) {
  auto impl = std::make_shared<Impl>();
  impl->family = "custom";
  impl->description = std::move(description);
  std::sort(info.breakpoints.begin(), info.breakpoints.end());
  info.breakpoints.erase(std::unique(info.breakpoints.begin(), info.breakpoints.end()),
                         info.breakpoints.end());
  impl->info = std::move(info);
  impl->eval = std::move(eval);
  return RadialFunction(std::move(impl));
}

double RadialFunction::operator()(double r) const { return impl_->eval(r); }
const ProfileInfo& RadialFunction::info() const { return impl_->info; }
const std::string& RadialFunction::description() const { return impl_->description; }
const std::string& RadialFunction::family() const { return impl_->family; }
RadialFunction::Params RadialFunction::params() const {
  return {impl_->amplitude, impl_->a, impl_->sigma, impl_->R};
}
bool RadialFunction::is_zero() const { return impl_->family == "zero"; }
const std::vector<double>& RadialFunction::grid() const { return impl_->grid; }
const std::vector<double>& RadialFunction::values() const { return impl_->values; }

RadialFunction RadialFunction::dilated(double lambda) const {
  if (!(lambda > 0.0)) fail(ErrorKind::invalid_input, "dilation factor must be positive");
  const Impl& s = *impl_;
  if (s.family == "zero" || lambda == 1.0) return *this;
  if (s.family == "gaussian") return RadialFunction(make_gaussian(s.amplitude, s.sigma / lambda));
  if (s.family == "indicator") return RadialFunction(make_indicator(s.amplitude, s.R / lambda));
  if (s.family == "power_gaussian") {
    return RadialFunction(
        make_power_gaussian(s.amplitude * std::pow(lambda, s.a), s.a, s.sigma / lambda));
  }
  if (s.family == "power") {
    return RadialFunction(make_power(s.amplitude * std::pow(lambda, s.a), s.a));
  }
  if (s.family == "tabulated") {
    auto grid = s.grid;
    for (double& r : grid) r /= lambda;
    return RadialFunction(make_tabulated(std::move(grid), s.values, s.rule));
  }
  ProfileInfo info = s.info;
  info.scale /= lambda;
  for (double& b : info.breakpoints) b /= lambda;
  info.support_end /= lambda;
  info.eval_limit /= lambda;
  if (info.decay == Decay::gaussian) info.decay_rate /= lambda;
  auto inner = s.eval;
  return custom([inner, lambda](double r) { return inner(lambda * r); }, std::move(info),
                "dilate(" + fmt(lambda) + "," + s.description + ")");
}

RadialFunction RadialFunction::scaled(double c) const {
  const Impl& s = *impl_;
  if (s.family == "zero" || c == 1.0) return *this;
  if (c == 0.0) return {};
  if (s.family == "gaussian") return RadialFunction(make_gaussian(c * s.amplitude, s.sigma));
  if (s.family == "indicator") return RadialFunction(make_indicator(c * s.amplitude, s.R));
  if (s.family == "power_gaussian") {
    return RadialFunction(make_power_gaussian(c * s.amplitude, s.a, s.sigma));
  }
  if (s.family == "power") return RadialFunction(make_power(c * s.amplitude, s.a));
  if (s.family == "tabulated") {
    auto values = s.values;
    for (double& v : values) v *= c;
    return RadialFunction(make_tabulated(s.grid, std::move(values), s.rule));
  }
  auto inner = s.eval;
  return custom([inner, c](double r) { return c * inner(r); }, s.info,
                fmt(c) + "*" + s.description);
}

RadialFunction product(const RadialFunction& a, const RadialFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const ProfileInfo& ia = a.info();
  const ProfileInfo& ib = b.info();
  ProfileInfo info;
  info.scale = std::min(ia.scale, ib.scale);
  info.breakpoints = ia.breakpoints;
  info.breakpoints.insert(info.breakpoints.end(), ib.breakpoints.begin(), ib.breakpoints.end());
  info.support_end = std::min(ia.support_end, ib.support_end);
  info.eval_limit = std::min(ia.eval_limit, ib.eval_limit);
  info.origin_exponent = ia.origin_exponent + ib.origin_exponent;
  info.monotone = ia.monotone && ib.monotone;
  const bool ga = ia.decay == Decay::gaussian;
  const bool gb = ib.decay == Decay::gaussian;
  if ((ia.decay == Decay::compact && gb) || (ga && ib.decay == Decay::compact)) {
    // keep the gaussian rate: it may cut off well inside the support
    info.decay = Decay::gaussian;
    info.decay_rate = ga ? ia.decay_rate : ib.decay_rate;
  } else if (ia.decay == Decay::compact || ib.decay == Decay::compact) {
    info.decay = Decay::compact;
  } else if (ga && gb) {
    info.decay = Decay::gaussian;
    info.decay_rate = 1.0 / std::sqrt(1.0 / (ia.decay_rate * ia.decay_rate) +
                                      1.0 / (ib.decay_rate * ib.decay_rate));
  } else if (ia.decay == Decay::gaussian || ib.decay == Decay::gaussian) {
    info.decay = Decay::gaussian;
    info.decay_rate = ia.decay == Decay::gaussian ? ia.decay_rate : ib.decay_rate;
  } else if (ia.decay == Decay::algebraic || ib.decay == Decay::algebraic) {
    const double rate = (ia.decay == Decay::algebraic ? ia.decay_rate : -ia.origin_exponent) +
                        (ib.decay == Decay::algebraic ? ib.decay_rate : -ib.origin_exponent);
    info.decay = rate > 0.0 ? Decay::algebraic : Decay::growing;
    info.decay_rate = rate;
  } else {
    info.decay = Decay::growing;
  }
  return RadialFunction::custom([a, b](double r) { return a(r) * b(r); }, std::move(info),
                                "product(" + a.description() + "," + b.description() + ")");
}

// ---------------------------------------------------------------------------
// Piecewise Chebyshev tables

namespace {

struct ChebTable {
  std::vector<double> edges;                // panel boundaries, size = panels + 1
  std::vector<std::vector<double>> coeffs;  // per panel
  double hi = 0.0;
  RadialFunction::Eval beyond;

  double operator()(double r) const {
    if (r > hi) return beyond ? beyond(r) : 0.0;
    if (r < 0.0) r = 0.0;
    auto it = std::upper_bound(edges.begin(), edges.end(), r);
    std::size_t i = it == edges.begin() ? 0 : static_cast<std::size_t>(it - edges.begin()) - 1;
    if (i >= coeffs.size()) i = coeffs.size() - 1;
    const double a = edges[i];
    const double b = edges[i + 1];
    const double x = (2.0 * r - a - b) / (b - a);
    const auto& c = coeffs[i];
    // Clenshaw
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t k = c.size() - 1; k > 0; --k) {
      const double t = 2.0 * x * b1 - b2 + c[k];
      b2 = b1;
      b1 = t;
    }
    return x * b1 - b2 + c[0];
  }
};

struct PendingPanel {
  double a, b;
};

}  // namespace

RadialFunction chebyshev_table(const RadialFunction::Eval& f, double hi, ProfileInfo info,
                               std::string description, const ChebyshevOptions& opts,
                               RadialFunction::Eval beyond) {
  if (!(hi > 0.0)) fail(ErrorKind::invalid_input, "chebyshev table needs a positive range");
  const int n = opts.degree;
  std::vector<double> nodes(n + 1);
  for (int j = 0; j <= n; ++j) nodes[j] = std::cos(std::numbers::pi * j / n);
  std::vector<double> cos_table((n + 1) * (n + 1));
  for (int k = 0; k <= n; ++k) {
    for (int j = 0; j <= n; ++j) {
      cos_table[k * (n + 1) + j] = std::cos(std::numbers::pi * k * j / n);
    }
  }

  std::vector<PendingPanel> pending;
  // octaves: far samples are the expensive ones and usually resolve early
  constexpr int kOctaves = 5;
  double edge = hi / (1 << kOctaves);
  for (int i = 0; i < 4; ++i) pending.push_back({edge * i / 4, edge * (i + 1) / 4});
  for (int i = 0; i < kOctaves; ++i, edge *= 2.0) pending.push_back({edge, i + 1 == kOctaves ? hi : 2.0 * edge});
  struct Done {
    double a, b;
    std::vector<double> c;
  };
  std::vector<Done> done;
  const double min_width = opts.min_width * hi;

  while (!pending.empty()) {
    const std::size_t m = pending.size();
    std::vector<double> samples(m * (n + 1));
    const long total = static_cast<long>(samples.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long idx = 0; idx < total; ++idx) {
      const std::size_t p = static_cast<std::size_t>(idx) / (n + 1);
      const int j = static_cast<int>(idx % (n + 1));
      const double a = pending[p].a;
      const double b = pending[p].b;
      samples[idx] = f(0.5 * (a + b) + 0.5 * (b - a) * nodes[j]);
    }
    std::vector<PendingPanel> next;
    for (std::size_t p = 0; p < m; ++p) {
      std::vector<double> c(n + 1);
      const double* v = &samples[p * (n + 1)];
      for (int k = 0; k <= n; ++k) {
        double sum = 0.5 * (v[0] * cos_table[k * (n + 1)] + v[n] * cos_table[k * (n + 1) + n]);
        for (int j = 1; j < n; ++j) sum += v[j] * cos_table[k * (n + 1) + j];
        c[k] = 2.0 * sum / n;
      }
      c[0] *= 0.5;
      c[n] *= 0.5;
      for (double x : c) {
        if (!std::isfinite(x)) fail(ErrorKind::domain, "non-finite value while tabulating " + description);
      }
      const double tail = std::max({std::abs(c[n]), std::abs(c[n - 1]), std::abs(c[n - 2])});
      const double width = pending[p].b - pending[p].a;
      const bool budget = done.size() + next.size() + (m - p) >= static_cast<std::size_t>(opts.max_panels);
      if (tail <= opts.abs_tol || width <= min_width || budget) {
        done.push_back({pending[p].a, pending[p].b, std::move(c)});
      } else {
        const double mid = 0.5 * (pending[p].a + pending[p].b);
        next.push_back({pending[p].a, mid});
        next.push_back({mid, pending[p].b});
      }
    }
    pending = std::move(next);
  }

  std::sort(done.begin(), done.end(), [](const Done& x, const Done& y) { return x.a < y.a; });
  auto table = std::make_shared<ChebTable>();
  table->hi = hi;
  table->beyond = std::move(beyond);
  for (auto& d : done) {
    table->edges.push_back(d.a);
    table->coeffs.push_back(std::move(d.c));
  }
  table->edges.push_back(hi);
  for (std::size_t i = 1; i + 1 < table->edges.size(); ++i) info.breakpoints.push_back(table->edges[i]);
  if (!table->beyond) info.support_end = std::min(info.support_end, hi);
  return RadialFunction::custom([table](double r) { return (*table)(r); }, std::move(info),
                                std::move(description));
}

// ---------------------------------------------------------------------------

RadialFunction read_profile_csv(std::istream& in, Interp rule) {
  std::vector<double> grid;
  std::vector<double> values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      fail(ErrorKind::invalid_input, "profile csv line " + std::to_string(lineno) + ": expected 'radius,value'");
    }
    char* end = nullptr;
    const std::string left = line.substr(0, comma);
    const std::string right = line.substr(comma + 1);
    const double r = std::strtod(left.c_str(), &end);
    if (end == left.c_str()) fail(ErrorKind::invalid_input, "profile csv line " + std::to_string(lineno) + ": bad radius");
    const double v = std::strtod(right.c_str(), &end);
    if (end == right.c_str()) fail(ErrorKind::invalid_input, "profile csv line " + std::to_string(lineno) + ": bad value");
    grid.push_back(r);
    values.push_back(v);
  }
  return RadialFunction::tabulated(std::move(grid), std::move(values), rule);
}

void write_profile_csv(std::ostream& out, const RadialFunction& f, const std::vector<double>& grid) {
  const auto old = out.precision(17);
  for (double r : grid) out << r << ',' << f(r) << '\n';
  out.precision(old);
}

std::vector<double> geometric_grid(double a, double b, int n) {
  if (n <= 0) return {};
  if (n == 1) return {a};
  if (!(a > 0.0 && b > a)) fail(ErrorKind::invalid_input, "geometric grid needs 0 < a < b");
  std::vector<double> g(n);
  const double la = std::log(a);
  const double step = (std::log(b) - la) / (n - 1);
  for (int i = 0; i < n; ++i) g[i] = std::exp(la + step * i);
  g.front() = a;
  g.back() = b;
  return g;
}

}  // namespace dunkl
