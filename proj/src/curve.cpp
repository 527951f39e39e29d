#include "dunkl/curve.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "dunkl/error.hpp"

namespace dunkl {

namespace {

constexpr double kInf = quad::inf;

double power_value(double c, double e, double t) {
  if (c == 0.0) return 0.0;
  if (e == 0.0) return c;
  if (t == 0.0) return e > 0.0 ? 0.0 : kInf;
  return c * std::pow(t, e);
}

// A point strictly inside (x, y) for locating segments.
double interior(double x, double y) {
  if (std::isinf(y)) return x > 0.0 ? 2.0 * x : 1.0;
  if (x == 0.0) return 0.5 * y;
  return 0.5 * (x + y);
}

const Curve::Segment* locate(const std::vector<Curve::Segment>& segs, double t) {
  auto it = std::upper_bound(segs.begin(), segs.end(), t,
                             [](double v, const Curve::Segment& s) { return v < s.hi; });
  if (it == segs.end() || t < it->lo) return nullptr;
  return &*it;
}

double quad_segment(const std::function<double(double)>& f, double a, double b,
                    const quad::Hints& hints) {
  if (!(b > a)) return 0.0;
  return quad::integrate(f, a, b, hints).value;
}

}  // namespace

double Curve::Segment::operator()(double t) const {
  return is_power ? power_value(c, e, t) : (*fn)(t);
}

double power_integral(double c, double e, double lo, double hi) {
  if (!(hi > lo) || c == 0.0) return 0.0;
  if (std::isinf(c)) return kInf;
  const double k = e + 1.0;
  if (lo == 0.0 && k <= 0.0) fail(ErrorKind::divergence, "power integral diverges at the origin");
  if (std::isinf(hi) && k >= 0.0) fail(ErrorKind::divergent_tail, "power integral diverges at infinity");
  if (lo == 0.0) return c * std::pow(hi, k) / k;
  if (std::isinf(hi)) return -c * std::pow(lo, k) / k;
  const double L = std::log(hi / lo);
  if (k == 0.0) return c * L;
  return c * std::pow(lo, k) * std::expm1(k * L) / k;
}

Curve Curve::power(double c, double e, double lo, double hi) {
  Curve out;
  Segment s;
  s.lo = lo;
  s.hi = hi;
  s.is_power = true;
  s.c = c;
  s.e = e;
  out.segments_.push_back(s);
  return out;
}

Curve Curve::steps(const std::vector<double>& edges, const std::vector<double>& values) {
  if (edges.size() != values.size() + 1) {
    fail(ErrorKind::invalid_input, "step curve needs one more edge than values");
  }
  Curve out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(edges[i + 1] > edges[i])) continue;
    out.append(Curve::power(values[i], 0.0, edges[i], edges[i + 1]).segments_.front());
  }
  return out;
}

Curve Curve::loglog(const std::vector<double>& t, const std::vector<double>& w) {
  const std::size_t n = t.size();
  if (n < 2 || w.size() != n) fail(ErrorKind::invalid_input, "log-log curve needs at least two matching points");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(t[i] > 0.0) || !(w[i] > 0.0)) {
      fail(ErrorKind::invalid_input, "log-log curve needs positive abscissae and values");
    }
    if (i > 0 && !(t[i] > t[i - 1])) fail(ErrorKind::invalid_input, "abscissae must increase");
  }
  auto through = [&](std::size_t i, std::size_t j) {
    const double e = std::log(w[j] / w[i]) / std::log(t[j] / t[i]);
    return std::pair{w[i] / std::pow(t[i], e), e};
  };
  // end fits use the outermost decade (at least one interval)
  std::size_t j_low = 1;
  while (j_low + 1 < n && t[j_low + 1] <= 10.0 * t[0]) ++j_low;
  std::size_t j_high = n - 2;
  while (j_high > 0 && t[j_high - 1] >= 0.1 * t[n - 1]) --j_high;

  Curve out;
  auto [c0, e0] = through(0, j_low);
  out.append(Curve::power(c0, e0, 0.0, t[0]).segments_.front());
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto [c, e] = through(i, i + 1);
    out.append(Curve::power(c, e, t[i], t[i + 1]).segments_.front());
  }
  auto [c1, e1] = through(j_high, n - 1);
  out.append(Curve::power(c1, e1, t[n - 1], kInf).segments_.front());
  return out;
}

Curve Curve::function(std::function<double(double)> f, double lo, double hi, quad::Hints hints) {
  Curve out;
  Segment s;
  s.lo = lo;
  s.hi = hi;
  s.is_power = false;
  s.fn = std::make_shared<const std::function<double(double)>>(std::move(f));
  s.hints = std::move(hints);
  out.segments_.push_back(std::move(s));
  return out;
}

Curve& Curve::append(Segment seg) {
  if (!segments_.empty() && seg.lo < segments_.back().hi) {
    fail(ErrorKind::invalid_input, "curve segments must be appended in increasing order");
  }
  segments_.push_back(std::move(seg));
  return *this;
}

double Curve::operator()(double t) const {
  const Segment* s = locate(segments_, t);
  return s ? (*s)(t) : 0.0;
}

bool Curve::is_pure_power() const {
  return segments_.size() == 1 && segments_[0].is_power && segments_[0].lo == 0.0 &&
         std::isinf(segments_[0].hi);
}

std::vector<double> Curve::breakpoints() const {
  std::vector<double> out;
  for (const auto& s : segments_) {
    if (s.lo > 0.0) out.push_back(s.lo);
    if (std::isfinite(s.hi)) out.push_back(s.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Curve Curve::pow(double k) const {
  Curve out;
  for (const auto& s : segments_) {
    Segment r = s;
    if (s.is_power) {
      r.c = s.c == 0.0 ? (k > 0.0 ? 0.0 : kInf) : std::pow(s.c, k);
      r.e = s.e * k;
    } else {
      auto inner = s.fn;
      r.fn = std::make_shared<const std::function<double(double)>>([inner, k](double t) {
        const double v = std::abs((*inner)(t));
        if (v == 0.0) return k > 0.0 ? 0.0 : kInf;
        return std::pow(v, k);
      });
    }
    out.segments_.push_back(std::move(r));
  }
  return out;
}

Curve Curve::scaled(double c) const {
  Curve out;
  for (const auto& s : segments_) {
    Segment r = s;
    if (s.is_power) {
      r.c *= c;
    } else {
      auto inner = s.fn;
      r.fn = std::make_shared<const std::function<double(double)>>(
          [inner, c](double t) { return c * (*inner)(t); });
    }
    out.segments_.push_back(std::move(r));
  }
  return out;
}

double Curve::integral(double lo, double hi) const {
  double total = 0.0;
  for (const auto& s : segments_) {
    const double a = std::max(lo, s.lo);
    const double b = std::min(hi, s.hi);
    if (!(b > a)) continue;
    total += s.is_power ? power_integral(s.c, s.e, a, b) : quad_segment(*s.fn, a, b, s.hints);
  }
  return total;
}

void Curve::write_csv(std::ostream& out, const std::vector<double>& grid) const {
  const auto old = out.precision(17);
  out << "t,value\n";
  for (double t : grid) out << t << ',' << (*this)(t) << '\n';
  out.precision(old);
}

double integrate_product(const Curve& a, double pa, const Curve& b, double pb, double lo,
                         double hi) {
  if (!(hi > lo)) return 0.0;
  std::vector<double> edges{lo, hi};
  for (double x : a.breakpoints()) {
    if (x > lo && x < hi) edges.push_back(x);
  }
  for (double x : b.breakpoints()) {
    if (x > lo && x < hi) edges.push_back(x);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double x = edges[i];
    const double y = edges[i + 1];
    const double mid = interior(x, y);
    const Curve::Segment* sa = locate(a.segments(), mid);
    const Curve::Segment* sb = locate(b.segments(), mid);
    if (!sa || !sb) continue;
    if (sa->is_power && sb->is_power) {
      const double ca = sa->c == 0.0 ? (pa > 0.0 ? 0.0 : kInf) : std::pow(sa->c, pa);
      const double cb = sb->c == 0.0 ? (pb > 0.0 ? 0.0 : kInf) : std::pow(sb->c, pb);
      if (ca == 0.0 || cb == 0.0) continue;
      total += power_integral(ca * cb, sa->e * pa + sb->e * pb, x, y);
      continue;
    }
    auto f = [sa, sb, pa, pb](double t) {
      const double va = std::abs((*sa)(t));
      const double vb = std::abs((*sb)(t));
      if (va == 0.0 || vb == 0.0) return 0.0;
      return std::pow(va, pa) * std::pow(vb, pb);
    };
    quad::Hints hints;
    const quad::Hints& ha = sa->is_power ? sb->hints : sa->hints;
    hints.scale = ha.scale;
    if (!sa->is_power && !sb->is_power) hints.scale = std::min(sa->hints.scale, sb->hints.scale);
    for (const auto* s : {sa, sb}) {
      if (s->is_power) continue;
      for (double bp : s->hints.breakpoints) {
        if (bp > x && bp < y) hints.breakpoints.push_back(bp);
      }
      hints.eval_limit = std::min(hints.eval_limit, s->hints.eval_limit);
      hints.support_end = std::min(hints.support_end, s->hints.support_end);
    }
    std::sort(hints.breakpoints.begin(), hints.breakpoints.end());
    total += quad_segment(f, x, y, hints);
  }
  return total;
}

Curve average(const Curve& c) {
  if (c.is_pure_power()) {
    const auto& s = c.segments().front();
    if (s.e <= -1.0 && s.c != 0.0) fail(ErrorKind::divergence, "average of a non-integrable power");
    return Curve::power(s.c / (s.e + 1.0), s.e);
  }
  // cumulative integrals at segment starts
  const auto& segs = c.segments();
  std::vector<double> starts;
  std::vector<double> cum;
  double running = 0.0;
  for (const auto& s : segs) {
    starts.push_back(s.lo);
    cum.push_back(running);
    if (std::isinf(s.hi)) continue;
    running += s.is_power ? power_integral(s.c, s.e, s.lo, s.hi) : quad_segment(*s.fn, s.lo, s.hi, s.hints);
  }
  const double total = running;
  auto f = [c, starts, cum, total](double t) {
    if (!(t > 0.0)) return 0.0;
    const auto& segs = c.segments();
    auto it = std::upper_bound(starts.begin(), starts.end(), t);
    if (it == starts.begin()) return 0.0;
    const std::size_t i = static_cast<std::size_t>(it - starts.begin()) - 1;
    const auto& s = segs[i];
    if (t >= s.hi) {
      // between segments or beyond the last: all of segment i counted
      const double full = i + 1 < cum.size() ? cum[i + 1] : total;
      return full / t;
    }
    const double part = s.is_power ? power_integral(s.c, s.e, s.lo, t) : quad_segment(*s.fn, s.lo, t, s.hints);
    return (cum[i] + part) / t;
  };
  quad::Hints hints;
  hints.breakpoints = c.breakpoints();
  if (!hints.breakpoints.empty()) hints.scale = hints.breakpoints.front();
  return Curve::function(std::move(f), 0.0, kInf, std::move(hints));
}

}  // namespace dunkl
