#include "dunkl/measure.hpp"

#include <cmath>
#include <sstream>

#include "dunkl/error.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl {

DunklIndex DunklIndex::make(int d, double gamma) {
  if (d < 1) fail(ErrorKind::invalid_input, "dimension d must be >= 1");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) fail(ErrorKind::invalid_input, "gamma must be >= 0");
  DunklIndex idx;
  idx.d = d;
  idx.gamma = gamma;
  idx.N = 2.0 * gamma + d;
  idx.nu = 0.5 * idx.N - 1.0;
  idx.d_k = 1.0 / (std::pow(2.0, idx.nu) * specfun::gamma_fn(idx.nu + 1.0));
  return idx;
}

std::string DunklIndex::describe() const {
  std::ostringstream os;
  os << "d=" << d << ",gamma=" << gamma << ",N=" << N;
  return os.str();
}

double ball_measure(const DunklIndex& idx, double R) {
  if (!(R >= 0.0)) fail(ErrorKind::domain, "ball radius must be >= 0");
  return idx.d_k * std::pow(R, idx.N) / idx.N;
}

quad::Hints radial_hints(const RadialFunction& F) {
  const ProfileInfo& info = F.info();
  quad::Hints h;
  h.scale = info.scale > 0.0 ? info.scale : 1.0;
  h.breakpoints = info.breakpoints;
  h.support_end = info.support_end;
  h.eval_limit = info.eval_limit;
  return h;
}

quad::Result radial_integral_detailed(const DunklIndex& idx, const RadialFunction& F, double p,
                                      const WeightSpec& w) {
  if (!(p > 0.0)) fail(ErrorKind::invalid_input, "exponent p must be positive");
  if (F.is_zero() || w.is_zero()) return {};
  quad::Hints hints = radial_hints(F);
  if (w.kind() != WeightSpec::Kind::power) {
    for (double b : w.curve().breakpoints()) {
      if (b < hints.support_end) hints.breakpoints.push_back(b);
    }
    std::sort(hints.breakpoints.begin(), hints.breakpoints.end());
  }
  const double n1 = idx.N - 1.0;
  auto integrand = [&](double r) {
    const double v = std::abs(F(r));
    if (v == 0.0) return 0.0;
    const double fp = p == 1.0 ? v : (p == 2.0 ? v * v : std::pow(v, p));
    return fp * w(r) * std::pow(r, n1);
  };
  quad::Result res = quad::integrate(integrand, 0.0, quad::inf, hints);
  res.value *= idx.d_k;
  res.error *= idx.d_k;
  return res;
}

double radial_integral(const DunklIndex& idx, const RadialFunction& F, double p, const WeightSpec& w) {
  return radial_integral_detailed(idx, F, p, w).value;
}

double lp_norm(const DunklIndex& idx, const RadialFunction& F, double p, const WeightSpec& w) {
  return std::pow(radial_integral(idx, F, p, w), 1.0 / p);
}

}  // namespace dunkl
