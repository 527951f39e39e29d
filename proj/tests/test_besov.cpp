#include <cmath>

#include "doctest.h"
#include "dunkl/besov.hpp"
#include "dunkl/error.hpp"
#include "dunkl/transform.hpp"

using namespace dunkl;

TEST_CASE("parameter validation") {
  const DunklIndex idx = DunklIndex::make(3, 0.0);
  const BesovParams ok = BesovParams::make(idx, 2.0, 2.0, -0.5, 0.5);
  CHECK(ok.delta == doctest::Approx((3.0 + 0.5) / 2.0));
  CHECK(!ok.hlp_corner);
  const BesovParams corner = BesovParams::make(idx, 1.5, 1.5, -1.5, 0.0);
  CHECK(corner.hlp_corner);
  CHECK(corner.delta == doctest::Approx(2.0));
  CHECK_THROWS_AS(BesovParams::make(idx, 2.5, 2.5, -0.5, 0.5), Error);
  CHECK_THROWS_AS(BesovParams::make(idx, 2.0, 2.0, -0.5, 1.0), Error);
  CHECK_THROWS_AS(BesovParams::make(idx, 2.0, 1.5, -0.5, 0.5), Error);
}

TEST_CASE("test function is admissible on the annulus") {
  const DunklIndex idx = DunklIndex::make(3, 0.0);
  const PhiSpec phi = make_phi(idx);
  for (double s = 0.5; s <= 1.0; s += 0.05) {
    CHECK(phi.transform_profile(s) >= phi.admissibility_constant * s * s * (1.0 - 1e-12));
  }
  // the spatial profile transforms back to s^2 exp(-s^2)
  for (double s : {0.3, 1.0, 2.0}) {
    CHECK(transformed(idx, phi.spatial_profile)(s) == doctest::Approx(s * s * std::exp(-s * s)).epsilon(1e-8));
  }
}

TEST_CASE("gaussian seminorm converges on a coarse grid") {
  const DunklIndex idx = DunklIndex::make(3, 0.0);
  const BesovParams par = BesovParams::make(idx, 2.0, 2.0, -0.5, 0.5);
  const BesovSeminorm b = besov_seminorm(par, RadialFunction::gaussian(1.0), make_phi(idx), geometric_grid(1e-3, 1e3, 25));
  CHECK(b.converged());
  CHECK(std::isfinite(b.value));
  CHECK(b.slope_low == doctest::Approx(0.25).epsilon(0.02));
  CHECK(b.value == doctest::Approx(3.7586).epsilon(0.02));
}

TEST_CASE("annulus bound at a single scale") {
  const DunklIndex idx = DunklIndex::make(3, 0.0);
  const BesovParams par = BesovParams::make(idx, 2.0, 2.0, -0.5, 0.5);
  const AnnulusBound a = annulus_bound(par, RadialFunction::gaussian(1.0), make_phi(idx), 1.0);
  CHECK(a.lhs > 0.0);
  CHECK(a.rhs > 0.0);
  CHECK(a.ratio == doctest::Approx(a.lhs / a.rhs));
}
