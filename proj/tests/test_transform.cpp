#include <cmath>
#include <cstring>

#include "doctest.h"
#include "dunkl/transform.hpp"
#include "oracles.hpp"

using namespace dunkl;

TEST_CASE("gaussian is a fixed point") {
  for (auto [d, g] : {std::pair{1, 0.5}, {2, 0.0}, {3, 1.0}}) {
    const DunklIndex idx = DunklIndex::make(d, g);
    const TransformResult t = dunkl_transform_radial(idx, RadialFunction::gaussian(1.0), geometric_grid(1e-2, 8.0, 40));
    for (std::size_t i = 0; i < t.grid.size(); ++i) {
      CHECK(std::abs(t.values[i] - std::exp(-0.5 * t.grid[i] * t.grid[i])) < 1e-12);
    }
  }
}

TEST_CASE("indicator transform is a ball measure times j_(nu+1)") {
  const DunklIndex idx = DunklIndex::make(3, 0.5);
  const double R = 1.5;
  const auto grid = geometric_grid(0.05, 60.0, 20);
  const TransformResult t = dunkl_transform_radial(idx, RadialFunction::indicator(R), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double ref = ball_measure(idx, R) * oracle::bessel_j_boost(idx.nu + 1.0, R * grid[i]);
    CHECK(std::abs(t.values[i] - ref) < 1e-9);
  }
}

TEST_CASE("parallel and serial transforms are bit-identical") {
  const DunklIndex idx = DunklIndex::make(2, 0.75);
  const auto f = RadialFunction::power_gaussian(0.5, 1.2);
  const auto grid = default_frequency_grid();
  const TransformResult a = dunkl_transform_radial(idx, f, grid);
  const TransformResult b = dunkl_transform_radial_serial(idx, f, grid);
  REQUIRE(a.values.size() == b.values.size());
  CHECK(std::memcmp(a.values.data(), b.values.data(), a.values.size() * sizeof(double)) == 0);
  CHECK(std::memcmp(a.errors.data(), b.errors.data(), a.errors.size() * sizeof(double)) == 0);
}

TEST_CASE("Plancherel and inversion") {
  const DunklIndex idx = DunklIndex::make(3, 0.0);
  for (const auto& f : {RadialFunction::gaussian(0.6), RadialFunction::power_gaussian(1.0),
                        RadialFunction::indicator(1.0)}) {
    const RadialFunction F = transformed(idx, f);
    CHECK(lp_norm(idx, F, 2.0) / lp_norm(idx, f, 2.0) == doctest::Approx(1.0).epsilon(1e-6));
  }
  const auto f = RadialFunction::power_gaussian(2.0, 0.9);
  const auto back = inverse_transform_radial(idx, transformed(idx, f), geometric_grid(0.05, 5.0, 25));
  for (std::size_t i = 0; i < back.grid.size(); ++i) CHECK(std::abs(back.values[i] - f(back.grid[i])) < 1e-8);
}

TEST_CASE("Hausdorff-Young bound") {
  const DunklIndex idx = DunklIndex::make(2, 0.5);
  const HausdorffYoungReport r = hausdorff_young_report(idx, RadialFunction::indicator(1.0), 1.5);
  CHECK(r.ratio <= 1.0);
  CHECK(conjugate_exponent(1.5) == doctest::Approx(3.0));
  CHECK(std::isinf(conjugate_exponent(1.0)));
}

TEST_CASE("convolution multiplies transforms") {
  const DunklIndex idx = DunklIndex::make(3, 0.0);
  // gaussians of variance a, b convolve to a scaled gaussian of variance a + b
  const RadialFunction c = convolve_radial(idx, RadialFunction::gaussian(1.0), RadialFunction::gaussian(1.0));
  for (double r : {0.0, 0.5, 1.7, 3.0}) {
    CHECK(c(r) == doctest::Approx(std::exp(-r * r / 4.0) * std::pow(2.0, -idx.N / 2.0)).epsilon(1e-8));
  }
}
