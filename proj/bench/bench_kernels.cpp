#include <benchmark/benchmark.h>

#include "dunkl/measure.hpp"
#include "dunkl/rearrange.hpp"
#include "dunkl/transform.hpp"

namespace {

const dunkl::DunklIndex kIdx = dunkl::DunklIndex::make(3, 0.5);

std::vector<double> grid(benchmark::State& state) {
  return dunkl::geometric_grid(1e-2, 1e2, static_cast<int>(state.range(0)));
}

void BM_TransformParallel(benchmark::State& state) {
  const auto f = dunkl::RadialFunction::indicator(1.0);
  const auto s = grid(state);
  for (auto _ : state) benchmark::DoNotOptimize(dunkl::dunkl_transform_radial(kIdx, f, s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TransformSerial(benchmark::State& state) {
  const auto f = dunkl::RadialFunction::indicator(1.0);
  const auto s = grid(state);
  for (auto _ : state) benchmark::DoNotOptimize(dunkl::dunkl_transform_radial_serial(kIdx, f, s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

// non-monotone profile, so the sorted-cells path runs
void BM_SortedCells(benchmark::State& state) {
  const auto f = dunkl::RadialFunction::power_gaussian(1.0);
  dunkl::RearrangeOptions opts;
  opts.cells = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dunkl::decreasing_rearrangement(kIdx, f, opts));
}

}  // namespace

BENCHMARK(BM_TransformParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransformSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SortedCells)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
