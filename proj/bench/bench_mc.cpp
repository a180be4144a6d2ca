// Serial reference against the OpenMP kernel for region counting.
#include <benchmark/benchmark.h>

#include "tot/mc_kernels.hpp"

namespace {

void BM_CountSerial(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(tot::mc::count_regions_serial(1, n));
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_CountParallel(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(tot::mc::count_regions_parallel(1, n));
  state.SetItemsProcessed(state.iterations() * n);
}

}  // namespace

BENCHMARK(BM_CountSerial)->RangeMultiplier(10)->Range(100'000, 10'000'000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CountParallel)->RangeMultiplier(10)->Range(100'000, 10'000'000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
