#include <benchmark/benchmark.h>

#include "logres/counts.hpp"
#include "logres/logchern.hpp"

using namespace logres;

static void BM_DeltaGrid(benchmark::State& state) {
  for (auto _ : state) {
    for (int k = 1; k <= 8; ++k)
      for (int d = 0; d <= 8; ++d)
        for (int n = 2; n <= 9; ++n) {
          const counts::CountParams p{k, d, n};
          benchmark::DoNotOptimize(counts::delta_sum(p));
          benchmark::DoNotOptimize(counts::delta_closed(p));
          benchmark::DoNotOptimize(counts::delta_alternating(p));
        }
  }
}
BENCHMARK(BM_DeltaGrid)->Unit(benchmark::kMillisecond);

static void BM_DeltaSumLargeN(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(counts::delta_sum({7, 11, n}));
}
BENCHMARK(BM_DeltaSumLargeN)->RangeMultiplier(2)->Range(8, 128);

static void BM_LogChernClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(logchern::log_chern_smooth_closed(n, 5));
}
BENCHMARK(BM_LogChernClosed)->RangeMultiplier(2)->Range(4, 64);

static void BM_LogChernRecursive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(logchern::log_chern_smooth_recursive(n, 5));
}
BENCHMARK(BM_LogChernRecursive)->RangeMultiplier(2)->Range(4, 64);

static void BM_LogChernMultiIndex(benchmark::State& state) {
  const logchern::Divisor div{static_cast<int>(state.range(0)), {2, 3, 4}, {}};
  for (auto _ : state) benchmark::DoNotOptimize(logchern::log_chern_ncd_multiindex(div));
}
BENCHMARK(BM_LogChernMultiIndex)->DenseRange(2, 8, 2);

static void BM_ComponentRemoval(benchmark::State& state) {
  const logchern::Divisor div{5, {1, 2, 3, 2}, {}};
  for (auto _ : state) benchmark::DoNotOptimize(logchern::verify_component_removal(div, -2));
}
BENCHMARK(BM_ComponentRemoval);
