#include <benchmark/benchmark.h>

#include "kummer/monodromy.hpp"

using namespace kummer::monodromy;

static void BM_LoopAroundZero(benchmark::State& state) {
  TrackOptions opt;
  opt.precision_bits = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(track_loop(loop_around(Puncture::zero), opt));
}
BENCHMARK(BM_LoopAroundZero)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_PunctureTable(benchmark::State& state) {
  TrackOptions opt;
  opt.step_scale = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(puncture_table(opt));
}
BENCHMARK(BM_PunctureTable)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_BaseRoots(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(base_roots(kummer::make_rational(-257, 256), 128));
}
BENCHMARK(BM_BaseRoots)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
