#include <benchmark/benchmark.h>

#include "kummer/hodge.hpp"
#include "kummer/hurwitz.hpp"

using namespace kummer;
using namespace kummer::hurwitz;

static void BM_SearchC2(benchmark::State& state) {
  BranchData b{4, {2, 2}, {4}, {2, 1, 1}, 0};
  for (auto _ : state) benchmark::DoNotOptimize(search_tuples(b, 100));
}
BENCHMARK(BM_SearchC2)->Unit(benchmark::kMicrosecond);

static void BM_SearchQuintic(benchmark::State& state) {
  BranchData b{5, {5}, {4, 1}, {1, 1, 1, 1, 1}, 1};
  for (auto _ : state) benchmark::DoNotOptimize(search_tuples(b));
}
BENCHMARK(BM_SearchQuintic)->Unit(benchmark::kMicrosecond);

static void BM_AnalyzeY2Prime(benchmark::State& state) {
  auto g = regular_d8_cover();
  for (auto _ : state) benchmark::DoNotOptimize(hodge::analyze(g));
}
BENCHMARK(BM_AnalyzeY2Prime)->Unit(benchmark::kMicrosecond);

static void BM_CanonicalForm(benchmark::State& state) {
  auto g = regular_d8_cover();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Unit(benchmark::kMicrosecond);

static void BM_EnumerateCY(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hodge::enumerate_cy(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateCY)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
