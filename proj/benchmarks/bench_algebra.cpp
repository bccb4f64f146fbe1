#include <benchmark/benchmark.h>

#include "kummer/factor.hpp"
#include "kummer/family.hpp"
#include "kummer/kodaira.hpp"

using namespace kummer;

static void BM_FactorDiscriminant(benchmark::State& state) {
  auto c = kodaira::c_invariants(family::e1_model());
  Polynomial num = c.delta.num();
  for (auto _ : state) benchmark::DoNotOptimize(factor(num));
}
BENCHMARK(BM_FactorDiscriminant);

static void BM_FactorJMinusOne(benchmark::State& state) {
  Polynomial num = (family::j_e1() - 1).num();
  for (auto _ : state) benchmark::DoNotOptimize(factor(num));
}
BENCHMARK(BM_FactorJMinusOne);

static void BM_ClassifyE1(benchmark::State& state) {
  auto w = family::e1_model();
  for (auto _ : state) benchmark::DoNotOptimize(kodaira::classify(w));
}
BENCHMARK(BM_ClassifyE1)->Unit(benchmark::kMillisecond);

static void BM_CrossFamilyIdentity(benchmark::State& state) {
  const auto& l = family::cover_tower().lambda_of_nu;
  for (auto _ : state) {
    RationalFunction lhs = family::j_e1() + family::j_e2();
    benchmark::DoNotOptimize(lhs == compose(family::sigma_closed_form(), l));
  }
}
BENCHMARK(BM_CrossFamilyIdentity)->Unit(benchmark::kMillisecond);

static void BM_KummerInvolution(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(family::preserves_kummer_equation(family::Involution::beta));
}
BENCHMARK(BM_KummerInvolution)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
