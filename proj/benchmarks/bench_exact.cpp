#include <benchmark/benchmark.h>

#include "bstick/exact.hpp"
#include "bstick/quadrature.hpp"

using namespace bstick;

static void BM_PolygonProbabilityExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ProblemSpec spec(n / 2 + 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_pkn(spec));
}
BENCHMARK(BM_PolygonProbabilityExact)->Arg(8)->Arg(30)->Arg(60)->Arg(120)->Arg(200)->Unit(benchmark::kMicrosecond);

static void BM_PolygonProbabilityDouble(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ProblemSpec spec(n / 2 + 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_pkn_double(spec));
}
BENCHMARK(BM_PolygonProbabilityDouble)->Arg(30)->Arg(200)->Arg(1000);

static void BM_WhitworthSurvivor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(whitworth_survivor(n, Rational(1, 3)));
}
BENCHMARK(BM_WhitworthSurvivor)->Arg(10)->Arg(100);

static void BM_NestedIntegralQuadrature(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lemma3_residual(k, 8, 2));
}
BENCHMARK(BM_NestedIntegralQuadrature)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
