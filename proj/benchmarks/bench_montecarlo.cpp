#include <benchmark/benchmark.h>

#include "bstick/montecarlo.hpp"

using namespace bstick;

static void BM_Estimate(benchmark::State& state) {
  SimulationConfig config;
  config.n = static_cast<int>(state.range(0));
  config.event = AllKSubsetsPolygon{3};
  config.trials = 200'000;
  config.model = state.range(1) == 0 ? SamplerModel::UniformBreaks : SamplerModel::ExponentialNormalized;
  config.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(estimate(config));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.trials));
}
BENCHMARK(BM_Estimate)->ArgsProduct({{3, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_EstimateOracle(benchmark::State& state) {
  SimulationConfig config;
  config.n = 10;
  config.event = ExistsKPolygon{4};
  config.trials = 50'000;
  config.use_oracle = state.range(0) != 0;
  config.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(estimate(config));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.trials));
}
BENCHMARK(BM_EstimateOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
