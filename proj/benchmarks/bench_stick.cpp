#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "bstick/random.hpp"
#include "bstick/stick.hpp"

using namespace bstick;

namespace {

std::vector<std::vector<double>> sorted_samples(int n, int count) {
  auto gen = chunk_generator(1, 0);
  std::vector<std::vector<double>> samples(static_cast<std::size_t>(count), std::vector<double>(n));
  for (auto& s : samples) {
    sample_spacings_into(std::span<double>(s), SamplerModel::UniformBreaks, gen);
    std::sort(s.begin(), s.end());
  }
  return samples;
}

}  // namespace

static void BM_SampleSpacings(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto model = state.range(1) == 0 ? SamplerModel::UniformBreaks : SamplerModel::ExponentialNormalized;
  auto gen = chunk_generator(7, 0);
  std::vector<double> pieces(n);
  for (auto _ : state) {
    sample_spacings_into(std::span<double>(pieces), model, gen);
    benchmark::DoNotOptimize(pieces.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SampleSpacings)->ArgsProduct({{3, 8, 64}, {0, 1}});

static void BM_AllKSubsets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto samples = sorted_samples(n, 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(all_k_subsets_polygon_sorted(samples[i++ & 1023], n / 2 + 1));
}
BENCHMARK(BM_AllKSubsets)->Arg(8)->Arg(12);

static void BM_ExistsWindowed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto samples = sorted_samples(n, 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(exists_k_polygon_windowed_sorted(samples[i++ & 1023], 3));
}
BENCHMARK(BM_ExistsWindowed)->Arg(8)->Arg(12);

static void BM_SubsetOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto samples = sorted_samples(n, 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(subset_polygon_oracle_sorted(samples[i++ & 1023], 3));
}
BENCHMARK(BM_SubsetOracle)->Arg(8)->Arg(12);
