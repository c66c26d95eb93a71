#pragma once

#include <cstdint>
#include <string_view>

#include "bstick/random.hpp"
#include "bstick/report.hpp"
#include "bstick/stick.hpp"

namespace bstick {

inline constexpr std::uint64_t kDefaultChunkSize = std::uint64_t{1} << 16;
// Upper bound on trials * n (roughly, uniform draws) for one estimate.
inline constexpr std::uint64_t kDefaultDrawBudget = 20'000'000'000ULL;

struct SimulationConfig {
  int n = 3;
  EventSpec event = AllKSubsetsPolygon{3};
  SamplerModel model = SamplerModel::UniformBreaks;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = kDefaultChunkSize;
  // Decide polygon events by subset enumeration (n <= 15).
  bool use_oracle = false;
  double ci_level = 0.95;
  // 0 selects std::thread::hardware_concurrency(). Never affects results.
  unsigned workers = 0;
  std::uint64_t draw_budget = kDefaultDrawBudget;
};

/// Throws InvalidArgument for malformed configs and BudgetExceeded when
/// trials * n exceeds draw_budget.
void validate(const SimulationConfig& config);

struct EstimateResult {
  double p_hat = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  double ci_level = 0.95;
  std::uint64_t seed = 0;
  SamplerModel model = SamplerModel::UniformBreaks;
  std::string_view generator_id = kGeneratorId;

  /// Binomial standard error sqrt(p_hat (1 - p_hat) / trials).
  double standard_error() const;
};

/// Monte Carlo estimate of P(event).
///
/// Trials are split into chunks of chunk_size; chunk c draws from
/// chunk_generator(seed, c) and covers trials [c * chunk_size, ...).
/// Workers claim whole chunks and per-chunk counts are summed at the end,
/// so the result depends only on (seed, chunk_size, trials, n, event, model).
EstimateResult estimate(const SimulationConfig& config);

struct Interval {
  double low;
  double high;
};

/// Wilson score interval for a binomial proportion, clipped to [0,1].
/// Requires trials >= 1, successes <= trials and 0 < level < 1.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double level);

struct SamplerEquivalence {
  EstimateResult uniform;
  EstimateResult exponential;
  VerificationEntry entry;
};

/// Estimates the event under both sampler models with independent streams
/// (the exponential run uses seed mix64(seed ^ 0x5EED)) and passes iff
/// |p_u - p_e| <= 5 sqrt(se_u^2 + se_e^2).
SamplerEquivalence sampler_equivalence_test(int n, const EventSpec& event, std::uint64_t trials, std::uint64_t seed,
                                            unsigned workers = 0);

}  // namespace bstick
