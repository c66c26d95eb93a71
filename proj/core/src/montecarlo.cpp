#include "bstick/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "bstick/errors.hpp"

namespace bstick {
namespace {

std::uint64_t run_chunk(const SimulationConfig& config, std::uint64_t chunk, std::uint64_t count) {
  auto gen = chunk_generator(config.seed, chunk);
  std::vector<double> pieces(static_cast<std::size_t>(config.n));
  std::uint64_t successes = 0;
  for (std::uint64_t t = 0; t < count; ++t) {
    sample_spacings_into(std::span<double>(pieces), config.model, gen);
    std::sort(pieces.begin(), pieces.end());
    if (evaluate_event_sorted(config.event, pieces, config.use_oracle)) ++successes;
  }
  return successes;
}

}  // namespace

void validate(const SimulationConfig& config) {
  if (config.n < 1) throw InvalidArgument("n must be >= 1");
  if (config.trials < 1) throw InvalidArgument("trials must be >= 1");
  if (config.chunk_size < 1) throw InvalidArgument("chunk_size must be >= 1");
  if (!(config.ci_level > 0.0 && config.ci_level < 1.0)) throw InvalidArgument("ci_level must lie in (0,1)");
  validate_event(config.event, config.n);
  if (config.use_oracle && static_cast<std::size_t>(config.n) > kOracleMaxPieces &&
      !std::holds_alternative<MaxSpacingExceeds>(config.event)) {
    throw InvalidArgument("oracle evaluation requires n <= " + std::to_string(kOracleMaxPieces));
  }
  const auto n = static_cast<std::uint64_t>(config.n);
  if (config.trials > config.draw_budget / n) {
    throw BudgetExceeded("trials * n = " + std::to_string(config.trials) + " * " + std::to_string(n) +
                         " exceeds the budget of " + std::to_string(config.draw_budget));
  }
}

double EstimateResult::standard_error() const {
  return std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials));
}

EstimateResult estimate(const SimulationConfig& config) {
  validate(config);

  const std::uint64_t chunks = (config.trials + config.chunk_size - 1) / config.chunk_size;
  std::vector<std::uint64_t> per_chunk(static_cast<std::size_t>(chunks), 0);

  unsigned workers = config.workers != 0 ? config.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));

  std::atomic<std::uint64_t> next_chunk{0};
  auto work = [&] {
    for (std::uint64_t c = next_chunk.fetch_add(1); c < chunks; c = next_chunk.fetch_add(1)) {
      const std::uint64_t first = c * config.chunk_size;
      const std::uint64_t count = std::min(config.chunk_size, config.trials - first);
      per_chunk[static_cast<std::size_t>(c)] = run_chunk(config, c, count);
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  EstimateResult result;
  result.trials = config.trials;
  result.successes = std::accumulate(per_chunk.begin(), per_chunk.end(), std::uint64_t{0});
  result.p_hat = static_cast<double>(result.successes) / static_cast<double>(result.trials);
  const auto ci = wilson_interval(result.successes, result.trials, config.ci_level);
  result.ci_low = ci.low;
  result.ci_high = ci.high;
  result.ci_level = config.ci_level;
  result.seed = config.seed;
  result.model = config.model;
  return result;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double level) {
  if (trials < 1) throw InvalidArgument("wilson_interval: trials must be >= 1");
  if (successes > trials) throw InvalidArgument("wilson_interval: successes exceed trials");
  if (!(level > 0.0 && level < 1.0)) throw InvalidArgument("wilson_interval: level must lie in (0,1)");

  const double z = boost::math::quantile(boost::math::normal_distribution<double>(), 0.5 + level / 2.0);
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));

  Interval ci{std::clamp(centre - half, 0.0, 1.0), std::clamp(centre + half, 0.0, 1.0)};
  if (successes == 0) ci.low = 0.0;
  if (successes == trials) ci.high = 1.0;
  // The Wilson interval always brackets p_hat; guard against rounding.
  ci.low = std::min(ci.low, p);
  ci.high = std::max(ci.high, p);
  return ci;
}

SamplerEquivalence sampler_equivalence_test(int n, const EventSpec& event, std::uint64_t trials, std::uint64_t seed,
                                            unsigned workers) {
  SimulationConfig config;
  config.n = n;
  config.event = event;
  config.trials = trials;
  config.workers = workers;

  config.model = SamplerModel::UniformBreaks;
  config.seed = seed;
  const auto uniform = estimate(config);

  config.model = SamplerModel::ExponentialNormalized;
  config.seed = mix64(seed ^ 0x5EEDULL);
  const auto exponential = estimate(config);

  const double se_u = uniform.standard_error();
  const double se_e = exponential.standard_error();
  const double tolerance = 5.0 * std::sqrt(se_u * se_u + se_e * se_e);
  auto entry = tolerance_check("mc.sampler-equivalence." + describe(event) + ".n=" + std::to_string(n),
                               format_decimal(uniform.p_hat), format_decimal(exponential.p_hat),
                               std::abs(uniform.p_hat - exponential.p_hat), tolerance);
  return {uniform, exponential, std::move(entry)};
}

}  // namespace bstick
