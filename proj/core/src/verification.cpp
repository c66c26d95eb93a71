#include "bstick/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "bstick/combinatorics.hpp"
#include "bstick/errors.hpp"
#include "bstick/montecarlo.hpp"
#include "bstick/quadrature.hpp"
#include "bstick/random.hpp"

namespace bstick {

VerificationEntry exact_check(std::string check_id, const Rational& expected, const Rational& actual) {
  const Rational difference = (expected - actual).abs();
  VerificationEntry entry;
  entry.check_id = std::move(check_id);
  entry.expected = expected.to_string();
  entry.actual = actual.to_string();
  entry.residual = difference.to_double();
  entry.tolerance = 0.0;
  entry.passed = difference.is_zero();
  return entry;
}

VerificationEntry tolerance_check(std::string check_id, std::string expected, std::string actual, double residual,
                                  double tolerance) {
  VerificationEntry entry;
  entry.check_id = std::move(check_id);
  entry.expected = std::move(expected);
  entry.actual = std::move(actual);
  entry.residual = residual;
  entry.tolerance = tolerance;
  entry.passed = residual <= tolerance;
  return entry;
}

bool VerificationReport::all_passed() const { return failure_count() == 0; }

std::size_t VerificationReport::failure_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const VerificationEntry& e) { return !e.passed; }));
}

void VerificationReport::append(const VerificationReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

void VerificationReport::sort_by_id() {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const VerificationEntry& a, const VerificationEntry& b) { return a.check_id < b.check_id; });
}

namespace {

// Zero-padded so lexicographic order of check ids follows numeric order.
std::string padded(int value) {
  char buffer[16];
  std::snprintf(buffer, sizeof buffer, "%03d", value);
  return buffer;
}

template <class Check>
VerificationEntry timed(Check&& check) {
  const auto start = std::chrono::steady_clock::now();
  VerificationEntry entry = check();
  entry.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return entry;
}

VerificationEntry mc_entry(std::string id, const Rational& exact, const SimulationConfig& config) {
  const auto result = estimate(config);
  const double p = exact.to_double();
  const double tolerance = 5.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(config.trials));
  return tolerance_check(std::move(id), exact.to_decimal(), format_decimal(result.p_hat),
                         std::abs(result.p_hat - p), tolerance);
}

}  // namespace

VerificationReport run_exact_crosschecks(int n_max, const ExactOptions& options) {
  if (n_max < 5) throw InvalidArgument("run_exact_crosschecks: n_max must be >= 5");
  if (n_max > options.cap) throw CapExceeded("run_exact_crosschecks: n_max exceeds the exact cap");

  VerificationReport report;
  auto add = [&](std::string id, auto&& expected, auto&& actual) {
    report.entries.push_back(timed([&] { return exact_check(std::move(id), expected(), actual()); }));
  };

  for (int n = 2; n <= n_max; ++n) {
    add("exact.whitworth-half.n=" + padded(n), [&] { return Rational(BigInt(n), BigInt(1) << static_cast<unsigned long>(n - 1)); },
        [&] { return whitworth_survivor(n, Rational(1, 2), options); });
  }
  for (int n = 3; n <= n_max; ++n) {
    add("exact.theorem1-vs-pnn.n=" + padded(n), [&] { return pnn_closed(n, options); },
        [&] { return theorem1_pkn(ProblemSpec(n, n), options); });
    add("exact.theorem1-vs-p3n.n=" + padded(n), [&] { return p3n_closed(n, options); },
        [&] { return theorem1_pkn(ProblemSpec(3, n), options); });
  }
  for (int n = 4; n <= n_max; ++n) {
    add("exact.theorem1-vs-p4n-beta.n=" + padded(n), [&] { return p4n_beta(n, options); },
        [&] { return theorem1_pkn(ProblemSpec(4, n), options); });
  }
  for (int n = 5; n <= n_max; ++n) {
    add("exact.theorem1-vs-p5n-beta.n=" + padded(n), [&] { return p5n_beta(n, options); },
        [&] { return theorem1_pkn(ProblemSpec(5, n), options); });
  }
  report.sort_by_id();
  return report;
}

double lemma3_tolerance(int k) { return k <= 4 ? 1e-8 : 1e-6; }

VerificationReport run_lemma3_checks(const Lemma3Grid& grid) {
  VerificationReport report;
  for (int k : grid.ks) {
    for (int n = k; n <= grid.n_max; ++n) {
      for (int j = 1; j <= std::min(grid.j_max, n - k + 2); ++j) {
        report.entries.push_back(timed([&] {
          const auto result = lemma3_residual(k, n, j);
          auto entry = tolerance_check("lemma3.k=" + std::to_string(k) + ".n=" + padded(n) + ".j=" + padded(j),
                                       lemma3_rhs(k, n, j).to_string(), format_decimal(result.lhs, 17),
                                       result.residual, lemma3_tolerance(k));
          entry.passed = entry.passed && result.converged;
          return entry;
        }));
      }
    }
  }
  report.sort_by_id();
  return report;
}

VerificationReport run_mc_crosschecks(std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  if (trials < 10'000) throw InvalidArgument("run_mc_crosschecks: trials must be >= 10^4");

  VerificationReport report;
  std::uint64_t stream = 0;
  auto config_for = [&](int n, EventSpec event) {
    SimulationConfig config;
    config.n = n;
    config.event = event;
    config.trials = trials;
    config.seed = mix64(seed ^ mix64(++stream));
    config.workers = workers;
    return config;
  };

  for (int n = 3; n <= 8; ++n) {
    for (int k = 3; k <= n; ++k) {
      report.entries.push_back(timed([&] {
        return mc_entry("mc.theorem1.k=" + std::to_string(k) + ".n=" + padded(n), theorem1_pkn(ProblemSpec(k, n)),
                        config_for(n, AllKSubsetsPolygon{k}));
      }));
    }
  }

  const Rational whitworth_points[] = {Rational(1, 3), Rational(1, 2), Rational(2, 3)};
  for (int n = 3; n <= 6; ++n) {
    for (const auto& x : whitworth_points) {
      report.entries.push_back(timed([&] {
        return mc_entry("mc.whitworth.n=" + padded(n) + ".x=" + x.to_string(), whitworth_survivor(n, x),
                        config_for(n, MaxSpacingExceeds{x.to_double()}));
      }));
    }
  }

  for (int n = 3; n <= 8; ++n) {
    report.entries.push_back(timed([&] {
      return mc_entry("mc.exists-triangle.n=" + padded(n), exists_triangle_prob(n),
                      config_for(n, ExistsKPolygon{3}));
    }));
  }

  const std::pair<int, EventSpec> equivalence_cases[] = {
      {5, AllKSubsetsPolygon{3}}, {6, AllKSubsetsPolygon{4}}, {7, AllKSubsetsPolygon{5}},
      {6, MaxSpacingExceeds{0.5}}, {4, ExistsKPolygon{3}},
  };
  for (const auto& [n, event] : equivalence_cases) {
    report.entries.push_back(timed([&] {
      return sampler_equivalence_test(n, event, trials, mix64(seed ^ mix64(++stream)), workers).entry;
    }));
  }

  report.sort_by_id();
  return report;
}

VerificationReport run_identity_selftests() {
  VerificationReport report;

  for (int k = 4; k <= 20; ++k) {
    report.entries.push_back(timed([&] {
      const auto sides = alternating_factorial_sides(k);
      return exact_check("identity.alternating-factorial.k=" + padded(k), sides.rhs, sides.lhs);
    }));
  }

  const Rational samples[] = {Rational(3, 2), Rational(-7, 3), Rational(5), Rational(1, 7), Rational(22, 9)};

  report.entries.push_back(timed([&] {
    Rational worst;
    for (const auto& x : samples) {
      for (unsigned long m = 0; m <= 20; ++m) {
        const Rational lhs = pochhammer(x, m + 1);
        const Rational rhs = pochhammer(x, m) * (x + Rational(static_cast<long>(m)));
        worst = std::max(worst, (lhs - rhs).abs());
      }
    }
    return exact_check("identity.kernel.pochhammer-recurrence", Rational(0), worst);
  }));

  report.entries.push_back(timed([&] {
    Rational worst;
    for (const auto& x : samples) {
      if (x.sign() <= 0) continue;
      for (unsigned long a = 1; a <= 12; ++a) {
        const Rational product = beta_int(a, x) * pochhammer(x, a);
        worst = std::max(worst, (product - Rational(factorial(a - 1))).abs());
      }
    }
    return exact_check("identity.kernel.beta-pochhammer", Rational(0), worst);
  }));

  report.entries.push_back(timed([&] {
    BigInt worst = 0;
    for (unsigned long n = 1; n <= 40; ++n) {
      for (unsigned long j = 1; j <= n; ++j) {
        const BigInt diff = abs(binomial(n, j) - binomial(n - 1, j - 1) - binomial(n - 1, j));
        if (diff > worst) worst = diff;
      }
    }
    return exact_check("identity.kernel.pascal", Rational(0), Rational(worst));
  }));

  report.entries.push_back(timed([&] {
    BigInt worst = 0;
    for (unsigned long j = 3; j <= 90; ++j) {
      const BigInt diff = abs(fibonacci(j) - fibonacci(j - 1) - fibonacci(j - 2));
      if (diff > worst) worst = diff;
    }
    return exact_check("identity.kernel.fibonacci-recurrence", Rational(0), Rational(worst));
  }));

  report.sort_by_id();
  return report;
}

}  // namespace bstick
