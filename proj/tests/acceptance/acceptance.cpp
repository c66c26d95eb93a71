// Acceptance criteria runner. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails or exceeds its time limit.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "bstick/combinatorics.hpp"
#include "bstick/exact.hpp"
#include "bstick/montecarlo.hpp"
#include "bstick/quadrature.hpp"
#include "bstick/random.hpp"
#include "bstick/stick.hpp"
#include "cli/cli.hpp"

using namespace bstick;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& what) {
    if (passed) detail = what;
    passed = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_ms;
  std::function<Outcome()> body;
};

double five_se(double p, std::uint64_t trials) { return 5.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials)); }

std::string fmt(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

Outcome classic_triangle() {
  Outcome o;
  const auto value = theorem1_pkn(ProblemSpec(3, 3));
  if (value != Rational(1, 4)) o.fail("got " + value.to_string());
  o.detail = o.passed ? "P(3,3) = " + value.to_string() : o.detail;
  return o;
}

Outcome diagonal() {
  Outcome o;
  for (int n = 3; n <= 30; ++n) {
    const Rational expected = Rational(1) - Rational(BigInt(n), BigInt(1) << static_cast<unsigned long>(n - 1));
    const auto value = theorem1_pkn(ProblemSpec(n, n));
    if (value != expected) o.fail("n=" + std::to_string(n) + ": " + value.to_string() + " != " + expected.to_string());
  }
  if (o.passed) o.detail = "n = 3..30 exact";
  return o;
}

Outcome triangles() {
  Outcome o;
  for (int n = 3; n <= 30; ++n) {
    const Rational expected = Rational(BigInt(1), binomial(2 * n - 2, n));
    const auto value = theorem1_pkn(ProblemSpec(3, n));
    if (value != expected) o.fail("n=" + std::to_string(n) + ": " + value.to_string() + " != " + expected.to_string());
  }
  if (o.passed) o.detail = "n = 3..30 exact";
  return o;
}

Outcome beta_forms() {
  Outcome o;
  for (int n = 4; n <= 30; ++n) {
    if (theorem1_pkn(ProblemSpec(4, n)) != p4n_beta(n)) o.fail("k=4 n=" + std::to_string(n));
    if (n >= 5 && theorem1_pkn(ProblemSpec(5, n)) != p5n_beta(n)) o.fail("k=5 n=" + std::to_string(n));
  }
  const struct {
    int k, n;
    Rational value;
  } named[] = {{4, 4, Rational(1, 2)}, {4, 5, Rational(43, 189)}, {5, 5, Rational(11, 16)}};
  for (const auto& v : named) {
    const auto direct = theorem1_pkn(ProblemSpec(v.k, v.n));
    const auto beta = v.k == 4 ? p4n_beta(v.n) : p5n_beta(v.n);
    if (direct != v.value || beta != v.value) {
      o.fail("P(" + std::to_string(v.k) + "," + std::to_string(v.n) + ") = " + direct.to_string() + " / " +
             beta.to_string());
    }
  }
  if (o.passed) o.detail = "k = 4, 5 up to n = 30; P44 = 1/2, P45 = 43/189, P55 = 11/16";
  return o;
}

Outcome whitworth_half() {
  Outcome o;
  for (int n = 2; n <= 30; ++n) {
    const Rational expected(BigInt(n), BigInt(1) << static_cast<unsigned long>(n - 1));
    const auto value = whitworth_survivor(n, Rational(1, 2));
    if (value != expected) o.fail("n=" + std::to_string(n) + ": " + value.to_string());
  }
  if (o.passed) o.detail = "n = 2..30 exact";
  return o;
}

Outcome alternating_identity() {
  Outcome o;
  for (int k = 4; k <= 20; ++k) {
    if (!alternating_factorial_identity(k)) o.fail("k=" + std::to_string(k));
  }
  if (o.passed) o.detail = "k = 4..20 exact";
  return o;
}

Outcome lemma3() {
  Outcome o;
  double worst4 = 0.0;
  double worst5 = 0.0;
  int count = 0;
  for (int k : {4, 5}) {
    const double tolerance = k == 4 ? 1e-8 : 1e-6;
    for (int n = k; n <= 8; ++n) {
      for (int j = 1; j <= std::min(3, n - k + 2); ++j) {
        const auto r = lemma3_residual(k, n, j);
        ++count;
        (k == 4 ? worst4 : worst5) = std::max(k == 4 ? worst4 : worst5, r.residual);
        if (!(r.residual <= tolerance) || !r.converged) {
          o.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + " j=" + std::to_string(j) +
                 " residual " + fmt(r.residual) + (r.converged ? "" : " (not converged)"));
        }
      }
    }
  }
  if (o.passed) {
    o.detail = std::to_string(count) + " cases; max residual k=4 " + fmt(worst4) + ", k=5 " + fmt(worst5);
  }
  return o;
}

Outcome mc_grid() {
  Outcome o;
  const std::uint64_t trials = 1'000'000;
  double worst = 0.0;
  for (int n = 3; n <= 8; ++n) {
    for (int k = 3; k <= n; ++k) {
      SimulationConfig config;
      config.n = n;
      config.event = AllKSubsetsPolygon{k};
      config.trials = trials;
      config.seed = 20240000u + static_cast<std::uint64_t>(10 * n + k);
      const auto r = estimate(config);
      const double p = theorem1_pkn(ProblemSpec(k, n)).to_double();
      const double z = std::abs(r.p_hat - p) / (five_se(p, trials) / 5.0);
      worst = std::max(worst, z);
      if (std::abs(r.p_hat - p) > five_se(p, trials)) {
        o.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + " p_hat " + fmt(r.p_hat) + " vs " + fmt(p));
      }
    }
  }
  if (o.passed) o.detail = "21 cells at 1e6 trials; max |z| = " + fmt(worst);
  return o;
}

Outcome sampler_equivalence() {
  Outcome o;
  const std::pair<int, EventSpec> cases[] = {
      {5, AllKSubsetsPolygon{3}}, {6, AllKSubsetsPolygon{4}}, {7, AllKSubsetsPolygon{5}}, {6, MaxSpacingExceeds{0.5}}};
  std::uint64_t seed = 7000;
  double worst = 0.0;
  for (const auto& [n, event] : cases) {
    const auto r = sampler_equivalence_test(n, event, 1'000'000, ++seed);
    worst = std::max(worst, r.entry.residual / (r.entry.tolerance / 5.0));
    if (!r.entry.passed) o.fail(r.entry.check_id + " residual " + fmt(r.entry.residual));
  }
  if (o.passed) o.detail = "4 cases at 1e6 trials; max |z| = " + fmt(worst);
  return o;
}

Outcome existence() {
  Outcome o;
  const std::uint64_t trials = 1'000'000;
  const std::pair<int, double> cases[] = {{4, 4.0 / 7.0}, {5, 23.0 / 28.0}};
  std::string detail;
  for (const auto& [n, p] : cases) {
    SimulationConfig config;
    config.n = n;
    config.event = ExistsKPolygon{3};
    config.trials = trials;
    config.seed = 31000u + static_cast<std::uint64_t>(n);
    const auto r = estimate(config);
    if (std::abs(r.p_hat - p) > five_se(p, trials)) o.fail("n=" + std::to_string(n) + " p_hat " + fmt(r.p_hat));
    detail += (detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + " p_hat " + fmt(r.p_hat);
  }
  if (o.passed) o.detail = detail;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  constexpr int kVectors = 500;
  long checks = 0;
  std::vector<double> pieces;
  for (int n = 3; n <= 12; ++n) {
    auto gen = chunk_generator(0xACCE97u, static_cast<std::uint64_t>(n));
    pieces.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < kVectors; ++v) {
      sample_spacings_into(std::span<double>(pieces), SamplerModel::UniformBreaks, gen);
      const SpacingVector s(pieces);
      for (int k = 3; k <= std::min(n, 10); ++k) {
        const auto verdict = subset_polygon_oracle(s, k);
        if (n <= 10) {
          ++checks;
          if (all_k_subsets_polygon(s, k) != verdict.all) {
            o.fail("all k=" + std::to_string(k) + " n=" + std::to_string(n) + " vector " + std::to_string(v));
          }
        }
        if (k == 3) {
          ++checks;
          if (exists_k_polygon_windowed(s, k) != verdict.exists) {
            o.fail("exists n=" + std::to_string(n) + " vector " + std::to_string(v));
          }
        }
      }
    }
  }
  if (o.passed) o.detail = std::to_string(checks) + " comparisons, 0 disagreements";
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> args{"simulate", "--n", "6", "--event", "all", "--k", "4",
                                      "--trials", "1000000", "--seed", "424242", "--format", "json"};
  const std::regex stamp(R"("timestamp": "[^"]*")");
  std::string outputs[2];
  for (auto& output : outputs) {
    std::ostringstream out, err;
    if (cli::run(args, out, err) != 0) o.fail("simulate failed: " + err.str());
    output = std::regex_replace(out.str(), stamp, "");
  }
  if (outputs[0] != outputs[1]) o.fail("repeated simulate output differs");

  SimulationConfig config;
  config.n = 6;
  config.event = AllKSubsetsPolygon{4};
  config.trials = 1'000'000;
  config.seed = 424242;
  config.workers = 1;
  const auto one = estimate(config);
  config.workers = 8;
  const auto eight = estimate(config);
  if (one.successes != eight.successes || one.trials != eight.trials || one.p_hat != eight.p_hat) {
    o.fail("workers 1 vs 8: " + std::to_string(one.successes) + " vs " + std::to_string(eight.successes));
  }
  if (o.passed) o.detail = "successes " + std::to_string(one.successes) + " / " + std::to_string(one.trials);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exact P(3,3) = 1/4", 1.0, classic_triangle},
      {2, "exact diagonal P(n,n) = 1 - n/2^(n-1)", 1000.0, diagonal},
      {3, "exact P(3,n) = 1/C(2n-2,n)", 1000.0, triangles},
      {4, "exact k = 4, 5 beta forms", 2000.0, beta_forms},
      {5, "exact whitworth(n, 1/2) = n/2^(n-1)", 1000.0, whitworth_half},
      {6, "alternating factorial identity", 1000.0, alternating_identity},
      {7, "nested integral identity by quadrature", 60'000.0, lemma3},
      {8, "Monte Carlo vs exact grid", 180'000.0, mc_grid},
      {9, "uniform vs exponential sampler equivalence", 120'000.0, sampler_equivalence},
      {10, "triangle existence probability", 30'000.0, existence},
      {11, "fast predicates vs subset oracle", 60'000.0, oracle_equivalence},
      {12, "seeded simulate determinism", 30'000.0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ms > c.limit_ms) outcome.fail("time " + fmt(ms) + " ms exceeds limit; " + outcome.detail);
    if (!outcome.passed) ++failures;
    std::printf("%s [%02d] %s: %s (%.3f ms, limit %.0f ms)\n", outcome.passed ? "PASS" : "FAIL", c.id, c.name.c_str(),
                outcome.detail.c_str(), ms, c.limit_ms);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
