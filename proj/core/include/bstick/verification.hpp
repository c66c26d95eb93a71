#pragma once

#include <cstdint>
#include <vector>

#include "bstick/exact.hpp"
#include "bstick/report.hpp"

namespace bstick {

/// Exact cross-checks, one entry per identity and n:
///   theorem1(n,n) = pnn_closed(n)      n = 3..n_max
///   theorem1(3,n) = p3n_closed(n)      n = 3..n_max
///   theorem1(4,n) = p4n_beta(n)        n = 4..n_max
///   theorem1(5,n) = p5n_beta(n)        n = 5..n_max
///   whitworth(n, 1/2) = n / 2^(n-1)    n = 2..n_max
/// Requires n_max >= 5.
VerificationReport run_exact_crosschecks(int n_max, const ExactOptions& options = {});

struct Lemma3Grid {
  std::vector<int> ks{4, 5};
  int n_max = 8;
  int j_max = 3;
};

/// 1e-8 for k = 4, 1e-6 for k >= 5.
double lemma3_tolerance(int k);

/// One quadrature entry per (k, n, j) with n = k..n_max, j = 1..min(j_max, n-k+2).
VerificationReport run_lemma3_checks(const Lemma3Grid& grid = {});

/// Simulation against exact values, each within 5 binomial standard errors:
/// all-subsets events for 3 <= k <= n <= 8, largest-spacing survivor points,
/// triangle existence for n = 3..8, and sampler-model equivalence.
/// Requires trials >= 10^4.
VerificationReport run_mc_crosschecks(std::uint64_t trials, std::uint64_t seed, unsigned workers = 0);

/// Alternating factorial identity for k = 4..20 plus kernel recurrences.
VerificationReport run_identity_selftests();

}  // namespace bstick
