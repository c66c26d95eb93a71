#pragma once

#include <span>

#include "bstick/rational.hpp"

namespace bstick {

/// (k, n): form k-gons from the n pieces of a stick broken at n-1 points.
class ProblemSpec {
 public:
  /// Throws InvalidArgument unless 3 <= k <= n.
  ProblemSpec(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;

 private:
  int k_;
  int n_;
};

inline constexpr int kDefaultExactCap = 200;

struct ExactOptions {
  // Largest n accepted by the exact formulas; bounds rational bit growth.
  int cap = kDefaultExactCap;
};

/// Probability that every choice of k of the n pieces forms a k-gon,
/// evaluated exactly from the alternating sum
///
///   n(n-1)...(n-k+3) / (n-k+2) * sum_{j=1}^{n-k+2} (-1)^{j+1} j^{-(k-3)}
///       C(n-k+2, j) / ((n-k+2)/j + 1)_{k-2}.
///
/// The prefactor is falling_product(n, k-2); for k = 3 it is the single
/// factor n and j^{-(k-3)} = 1.
Rational theorem1_pkn(const ProblemSpec& spec, const ExactOptions& options = {});

/// 1 - n / 2^(n-1): all n pieces form an n-gon.
Rational pnn_closed(int n, const ExactOptions& options = {});

/// 1 / C(2n-2, n): every triple forms a triangle.
Rational p3n_closed(int n, const ExactOptions& options = {});

/// n(n-1)/(n-2) * (B(n-1, (n-2)/2) / 2 - B(n-1, n-2)).
Rational p4n_beta(int n, const ExactOptions& options = {});

/// n(n-1)(n-2)/(n-3)^2 *
///   (B(n-2, (n-3)/3) / 2 + B(n-2, n-3) / 2 - B(n-2, (n-3)/2)).
Rational p5n_beta(int n, const ExactOptions& options = {});

/// P(largest spacing > x) = sum_{j >= 1, jx < 1} (-1)^{j+1} (1 - jx)^{n-1} C(n, j),
/// for 0 < x < 1 and n >= 2.
Rational whitworth_survivor(int n, const Rational& x, const ExactOptions& options = {});

/// P(spacing_i > c_i for all i) = (1 - sum c)^{n-1} if sum c < 1, else 0,
/// where n = c.size().
Rational joint_spacing_survivor(std::span<const Rational> c);

/// Probability that some three pieces form a triangle:
/// 1 - n! / prod_{j=2}^{n} (F_{j+2} - 1).
Rational exists_triangle_prob(int n, const ExactOptions& options = {});

struct IdentitySides {
  Rational lhs;
  Rational rhs;
};

/// Both sides of sum_{i=2}^{k-1} (-1)^i / ((i-1)! (k-1-i)!) = 1/(k-2)!.
IdentitySides alternating_factorial_sides(int k);

/// True when the two sides above agree exactly. Requires k >= 4.
bool alternating_factorial_identity(int k);

// Double-precision evaluation of theorem1_pkn for n beyond the exact cap.

inline constexpr double kCancellationWarningRatio = 1e12;

struct ApproximateValue {
  double value = 0.0;
  double max_abs_term = 0.0;
  // max |term| / |value|; a measure of how much precision cancelled.
  double cancellation_ratio = 0.0;
  bool cancellation_warning = false;
};

/// Neumaier-compensated evaluation of the same alternating sum in doubles.
/// Terms are formed in log space so large binomials do not overflow early.
/// Sets cancellation_warning when cancellation_ratio > 1e12.
ApproximateValue theorem1_pkn_double(const ProblemSpec& spec);

}  // namespace bstick
