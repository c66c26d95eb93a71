#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bstick {

/// Two ways of producing the pieces of a broken stick. Both give the same
/// joint distribution of spacings.
///
/// UniformBreaks: n-1 uniform break points, sorted and differenced.
///   Consumes exactly n-1 uniforms per sample.
/// ExponentialNormalized: n unit-mean exponentials Y_i divided by their sum.
///   Consumes exactly n uniforms per sample (inverse transform, one each).
enum class SamplerModel { UniformBreaks, ExponentialNormalized };

std::string_view to_string(SamplerModel model);

constexpr std::size_t draws_per_sample(std::size_t n, SamplerModel model) {
  if (model == SamplerModel::UniformBreaks) return n == 0 ? 0 : n - 1;
  return n;
}

template <class G>
concept UniformSource = requires(G& g) {
  { g.next_uniform() } -> std::convertible_to<double>;
};

/// Lengths of the n pieces of one broken unit stick, in sampled order.
///
/// Invariants: every entry is >= 0 and the compensated sum of the entries is
/// within 8 * DBL_EPSILON of 1.
class SpacingVector {
 public:
  /// Throws InvalidArgument if the invariants do not hold.
  explicit SpacingVector(std::vector<double> lengths);

  static bool satisfies_invariants(std::span<const double> lengths);

  std::size_t size() const { return lengths_.size(); }
  double operator[](std::size_t i) const { return lengths_[i]; }
  std::span<const double> lengths() const { return lengths_; }

  /// Ascending copy: the order statistics of the spacings.
  std::vector<double> sorted() const;

 private:
  std::vector<double> lengths_;
};

/// Neumaier-compensated sum.
double compensated_sum(std::span<const double> values);

/// Pieces from n-1 break points in [0,1), given in any order.
SpacingVector spacings_from_breaks(std::span<const double> break_points);

/// Pieces Y_i / (Y_1 + ... + Y_n) from nonnegative weights, not all zero.
SpacingVector spacings_from_exponentials(std::span<const double> weights);

/// Unit-mean exponential by inverse transform, -ln(1-u).
template <UniformSource G>
double draw_exponential(G& gen) {
  for (;;) {
    const double value = -std::log1p(-static_cast<double>(gen.next_uniform()));
    if (std::isfinite(value)) return value;
  }
}

/// Writes one sample of out.size() pieces into `out` (sampled order).
/// Hot-path form of sample_spacings; does not allocate.
template <UniformSource G>
void sample_spacings_into(std::span<double> out, SamplerModel model, G& gen) {
  const std::size_t n = out.size();
  if (n == 0) return;
  if (model == SamplerModel::UniformBreaks) {
    for (std::size_t i = 0; i + 1 < n; ++i) out[i] = gen.next_uniform();
    std::sort(out.begin(), out.end() - 1);
    out[n - 1] = 1.0 - (n >= 2 ? out[n - 2] : 0.0);
    for (std::size_t i = n - 1; i-- > 1;) out[i] -= out[i - 1];
    return;
  }
  for (auto& y : out) y = draw_exponential(gen);
  const double total = compensated_sum(out);
  if (total > 0.0) {
    for (auto& y : out) y /= total;
  } else {
    // Every draw was exactly zero (probability 2^-53n); split evenly.
    std::fill(out.begin(), out.end(), 1.0 / static_cast<double>(n));
  }
}

template <UniformSource G>
SpacingVector sample_spacings(std::size_t n, SamplerModel model, G& gen) {
  if (n < 1) return SpacingVector({});
  std::vector<double> buffer(n);
  sample_spacings_into(std::span<double>(buffer), model, gen);
  return SpacingVector(std::move(buffer));
}

// Polygon predicates. A multiset of lengths forms a polygon (possibly
// degenerate) iff its largest element is <= the sum of the others.

/// Every k of the pieces form a k-gon. Equivalent to: the largest piece is
/// <= the sum of the k-1 smallest. Requires 3 <= k <= n.
bool all_k_subsets_polygon(const SpacingVector& s, int k);
bool all_k_subsets_polygon_sorted(std::span<const double> ascending, int k);

/// Some consecutive window of k order statistics forms a k-gon.
/// Requires 3 <= k <= n.
bool exists_k_polygon_windowed(const SpacingVector& s, int k);
bool exists_k_polygon_windowed_sorted(std::span<const double> ascending, int k);

/// Largest piece strictly exceeds x, for 0 < x < 1.
bool max_spacing_exceeds(const SpacingVector& s, double x);

/// x_i <= sum_{j != i} x_j for every i, checked literally.
bool polygon_inequality(std::span<const double> lengths);

inline constexpr std::size_t kOracleMaxPieces = 15;

struct SubsetVerdict {
  bool all = false;
  bool exists = false;
};

/// Brute force over all C(n, k) subsets with polygon_inequality.
/// Requires 3 <= k <= n <= 15.
SubsetVerdict subset_polygon_oracle(const SpacingVector& s, int k);
SubsetVerdict subset_polygon_oracle_sorted(std::span<const double> ascending, int k);

struct AllKSubsetsPolygon {
  int k;
};
struct ExistsKPolygon {
  int k;
};
struct MaxSpacingExceeds {
  double x;
};

using EventSpec = std::variant<AllKSubsetsPolygon, ExistsKPolygon, MaxSpacingExceeds>;

/// Throws InvalidArgument unless the event is well-formed for n pieces.
void validate_event(const EventSpec& event, int n);

/// "all:k=3", "exists:k=4", "max-spacing:x=0.5".
std::string describe(const EventSpec& event);

/// Indicator of the event on the ascending order statistics. With
/// use_oracle the polygon events are decided by subset enumeration.
bool evaluate_event_sorted(const EventSpec& event, std::span<const double> ascending, bool use_oracle = false);

}  // namespace bstick
