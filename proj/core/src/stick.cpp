#include "bstick/stick.hpp"

#include <bit>
#include <cfloat>
#include <string>
#include <type_traits>

#include "bstick/errors.hpp"
#include "bstick/rational.hpp"

namespace bstick {
namespace {

void require_k(int k, std::size_t n) {
  if (k < 3 || static_cast<std::size_t>(k) > n) {
    throw InvalidArgument("polygon side count k=" + std::to_string(k) + " invalid for n=" + std::to_string(n) +
                          " pieces: need 3 <= k <= n");
  }
}

void require_open_unit(double x) {
  if (!(x > 0.0 && x < 1.0)) throw InvalidArgument("x must lie in (0,1), got " + format_decimal(x));
}

// Sum of ascending[first, first+count), accumulated smallest first.
double ascending_sum(std::span<const double> ascending, std::size_t first, std::size_t count) {
  double sum = 0.0;
  for (std::size_t i = first; i < first + count; ++i) sum += ascending[i];
  return sum;
}

}  // namespace

std::string_view to_string(SamplerModel model) {
  switch (model) {
    case SamplerModel::UniformBreaks:
      return "uniform";
    case SamplerModel::ExponentialNormalized:
      return "exponential";
  }
  return "unknown";
}

double compensated_sum(std::span<const double> values) {
  double sum = 0.0;
  double compensation = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      compensation += (sum - t) + v;
    } else {
      compensation += (v - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

bool SpacingVector::satisfies_invariants(std::span<const double> lengths) {
  if (lengths.empty()) return false;
  for (double v : lengths) {
    if (!(v >= 0.0) || !std::isfinite(v)) return false;
  }
  return std::abs(compensated_sum(lengths) - 1.0) <= 8 * DBL_EPSILON;
}

SpacingVector::SpacingVector(std::vector<double> lengths) : lengths_(std::move(lengths)) {
  if (!satisfies_invariants(lengths_)) {
    throw InvalidArgument("spacing vector must be nonempty, nonnegative and sum to 1");
  }
}

std::vector<double> SpacingVector::sorted() const {
  std::vector<double> copy = lengths_;
  std::sort(copy.begin(), copy.end());
  return copy;
}

SpacingVector spacings_from_breaks(std::span<const double> break_points) {
  std::vector<double> points(break_points.begin(), break_points.end());
  for (double p : points) {
    if (!(p >= 0.0 && p < 1.0)) throw InvalidArgument("break points must lie in [0,1)");
  }
  std::sort(points.begin(), points.end());
  std::vector<double> lengths(points.size() + 1);
  double previous = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    lengths[i] = points[i] - previous;
    previous = points[i];
  }
  lengths.back() = 1.0 - previous;
  return SpacingVector(std::move(lengths));
}

SpacingVector spacings_from_exponentials(std::span<const double> weights) {
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw InvalidArgument("weights must be finite and nonnegative");
  }
  const double total = compensated_sum(weights);
  if (!(total > 0.0)) throw InvalidArgument("weights must not all be zero");
  std::vector<double> lengths(weights.begin(), weights.end());
  for (auto& v : lengths) v /= total;
  return SpacingVector(std::move(lengths));
}

bool all_k_subsets_polygon_sorted(std::span<const double> ascending, int k) {
  require_k(k, ascending.size());
  return ascending.back() <= ascending_sum(ascending, 0, static_cast<std::size_t>(k - 1));
}

bool all_k_subsets_polygon(const SpacingVector& s, int k) {
  require_k(k, s.size());
  // Only the max and the k-1 smallest matter.
  std::vector<double> v(s.lengths().begin(), s.lengths().end());
  const auto small_end = v.begin() + (k - 1);
  std::partial_sort(v.begin(), small_end, v.end());
  const double largest = *std::max_element(small_end, v.end());
  return largest <= ascending_sum(v, 0, static_cast<std::size_t>(k - 1));
}

bool exists_k_polygon_windowed_sorted(std::span<const double> ascending, int k) {
  require_k(k, ascending.size());
  const auto window = static_cast<std::size_t>(k);
  for (std::size_t j = 0; j + window <= ascending.size(); ++j) {
    if (ascending[j + window - 1] <= ascending_sum(ascending, j, window - 1)) return true;
  }
  return false;
}

bool exists_k_polygon_windowed(const SpacingVector& s, int k) {
  const auto ascending = s.sorted();
  return exists_k_polygon_windowed_sorted(ascending, k);
}

bool max_spacing_exceeds(const SpacingVector& s, double x) {
  require_open_unit(x);
  return *std::max_element(s.lengths().begin(), s.lengths().end()) > x;
}

bool polygon_inequality(std::span<const double> lengths) {
  std::vector<double> ascending(lengths.begin(), lengths.end());
  std::sort(ascending.begin(), ascending.end());
  for (std::size_t i = 0; i < ascending.size(); ++i) {
    double others = 0.0;
    for (std::size_t j = 0; j < ascending.size(); ++j) {
      if (j != i) others += ascending[j];
    }
    if (ascending[i] > others) return false;
  }
  return true;
}

SubsetVerdict subset_polygon_oracle_sorted(std::span<const double> ascending, int k) {
  const std::size_t n = ascending.size();
  if (n > kOracleMaxPieces) {
    throw InvalidArgument("subset oracle limited to n <= " + std::to_string(kOracleMaxPieces) + " pieces, got " +
                          std::to_string(n));
  }
  require_k(k, n);

  SubsetVerdict verdict{true, false};
  std::vector<double> subset(static_cast<std::size_t>(k));
  // Enumerate k-subsets as bitmasks with exactly k bits set.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::size_t filled = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset[filled++] = ascending[i];
    }
    if (polygon_inequality(subset)) {
      verdict.exists = true;
    } else {
      verdict.all = false;
    }
  }
  return verdict;
}

SubsetVerdict subset_polygon_oracle(const SpacingVector& s, int k) {
  const auto ascending = s.sorted();
  return subset_polygon_oracle_sorted(ascending, k);
}

void validate_event(const EventSpec& event, int n) {
  if (n < 1) throw InvalidArgument("need at least one piece");
  std::visit(
      [n](const auto& e) {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, MaxSpacingExceeds>) {
          require_open_unit(e.x);
        } else {
          require_k(e.k, static_cast<std::size_t>(n));
        }
      },
      event);
}

std::string describe(const EventSpec& event) {
  return std::visit(
      [](const auto& e) -> std::string {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, AllKSubsetsPolygon>) {
          return "all:k=" + std::to_string(e.k);
        } else if constexpr (std::is_same_v<E, ExistsKPolygon>) {
          return "exists:k=" + std::to_string(e.k);
        } else {
          return "max-spacing:x=" + format_decimal(e.x);
        }
      },
      event);
}

bool evaluate_event_sorted(const EventSpec& event, std::span<const double> ascending, bool use_oracle) {
  return std::visit(
      [&](const auto& e) -> bool {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, AllKSubsetsPolygon>) {
          return use_oracle ? subset_polygon_oracle_sorted(ascending, e.k).all
                            : all_k_subsets_polygon_sorted(ascending, e.k);
        } else if constexpr (std::is_same_v<E, ExistsKPolygon>) {
          return use_oracle ? subset_polygon_oracle_sorted(ascending, e.k).exists
                            : exists_k_polygon_windowed_sorted(ascending, e.k);
        } else {
          return ascending.back() > e.x;
        }
      },
      event);
}

}  // namespace bstick
