#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <vector>

#include "bstick/combinatorics.hpp"
#include "bstick/errors.hpp"
#include "bstick/exact.hpp"

using namespace bstick;

namespace {

Rational pnn_formula(int n) { return Rational(1) - Rational(BigInt(n), BigInt(1) << static_cast<unsigned long>(n - 1)); }

// Test-only route to the largest-spacing survivor: inclusion-exclusion over
// every nonempty subset of pieces using the joint survivor function.
Rational whitworth_by_subsets(int n, const Rational& x) {
  Rational total;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) c[static_cast<std::size_t>(i)] = x;
    }
    const Rational term = joint_spacing_survivor(c);
    if (std::popcount(mask) % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace

TEST(ProblemSpec, Validates) {
  EXPECT_NO_THROW(ProblemSpec(3, 3));
  EXPECT_THROW(ProblemSpec(2, 5), InvalidArgument);
  EXPECT_THROW(ProblemSpec(6, 5), InvalidArgument);
}

TEST(PolygonProbability, ClassicTriangle) { EXPECT_EQ(theorem1_pkn(ProblemSpec(3, 3)), Rational(1, 4)); }

TEST(PolygonProbability, FrozenValues) {
  // Independently evaluated with Python fractions.
  EXPECT_EQ(theorem1_pkn(ProblemSpec(4, 5)), Rational(43, 189));
  EXPECT_EQ(theorem1_pkn(ProblemSpec(4, 6)), Rational(11, 112));
  EXPECT_EQ(theorem1_pkn(ProblemSpec(5, 6)), Rational(80, 189));
  EXPECT_EQ(theorem1_pkn(ProblemSpec(5, 8)), Rational(121477, 911625));
  const char* row8[] = {"1/3003", "5/297", "121477/911625", "693/1664", "77147/104247", "15/16"};
  for (int k = 3; k <= 8; ++k) {
    EXPECT_EQ(theorem1_pkn(ProblemSpec(k, 8)), Rational::parse(row8[k - 3])) << "k=" << k;
  }
}

TEST(PolygonProbability, DiagonalMatchesPnn) {
  for (int n = 3; n <= 30; ++n) {
    EXPECT_EQ(theorem1_pkn(ProblemSpec(n, n)), pnn_closed(n)) << n;
    EXPECT_EQ(pnn_closed(n), pnn_formula(n));
  }
}

TEST(PolygonProbability, AgreesWithClosedAndBetaForms) {
  for (int n = 3; n <= 30; ++n) {
    EXPECT_EQ(theorem1_pkn(ProblemSpec(3, n)), p3n_closed(n)) << n;
    if (n >= 4) EXPECT_EQ(theorem1_pkn(ProblemSpec(4, n)), p4n_beta(n)) << n;
    if (n >= 5) EXPECT_EQ(theorem1_pkn(ProblemSpec(5, n)), p5n_beta(n)) << n;
  }
}

TEST(PolygonProbability, ValuesAreProbabilities) {
  for (int n = 3; n <= 30; ++n) {
    for (int k = 3; k <= n; ++k) {
      const Rational p = theorem1_pkn(ProblemSpec(k, n));
      ASSERT_TRUE(p.is_canonical());
      ASSERT_GT(p, Rational(0)) << k << "," << n;
      ASSERT_LE(p, Rational(1)) << k << "," << n;
    }
  }
}

TEST(PolygonProbability, MonotoneOnComputedGrid) {
  for (int n = 3; n <= 20; ++n) {
    for (int k = 3; k < n; ++k) {
      ASSERT_LT(theorem1_pkn(ProblemSpec(k, n)), theorem1_pkn(ProblemSpec(k + 1, n))) << k << "," << n;
    }
  }
  for (int k = 3; k <= 20; ++k) {
    for (int n = k; n < 20; ++n) {
      ASSERT_GT(theorem1_pkn(ProblemSpec(k, n)), theorem1_pkn(ProblemSpec(k, n + 1))) << k << "," << n;
    }
  }
}

TEST(PolygonProbability, CapIsEnforcedAndConfigurable) {
  EXPECT_THROW(theorem1_pkn(ProblemSpec(3, 201)), CapExceeded);
  EXPECT_NO_THROW(theorem1_pkn(ProblemSpec(3, 200)));
  EXPECT_THROW(theorem1_pkn(ProblemSpec(3, 12), ExactOptions{10}), CapExceeded);
  EXPECT_EQ(theorem1_pkn(ProblemSpec(3, 210), ExactOptions{300}), p3n_closed(210, ExactOptions{300}));
}

TEST(ClosedForms, Examples) {
  EXPECT_EQ(pnn_closed(3), Rational(1, 4));
  EXPECT_EQ(pnn_closed(4), Rational(1, 2));
  EXPECT_EQ(pnn_closed(5), Rational(11, 16));
  EXPECT_EQ(p3n_closed(3), Rational(1, 4));
  EXPECT_EQ(p3n_closed(4), Rational(1, 15));
  EXPECT_EQ(p3n_closed(5), Rational(1, 56));
  EXPECT_EQ(p4n_beta(4), Rational(1, 2));
  EXPECT_EQ(p4n_beta(5), Rational(43, 189));
  EXPECT_EQ(p4n_beta(6), theorem1_pkn(ProblemSpec(4, 6)));
  EXPECT_EQ(p5n_beta(5), Rational(11, 16));
  EXPECT_EQ(p5n_beta(6), theorem1_pkn(ProblemSpec(5, 6)));
  EXPECT_EQ(p5n_beta(8), theorem1_pkn(ProblemSpec(5, 8)));
}

TEST(ClosedForms, RejectSmallN) {
  EXPECT_THROW(pnn_closed(2), InvalidArgument);
  EXPECT_THROW(p3n_closed(2), InvalidArgument);
  EXPECT_THROW(p4n_beta(3), InvalidArgument);
  EXPECT_THROW(p5n_beta(4), InvalidArgument);
  EXPECT_THROW(exists_triangle_prob(2), InvalidArgument);
  EXPECT_THROW(pnn_closed(500), CapExceeded);
}

TEST(Whitworth, Examples) {
  EXPECT_EQ(whitworth_survivor(3, Rational(1, 2)), Rational(3, 4));
  EXPECT_EQ(whitworth_survivor(2, Rational(3, 10)), Rational(1));
  EXPECT_EQ(whitworth_survivor(4, Rational(1, 2)), Rational(1, 2));
}

TEST(Whitworth, HalfGivesNOverPowerOfTwo) {
  for (int n = 2; n <= 30; ++n) {
    EXPECT_EQ(whitworth_survivor(n, Rational(1, 2)),
              Rational(BigInt(n), BigInt(1) << static_cast<unsigned long>(n - 1)))
        << n;
  }
}

TEST(Whitworth, MatchesSubsetInclusionExclusion) {
  for (int n = 2; n <= 9; ++n) {
    for (int i = 1; i <= 19; ++i) {
      const Rational x(i, 20);
      ASSERT_EQ(whitworth_survivor(n, x), whitworth_by_subsets(n, x)) << n << " " << x;
    }
  }
}

TEST(Whitworth, NonincreasingInX) {
  for (int n = 2; n <= 15; ++n) {
    Rational previous(1);
    for (int i = 1; i <= 19; ++i) {
      const Rational value = whitworth_survivor(n, Rational(i, 20));
      ASSERT_LE(value, previous) << n << " " << i;
      ASSERT_GE(value, Rational(0));
      previous = value;
    }
  }
}

TEST(Whitworth, RejectsXOutsideOpenUnitInterval) {
  EXPECT_THROW(whitworth_survivor(3, Rational(0)), InvalidArgument);
  EXPECT_THROW(whitworth_survivor(3, Rational(1)), InvalidArgument);
  EXPECT_THROW(whitworth_survivor(3, Rational(-1, 2)), InvalidArgument);
}

TEST(JointSurvivor, Examples) {
  const std::vector<Rational> pair{Rational(3, 10), Rational(3, 10)};
  EXPECT_EQ(joint_spacing_survivor(pair), Rational(2, 5));
  const std::vector<Rational> three{Rational(1, 10), Rational(1, 10), Rational(1, 10)};
  EXPECT_EQ(joint_spacing_survivor(three), Rational(49, 100));
  const std::vector<Rational> saturated{Rational(1, 2), Rational(1, 2), Rational(0)};
  EXPECT_EQ(joint_spacing_survivor(saturated), Rational(0));
  const std::vector<Rational> over{Rational(2, 3), Rational(2, 3)};
  EXPECT_EQ(joint_spacing_survivor(over), Rational(0));
  const std::vector<Rational> negative{Rational(-1, 10), Rational(1, 10)};
  EXPECT_THROW(joint_spacing_survivor(negative), InvalidArgument);
}

TEST(ExistsTriangle, Examples) {
  EXPECT_EQ(exists_triangle_prob(3), Rational(1, 4));
  EXPECT_EQ(exists_triangle_prob(4), Rational(4, 7));
  EXPECT_EQ(exists_triangle_prob(5), Rational(23, 28));
  EXPECT_EQ(exists_triangle_prob(6), Rational(53, 56));
}

TEST(ExistsTriangle, AtThreePiecesMatchesAllSubsets) {
  EXPECT_EQ(exists_triangle_prob(3), theorem1_pkn(ProblemSpec(3, 3)));
}

TEST(AlternatingFactorialIdentity, HoldsExactly) {
  EXPECT_TRUE(alternating_factorial_identity(4));
  const auto five = alternating_factorial_sides(5);
  EXPECT_EQ(five.lhs, Rational(1, 6));
  EXPECT_EQ(five.rhs, Rational(1, 6));
  for (int k = 4; k <= 20; ++k) EXPECT_TRUE(alternating_factorial_identity(k)) << k;
  EXPECT_THROW(alternating_factorial_identity(3), InvalidArgument);
}

TEST(PolygonProbabilityDouble, AgreesWithExactAtModerateN) {
  for (int n = 3; n <= 25; ++n) {
    for (int k = 3; k <= n; ++k) {
      const ProblemSpec spec(k, n);
      const double exact = theorem1_pkn(spec).to_double();
      const auto approx = theorem1_pkn_double(spec);
      if (!approx.cancellation_warning) {
        ASSERT_NEAR(approx.value, exact, 1e-9 * std::max(1.0, approx.max_abs_term)) << k << "," << n;
      }
    }
  }
  const auto small = theorem1_pkn_double(ProblemSpec(4, 5));
  EXPECT_FALSE(small.cancellation_warning);
  EXPECT_NEAR(small.value, 43.0 / 189.0, 1e-13);
}

TEST(PolygonProbabilityDouble, WarnsWhenCancellationIsCatastrophic) {
  // P_{3,n} = 1/C(2n-2,n) is tiny while the terms are of order C(n-1, n/2).
  const auto result = theorem1_pkn_double(ProblemSpec(3, 60));
  EXPECT_GT(result.cancellation_ratio, kCancellationWarningRatio);
  EXPECT_TRUE(result.cancellation_warning);
  const auto diagonal = theorem1_pkn_double(ProblemSpec(250, 250));
  EXPECT_FALSE(diagonal.cancellation_warning);
  EXPECT_NEAR(diagonal.value, 1.0, 1e-12);
}
