#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "bstick/combinatorics.hpp"
#include "bstick/errors.hpp"

using namespace bstick;

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(9, 0), 1);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Binomial, MatchesPascalTriangleEnumeration) {
  // Oracle: Pascal's triangle built by addition only.
  std::vector<std::vector<std::uint64_t>> pascal(41);
  for (std::size_t n = 0; n <= 40; ++n) {
    pascal[n].assign(n + 1, 1);
    for (std::size_t j = 1; j < n; ++j) pascal[n][j] = pascal[n - 1][j - 1] + pascal[n - 1][j];
  }
  EXPECT_EQ(pascal[6][4], 15u);
  EXPECT_EQ(binomial(6, 4), 15);
  for (unsigned long n = 0; n <= 40; ++n) {
    for (unsigned long j = 0; j <= n; ++j) {
      ASSERT_EQ(binomial(n, j), BigInt(std::to_string(pascal[n][j]))) << n << "," << j;
    }
  }
}

TEST(Binomial, PascalRecurrence) {
  for (unsigned long n = 1; n <= 40; ++n) {
    for (unsigned long j = 1; j <= n; ++j) {
      ASSERT_EQ(binomial(n, j), binomial(n - 1, j - 1) + binomial(n - 1, j));
    }
  }
}

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer(Rational(7, 3), 0), Rational(1));
  EXPECT_EQ(pochhammer(Rational(3), 2), Rational(12));
  EXPECT_EQ(pochhammer(Rational(3, 2), 4), Rational(945, 16));
}

TEST(Pochhammer, RecurrenceOnRandomRationals) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational x(static_cast<long>(rng() % 401) - 200, static_cast<long>(rng() % 50) + 1);
    for (unsigned long m = 0; m <= 20; ++m) {
      const Rational next = pochhammer(x, m + 1);
      ASSERT_TRUE(next.is_canonical());
      ASSERT_EQ(next, pochhammer(x, m) * (x + Rational(static_cast<long>(m))));
    }
  }
}

TEST(FallingProduct, Examples) {
  EXPECT_EQ(falling_product(5, 2), 20);
  EXPECT_EQ(falling_product(11, 1), 11);
  EXPECT_EQ(falling_product(11, 0), 1);
  EXPECT_EQ(falling_product(6, 6), 720);
  EXPECT_THROW(falling_product(3, 4), InvalidArgument);
}

TEST(Fibonacci, Examples) {
  EXPECT_EQ(fibonacci(1), 1);
  EXPECT_EQ(fibonacci(2), 1);
  EXPECT_EQ(fibonacci(5), 5);
  EXPECT_EQ(fibonacci(10), 55);
  EXPECT_THROW(fibonacci(0), InvalidArgument);
}

TEST(Fibonacci, RecurrenceAndIterativeOracle) {
  BigInt a = 1, b = 1;  // F_1, F_2
  for (unsigned long j = 3; j <= 90; ++j) {
    const BigInt c = a + b;
    ASSERT_EQ(fibonacci(j), c) << j;
    ASSERT_EQ(fibonacci(j), fibonacci(j - 1) + fibonacci(j - 2));
    a = b;
    b = c;
  }
}

TEST(BetaInt, Examples) {
  EXPECT_EQ(beta_int(3, Rational(1)), Rational(1, 3));
  EXPECT_EQ(beta_int(3, Rational(2)), Rational(1, 12));
  EXPECT_EQ(beta_int(4, Rational(3, 2)), Rational(32, 315));
  EXPECT_EQ(beta_int(1, Rational(5, 7)), Rational(7, 5));
}

TEST(BetaInt, RejectsNonPositiveSecondArgument) {
  EXPECT_THROW(beta_int(3, Rational(0)), InvalidArgument);
  EXPECT_THROW(beta_int(3, Rational(-1, 2)), InvalidArgument);
  EXPECT_THROW(beta_int(0, Rational(1)), InvalidArgument);
}

TEST(BetaInt, TimesPochhammerIsFactorial) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational x(static_cast<long>(rng() % 500) + 1, static_cast<long>(rng() % 60) + 1);
    for (unsigned long a = 1; a <= 12; ++a) {
      const Rational b = beta_int(a, x);
      ASSERT_TRUE(b.is_canonical());
      ASSERT_EQ(b * pochhammer(x, a), Rational(factorial(a - 1)));
    }
  }
}

TEST(BetaInt, SymmetricForIntegerArguments) {
  // B(a, b) = B(b, a) when both are integers.
  for (unsigned long a = 1; a <= 10; ++a) {
    for (unsigned long b = 1; b <= 10; ++b) {
      ASSERT_EQ(beta_int(a, Rational(static_cast<long>(b))), beta_int(b, Rational(static_cast<long>(a))));
    }
  }
}
