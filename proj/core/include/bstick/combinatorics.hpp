#pragma once

#include "bstick/rational.hpp"

namespace bstick {

/// C(n, j); zero when j > n.
BigInt binomial(unsigned long n, unsigned long j);

BigInt factorial(unsigned long n);

/// Rising factorial (x)_m = x (x+1) ... (x+m-1); (x)_0 = 1.
Rational pochhammer(const Rational& x, unsigned long m);

/// n (n-1) ... (n-m+1), m factors. Requires m <= n.
BigInt falling_product(unsigned long n, unsigned long m);

/// Fibonacci numbers with F_1 = F_2 = 1. Requires j >= 1.
BigInt fibonacci(unsigned long j);

/// Beta function for a positive integer first argument:
/// B(a, x) = (a-1)! / (x)_a. Requires a >= 1 and x > 0.
Rational beta_int(unsigned long a, const Rational& x);

}  // namespace bstick
