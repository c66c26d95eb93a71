#include "bstick/combinatorics.hpp"

#include <string>

#include "bstick/errors.hpp"

namespace bstick {

BigInt binomial(unsigned long n, unsigned long j) {
  if (j > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, j);
  return result;
}

BigInt factorial(unsigned long n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Rational pochhammer(const Rational& x, unsigned long m) {
  Rational product = 1;
  Rational factor = x;
  for (unsigned long i = 0; i < m; ++i) {
    product *= factor;
    factor += 1;
  }
  return product;
}

BigInt falling_product(unsigned long n, unsigned long m) {
  if (m > n) {
    throw InvalidArgument("falling_product: m = " + std::to_string(m) + " exceeds n = " + std::to_string(n));
  }
  BigInt product = 1;
  for (unsigned long i = 0; i < m; ++i) product *= n - i;
  return product;
}

BigInt fibonacci(unsigned long j) {
  if (j < 1) throw InvalidArgument("fibonacci index must be >= 1");
  BigInt result;
  mpz_fib_ui(result.get_mpz_t(), j);
  return result;
}

Rational beta_int(unsigned long a, const Rational& x) {
  if (a < 1) throw InvalidArgument("beta_int: first argument must be >= 1");
  if (x.sign() <= 0) throw InvalidArgument("beta_int: second argument must be positive, got " + x.to_string());
  return Rational(factorial(a - 1)) / pochhammer(x, a);
}

}  // namespace bstick
