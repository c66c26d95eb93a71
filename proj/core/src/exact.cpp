#include "bstick/exact.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bstick/combinatorics.hpp"
#include "bstick/errors.hpp"

namespace bstick {
namespace {

void require_min_n(const char* what, int n, int minimum) {
  if (n < minimum) {
    throw InvalidArgument(std::string(what) + ": n must be >= " + std::to_string(minimum) + ", got " +
                          std::to_string(n));
  }
}

void require_cap(const char* what, int n, const ExactOptions& options) {
  if (n > options.cap) {
    throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds the exact-evaluation cap " +
                      std::to_string(options.cap));
  }
}

unsigned long as_ulong(int v) { return static_cast<unsigned long>(v); }

}  // namespace

ProblemSpec::ProblemSpec(int k, int n) : k_(k), n_(n) {
  if (k < 3 || k > n) {
    throw InvalidArgument("invalid problem (k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                          "): need 3 <= k <= n");
  }
}

Rational theorem1_pkn(const ProblemSpec& spec, const ExactOptions& options) {
  const int k = spec.k();
  const int n = spec.n();
  require_cap("theorem1_pkn", n, options);

  const unsigned long m = as_ulong(n - k + 2);
  const unsigned long rising_len = as_ulong(k - 2);
  const unsigned long j_power = as_ulong(k - 3);

  Rational sum;
  for (unsigned long j = 1; j <= m; ++j) {
    Rational term(binomial(m, j));
    term /= Rational(BigInt(j)).pow(j_power);
    term /= pochhammer(Rational(BigInt(m), BigInt(j)) + 1, rising_len);
    if (j % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return Rational(falling_product(as_ulong(n), rising_len), BigInt(m)) * sum;
}

Rational pnn_closed(int n, const ExactOptions& options) {
  require_min_n("pnn_closed", n, 3);
  require_cap("pnn_closed", n, options);
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, as_ulong(n - 1));
  return Rational(1) - Rational(BigInt(n), power);
}

Rational p3n_closed(int n, const ExactOptions& options) {
  require_min_n("p3n_closed", n, 3);
  require_cap("p3n_closed", n, options);
  return Rational(BigInt(1), binomial(as_ulong(2 * n - 2), as_ulong(n)));
}

Rational p4n_beta(int n, const ExactOptions& options) {
  require_min_n("p4n_beta", n, 4);
  require_cap("p4n_beta", n, options);
  const unsigned long a = as_ulong(n - 1);
  const Rational half(1, 2);
  const Rational combination = half * beta_int(a, Rational(n - 2, 2)) - beta_int(a, Rational(n - 2));
  return Rational(static_cast<long>(n) * (n - 1), n - 2) * combination;
}

Rational p5n_beta(int n, const ExactOptions& options) {
  require_min_n("p5n_beta", n, 5);
  require_cap("p5n_beta", n, options);
  const unsigned long a = as_ulong(n - 2);
  const Rational half(1, 2);
  const Rational combination = half * beta_int(a, Rational(n - 3, 3)) + half * beta_int(a, Rational(n - 3)) -
                               beta_int(a, Rational(n - 3, 2));
  const long m = n - 3;
  return Rational(static_cast<long>(n) * (n - 1) * (n - 2), m * m) * combination;
}

Rational whitworth_survivor(int n, const Rational& x, const ExactOptions& options) {
  require_min_n("whitworth_survivor", n, 2);
  require_cap("whitworth_survivor", n, options);
  if (x.sign() <= 0 || x >= Rational(1)) {
    throw InvalidArgument("whitworth_survivor: x must lie in (0,1), got " + x.to_string());
  }
  Rational sum;
  for (unsigned long j = 1; j <= as_ulong(n); ++j) {
    const Rational remaining = Rational(1) - Rational(static_cast<long>(j)) * x;
    if (remaining.sign() <= 0) break;
    const Rational term = remaining.pow(as_ulong(n - 1)) * Rational(binomial(as_ulong(n), j));
    if (j % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Rational joint_spacing_survivor(std::span<const Rational> c) {
  if (c.empty()) throw InvalidArgument("joint_spacing_survivor: need at least one threshold");
  Rational total;
  for (const auto& ci : c) {
    if (ci.sign() < 0) throw InvalidArgument("joint_spacing_survivor: negative threshold " + ci.to_string());
    total += ci;
  }
  if (total >= Rational(1)) return Rational(0);
  return (Rational(1) - total).pow(c.size() - 1);
}

Rational exists_triangle_prob(int n, const ExactOptions& options) {
  require_min_n("exists_triangle_prob", n, 3);
  require_cap("exists_triangle_prob", n, options);
  BigInt product = 1;
  for (unsigned long j = 2; j <= as_ulong(n); ++j) product *= fibonacci(j + 2) - 1;
  return Rational(1) - Rational(factorial(as_ulong(n)), product);
}

IdentitySides alternating_factorial_sides(int k) {
  if (k < 4) throw InvalidArgument("alternating_factorial_identity: k must be >= 4");
  Rational lhs;
  for (int i = 2; i <= k - 1; ++i) {
    const Rational term(BigInt(1), factorial(as_ulong(i - 1)) * factorial(as_ulong(k - 1 - i)));
    if (i % 2 == 0) {
      lhs += term;
    } else {
      lhs -= term;
    }
  }
  return {lhs, Rational(BigInt(1), factorial(as_ulong(k - 2)))};
}

bool alternating_factorial_identity(int k) {
  const auto sides = alternating_factorial_sides(k);
  return sides.lhs == sides.rhs;
}

ApproximateValue theorem1_pkn_double(const ProblemSpec& spec) {
  const double k = spec.k();
  const double n = spec.n();
  const double m = n - k + 2;

  // log of the prefactor n(n-1)...(n-k+3) / m
  double log_prefactor = -std::log(m);
  for (int i = 0; i < spec.k() - 2; ++i) log_prefactor += std::log(n - i);

  double sum = 0.0;
  double compensation = 0.0;
  double max_abs_term = 0.0;
  for (int j = 1; j <= spec.n() - spec.k() + 2; ++j) {
    const double jd = j;
    const double log_binom = std::lgamma(m + 1) - std::lgamma(jd + 1) - std::lgamma(m - jd + 1);
    double log_rising = 0.0;
    const double base = m / jd + 1;
    for (int i = 0; i < spec.k() - 2; ++i) log_rising += std::log(base + i);
    const double magnitude = std::exp(log_prefactor + log_binom - (k - 3) * std::log(jd) - log_rising);
    const double term = (j % 2 == 1) ? magnitude : -magnitude;
    if (magnitude > max_abs_term) max_abs_term = magnitude;

    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }

  ApproximateValue result;
  result.value = sum + compensation;
  result.max_abs_term = max_abs_term;
  result.cancellation_ratio = result.value != 0.0 ? max_abs_term / std::abs(result.value)
                                                  : std::numeric_limits<double>::infinity();
  result.cancellation_warning = !(result.cancellation_ratio <= kCancellationWarningRatio);
  return result;
}

}  // namespace bstick
