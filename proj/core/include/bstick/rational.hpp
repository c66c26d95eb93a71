#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bstick {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
///
/// Thin value type over GMP's mpq_class. Every constructor canonicalizes, and
/// GMP keeps results of arithmetic canonical, so the reduced-form invariant
/// holds for every value observable through this interface.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& integer) : value_(integer) {}
  Rational(const BigInt& numerator, const BigInt& denominator);
  Rational(long numerator, long denominator) : Rational(BigInt(numerator), BigInt(denominator)) {}

  /// Parses "num/den" or a bare integer "num". Whitespace is not accepted.
  static Rational parse(std::string_view text);

  /// Parses a finite decimal ("0.3", "-1.25e-2") exactly and then replaces it
  /// by the closest rational whose denominator is at most `max_denominator`.
  static Rational from_decimal(std::string_view text, const BigInt& max_denominator);

  /// Closest rational to *this with denominator <= max_denominator.
  Rational limit_denominator(const BigInt& max_denominator) const;

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;
  Rational pow(unsigned long exponent) const;

  double to_double() const { return value_.get_d(); }

  /// "num/den", with the denominator always present ("1/1", "-3/4").
  std::string to_string() const;

  /// Correctly rounded decimal with `significant` digits, printf-%g style.
  std::string to_decimal(int significant = 12) const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  /// Checks the stored-form invariant: positive denominator and gcd 1.
  bool is_canonical() const;

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  BigInt abs_num() const { return ::abs(value_.get_num()); }

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// printf-%g style formatting of a double with `significant` digits,
/// independent of the global locale.
std::string format_decimal(double value, int significant = 12);

}  // namespace bstick
