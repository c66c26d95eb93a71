#include "bstick/rational.hpp"

#include <charconv>
#include <ostream>

#include "bstick/errors.hpp"

namespace bstick {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw InvalidArgument("not an integer: '" + std::string(text) + "'");
  }
  BigInt value(std::string(digits), 10);
  return negative ? BigInt(-value) : value;
}

BigInt pow10(unsigned long exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

// a / b compared against 10^e, for positive a, b.
int compare_with_power_of_ten(const BigInt& a, const BigInt& b, long e) {
  if (e >= 0) return cmp(a, b * pow10(static_cast<unsigned long>(e)));
  return cmp(a * pow10(static_cast<unsigned long>(-e)), b);
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view den = text.substr(slash + 1);
  if (!all_digits(den)) {
    throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
  }
  const BigInt denominator(std::string(den), 10);
  if (denominator == 0) throw InvalidArgument("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), denominator);
}

Rational Rational::from_decimal(std::string_view text, const BigInt& max_denominator) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    const std::string_view exp_text = rest.substr(e + 1);
    const auto* first = exp_text.data();
    const auto* last = first + exp_text.size();
    if (!exp_text.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc{} || ptr != last || first == last) {
      throw InvalidArgument("malformed decimal exponent: '" + std::string(text) + "'");
    }
    rest = rest.substr(0, e);
  }
  std::string digits;
  long fraction_digits = 0;
  if (const auto dot = rest.find('.'); dot != std::string_view::npos) {
    const auto int_part = rest.substr(0, dot);
    const auto frac_part = rest.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw InvalidArgument("malformed decimal: '" + std::string(text) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    fraction_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(rest)) throw InvalidArgument("malformed decimal: '" + std::string(text) + "'");
    digits = std::string(rest);
  }
  const long scale = exponent - fraction_digits;
  if (scale > 10000 || scale < -10000) throw InvalidArgument("decimal exponent out of range");
  BigInt mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  Rational exact = scale >= 0 ? Rational(BigInt(mantissa * pow10(static_cast<unsigned long>(scale))))
                              : Rational(mantissa, pow10(static_cast<unsigned long>(-scale)));
  return exact.limit_denominator(max_denominator);
}

Rational Rational::limit_denominator(const BigInt& max_denominator) const {
  if (max_denominator < 1) throw InvalidArgument("max_denominator must be >= 1");
  if (value_.get_den() <= max_denominator) return *this;

  // Best rational approximation from the continued-fraction convergents and
  // the last admissible semiconvergent.
  const bool negative = sign() < 0;
  BigInt n = abs_num(), d = value_.get_den();
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (;;) {
    BigInt a = n / d;
    BigInt q2 = q0 + a * q1;
    if (q2 > max_denominator) break;
    BigInt p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    BigInt r = n - a * d;
    n = d;
    d = r;
  }
  const BigInt steps = (max_denominator - q0) / q1;
  const Rational target = this->abs();
  const Rational lower(BigInt(p0 + steps * p1), BigInt(q0 + steps * q1));
  const Rational upper(p1, q1);
  Rational best = (upper - target).abs() <= (lower - target).abs() ? upper : lower;
  return negative ? -best : best;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw InvalidArgument("reciprocal of zero");
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(unsigned long exponent) const {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int significant) const {
  if (significant < 1) throw InvalidArgument("significant digits must be >= 1");
  if (is_zero()) return "0";
  const BigInt a = abs_num();
  const BigInt& b = value_.get_den();

  long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
  while (compare_with_power_of_ten(a, b, e) < 0) --e;
  while (compare_with_power_of_ten(a, b, e + 1) >= 0) ++e;

  // Round a/b * 10^(significant-1-e) half away from zero.
  const long shift = significant - 1 - e;
  BigInt num = a, den = b;
  if (shift >= 0) {
    num *= pow10(static_cast<unsigned long>(shift));
  } else {
    den *= pow10(static_cast<unsigned long>(-shift));
  }
  BigInt q = num / den;
  const BigInt r = num - q * den;
  if (2 * r >= den) ++q;
  if (q == pow10(static_cast<unsigned long>(significant))) {
    q /= 10;
    ++e;
  }
  const std::string digits = q.get_str();

  auto strip = [](std::string s) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    return s;
  };

  std::string out = sign() < 0 ? "-" : "";
  if (e < -4 || e >= significant) {
    out += digits.substr(0, 1);
    if (const auto frac = strip(digits.substr(1)); !frac.empty()) out += "." + frac;
    out += e < 0 ? "e-" : "e+";
    const std::string exp_digits = std::to_string(e < 0 ? -e : e);
    if (exp_digits.size() < 2) out += "0";
    out += exp_digits;
  } else if (e >= 0) {
    out += digits.substr(0, static_cast<std::size_t>(e + 1));
    if (const auto frac = strip(digits.substr(static_cast<std::size_t>(e + 1))); !frac.empty()) {
      out += "." + frac;
    }
  } else {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + strip(digits);
  }
  return out;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw InvalidArgument("division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

bool Rational::is_canonical() const {
  if (value_.get_den() <= 0) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return g == 1;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::string format_decimal(double value, int significant) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, significant);
  if (ec != std::errc{}) throw InvalidArgument("cannot format decimal");
  return std::string(buffer, ptr);
}

}  // namespace bstick
