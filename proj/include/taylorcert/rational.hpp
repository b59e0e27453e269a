#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace tcert {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always kept in canonical form: denominator > 0 and gcd(|num|, den) = 1.
/// Every arithmetic operation is exact and returns a canonical value.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(long numerator, long denominator);

  explicit Rational(mpq_class value);

  /// Parses an integer ("-3"), a decimal ("0.2", "-1.25e-3") or a fraction
  /// ("67/32", "-1/5"). Decimals are converted exactly. Throws
  /// std::invalid_argument on malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational pow(unsigned exponent) const;

  /// Largest multiple of 10^-decimals that is <= *this.
  Rational floor_to(unsigned decimals) const;
  /// Smallest multiple of 10^-decimals that is >= *this.
  Rational ceil_to(unsigned decimals) const;
  /// Decimal places needed to write *this exactly; -1 if the denominator has
  /// a prime factor other than 2 and 5.
  int decimal_places() const;

  /// "p/q", also for integers ("3/1"), so the format is uniform.
  std::string to_fraction_string() const;
  /// Decimal string with `digits` places, rounded toward -inf (Floor) or
  /// +inf (Ceil); used for human-readable bounds.
  enum class Round { Floor, Ceil, Nearest };
  std::string to_decimal(unsigned digits, Round mode = Round::Nearest) const;
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// n! as an exact rational.
Rational factorial(unsigned n);

/// 10^-digits.
Rational decimal_unit(unsigned digits);

}  // namespace tcert
