#pragma once

#include "taylorcert/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace tcert {

/// Closed interval [lo, hi] with exact rational endpoints, lo <= hi.
///
/// Arithmetic returns the tightest interval containing the pointwise image,
/// which for rational endpoints is always attainable exactly.
class RatInterval {
 public:
  RatInterval() = default;
  RatInterval(Rational point);  // NOLINT(google-explicit-constructor)
  /// Throws std::invalid_argument if lo > hi.
  RatInterval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  Rational radius() const { return (hi_ - lo_) / 2; }
  /// max(|lo|, |hi|).
  Rational magnitude() const;
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const RatInterval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

  RatInterval operator-() const { return {-hi_, -lo_}; }

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b);
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b);
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b);
  /// Requires b to exclude zero; throws std::domain_error otherwise.
  friend RatInterval operator/(const RatInterval& a, const RatInterval& b);

  friend bool operator==(const RatInterval&, const RatInterval&) = default;
  friend std::ostream& operator<<(std::ostream& os, const RatInterval& iv);

 private:
  Rational lo_;
  Rational hi_;
};

RatInterval scale(const RatInterval& a, const Rational& factor);

/// a^exponent with exponent >= 0. Even powers of an interval straddling zero
/// have lower endpoint 0; x^0 = [1, 1].
RatInterval pow(const RatInterval& a, unsigned exponent);

RatInterval hull(const RatInterval& a, const RatInterval& b);

/// Decimal relaxation applied to bounds before they are reported or reused.
///
/// `exact` leaves intervals untouched; `outward(d)` moves lo down and hi up
/// to the nearest multiples of 10^-d, so the result always contains the input.
class DecimalRounding {
 public:
  static DecimalRounding exact() { return DecimalRounding(-1); }
  static DecimalRounding outward(unsigned decimals) { return DecimalRounding(static_cast<int>(decimals)); }
  /// Accepts "exact" or "outward:<d>".
  static DecimalRounding parse(std::string_view text);

  bool is_exact() const { return decimals_ < 0; }
  unsigned decimals() const { return decimals_ < 0 ? 0u : static_cast<unsigned>(decimals_); }

  RatInterval apply(const RatInterval& iv) const;
  std::string to_string() const;

  friend bool operator==(const DecimalRounding&, const DecimalRounding&) = default;

 private:
  explicit DecimalRounding(int decimals) : decimals_(decimals) {}
  int decimals_ = -1;
};

/// Rounds both endpoints outward onto the decimal grid with the fewest places
/// whose spacing is at most `grid`. Keeps denominators of elementary-function
/// enclosures bounded as they flow through the pipeline.
RatInterval snap_outward(const RatInterval& iv, const Rational& grid);

}  // namespace tcert
