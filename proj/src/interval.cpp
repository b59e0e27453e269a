#include "taylorcert/interval.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <stdexcept>

namespace tcert {

RatInterval::RatInterval(Rational point) : lo_(point), hi_(std::move(point)) {}

RatInterval::RatInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) {
    throw std::invalid_argument("interval with lo > hi: [" + lo_.raw().get_str() + ", " +
                                hi_.raw().get_str() + "]");
  }
}

Rational RatInterval::magnitude() const { return max(lo_.abs(), hi_.abs()); }

RatInterval operator+(const RatInterval& a, const RatInterval& b) { return {a.lo_ + b.lo_, a.hi_ + b.hi_}; }

RatInterval operator-(const RatInterval& a, const RatInterval& b) { return {a.lo_ - b.hi_, a.hi_ - b.lo_}; }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  if (a.is_point() && b.is_point()) return RatInterval(a.lo_ * b.lo_);
  const std::array<Rational, 4> corners{a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  const auto [lo, hi] = std::minmax_element(corners.begin(), corners.end());
  return {*lo, *hi};
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  return a * RatInterval(Rational(1) / b.hi_, Rational(1) / b.lo_);
}

std::ostream& operator<<(std::ostream& os, const RatInterval& iv) {
  return os << '[' << iv.lo() << ", " << iv.hi() << ']';
}

RatInterval scale(const RatInterval& a, const Rational& factor) {
  if (factor.sign() >= 0) return {a.lo() * factor, a.hi() * factor};
  return {a.hi() * factor, a.lo() * factor};
}

RatInterval pow(const RatInterval& a, unsigned exponent) {
  if (exponent == 0) return RatInterval(Rational(1));
  const Rational lo_p = a.lo().pow(exponent);
  const Rational hi_p = a.hi().pow(exponent);
  if (exponent % 2 == 1) return {lo_p, hi_p};
  if (a.lo().sign() >= 0) return {lo_p, hi_p};
  if (a.hi().sign() <= 0) return {hi_p, lo_p};
  return {Rational(0), max(lo_p, hi_p)};
}

RatInterval hull(const RatInterval& a, const RatInterval& b) {
  return {min(a.lo(), b.lo()), max(a.hi(), b.hi())};
}

DecimalRounding DecimalRounding::parse(std::string_view text) {
  if (text == "exact") return exact();
  constexpr std::string_view prefix = "outward:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto digits = text.substr(prefix.size());
    if (!digits.empty() && digits.size() <= 3 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return outward(static_cast<unsigned>(std::stoul(std::string(digits))));
    }
  }
  throw std::invalid_argument("rounding must be \"exact\" or \"outward:<d>\", got \"" + std::string(text) + "\"");
}

RatInterval DecimalRounding::apply(const RatInterval& iv) const {
  if (is_exact()) return iv;
  return {iv.lo().floor_to(decimals()), iv.hi().ceil_to(decimals())};
}

std::string DecimalRounding::to_string() const {
  return is_exact() ? "exact" : "outward:" + std::to_string(decimals_);
}

RatInterval snap_outward(const RatInterval& iv, const Rational& grid) {
  if (grid.sign() <= 0) throw std::invalid_argument("snap grid must be positive");
  unsigned digits = 0;
  while (decimal_unit(digits) > grid) ++digits;
  return {iv.lo().floor_to(digits), iv.hi().ceil_to(digits)};
}

}  // namespace tcert
