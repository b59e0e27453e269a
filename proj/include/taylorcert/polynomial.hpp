#pragma once

#include "taylorcert/flow_expr.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tcert {

/// Univariate polynomial sum_k coeffs[k] * t^k with exact coefficients.
/// Trailing zero coefficients are trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  Rational operator()(const Rational& t) const;
  /// Term-by-term interval evaluation (tight powers, independent summands).
  RatInterval eval_interval(const RatInterval& t) const;

  Polynomial derivative() const;
  /// Re-expands p(t) as q(s) with s = t - center, i.e. q(s) = p(s + center).
  Polynomial shifted(const Rational& center) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Parses a polynomial in x with the flow-expression grammar; rejects y.
Polynomial parse_polynomial(std::string_view text);

/// Substitutes a univariate polynomial for both x-power and y in a flow
/// expression of order 0: returns e(t + x0, p(t)) as a polynomial in t.
Polynomial compose(const FlowExpr& e, const Rational& x0, const Polynomial& p);

}  // namespace tcert
