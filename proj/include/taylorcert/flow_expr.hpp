#pragma once

#include "taylorcert/interval.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tcert {

/// A variable of a flow expression: the independent variable x, or the j-th
/// derivative y^(j) of the solution (j = 0 is y itself).
///
/// Symbols are numbered densely: x is slot 0, y^(j) is slot j + 1. The same
/// numbering is used for evaluation environments.
class Symbol {
 public:
  static Symbol x() { return Symbol(0); }
  static Symbol y(unsigned derivative_order = 0) { return Symbol(derivative_order + 1); }

  unsigned slot() const { return slot_; }
  bool is_x() const { return slot_ == 0; }
  /// Derivative order of a y-symbol. Undefined for x.
  unsigned derivative_order() const { return slot_ - 1; }

  /// "x", "y", "y'", "y''", "y'''", "y^(4)", ...
  std::string name() const;

  friend auto operator<=>(const Symbol&, const Symbol&) = default;

 private:
  explicit Symbol(unsigned slot) : slot_(slot) {}
  unsigned slot_;
};

/// Exponent vector of a monomial, indexed by Symbol::slot(). Trailing zeros
/// are trimmed so each monomial has exactly one representation.
using Exponents = std::vector<std::uint32_t>;

/// Polynomial in x, y, y', y'', ... with exact rational coefficients.
///
/// Zero coefficients are never stored. Derivative symbols are kept symbolic:
/// the flow derivative maps y^(j) to y^(j+1) instead of substituting the
/// right-hand side of the equation.
class FlowExpr {
 public:
  FlowExpr() = default;

  static FlowExpr constant(const Rational& c);
  static FlowExpr variable(Symbol s);
  static FlowExpr monomial(const Rational& c, Exponents exponents);

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Number of symbol slots referenced (highest slot + 1); 0 for constants.
  unsigned slot_count() const;
  /// Highest derivative symbol present (0 when only x and y occur).
  unsigned order() const;
  bool mentions(Symbol s) const;
  /// Coefficient of the given monomial (0 if absent).
  Rational coefficient(const Exponents& exponents) const;

  FlowExpr& operator+=(const FlowExpr& rhs);
  FlowExpr& operator-=(const FlowExpr& rhs);
  FlowExpr& operator*=(const FlowExpr& rhs);
  FlowExpr& operator*=(const Rational& factor);

  friend FlowExpr operator+(FlowExpr a, const FlowExpr& b) { return a += b; }
  friend FlowExpr operator-(FlowExpr a, const FlowExpr& b) { return a -= b; }
  friend FlowExpr operator*(FlowExpr a, const FlowExpr& b) { return a *= b; }
  friend FlowExpr operator*(FlowExpr a, const Rational& b) { return a *= b; }
  friend FlowExpr operator*(const Rational& a, FlowExpr b) { return b *= a; }
  FlowExpr operator-() const;

  FlowExpr pow(unsigned exponent) const;

  /// Partial derivative with respect to one symbol, the others held fixed.
  FlowExpr partial(Symbol s) const;

  friend bool operator==(const FlowExpr&, const FlowExpr&) = default;

  /// Human-readable form, e.g. "1/2*y*y' + 2*x".
  std::string to_string() const;

 private:
  void add_term(const Exponents& exponents, const Rational& c);
  std::map<Exponents, Rational> terms_;
};

/// Total derivative along solutions: d/dx e = de/dx + sum_j de/dy^(j) * y^(j+1).
FlowExpr flow_derivative(const FlowExpr& e);

/// Exact value of e with symbol slot k bound to env[k] (x first, then y, y', ...).
/// Throws std::out_of_range naming the first unbound symbol.
Rational eval_exact(const FlowExpr& e, std::span<const Rational> env);

/// Monomial-wise interval evaluation: each monomial's factors are bounded
/// independently (tight integer powers), then the monomial ranges are summed.
/// Repeated occurrences of a symbol across monomials are not correlated.
RatInterval eval_interval(const FlowExpr& e, std::span<const RatInterval> env);

/// Parses a polynomial in x and y: sums and products of rational literals
/// (integer, decimal, p/q), x, y, parentheses, non-negative integer powers
/// and division by non-zero constants. Derivative symbols are not accepted.
/// Throws ExprSyntaxError.
FlowExpr parse_flow_expr(std::string_view text);

}  // namespace tcert
