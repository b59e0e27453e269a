#pragma once

#include "taylorcert/flow_expr.hpp"

#include <vector>

namespace tcert {

/// D_1 ... D_m with D_1 = f and D_{k+1} = flow_derivative(D_k), so that
/// y^(k) = D_k(x, y, y', ..., y^(k-1)) along every solution of y' = f(x, y).
class DerivativeChain {
 public:
  DerivativeChain() = default;
  explicit DerivativeChain(std::vector<FlowExpr> exprs) : exprs_(std::move(exprs)) {}

  /// Number of stored expressions (highest derivative order available).
  std::size_t size() const { return exprs_.size(); }
  /// D_k for 1 <= k <= size().
  const FlowExpr& derivative(std::size_t k) const { return exprs_.at(k - 1); }
  const std::vector<FlowExpr>& exprs() const { return exprs_; }

 private:
  std::vector<FlowExpr> exprs_;
};

/// Builds D_1 ... D_{n+1}. Throws std::invalid_argument if f mentions any
/// derivative symbol.
DerivativeChain derivative_chain(const FlowExpr& f, unsigned n);

/// Exact values y^(k)(x0) for k = 0 ... chain.size(), computed in sequence
/// from the chain (each D_k only needs lower-order values).
std::vector<Rational> initial_derivatives(const DerivativeChain& chain, const Rational& x0, const Rational& y0);

/// Taylor coefficients c_0 ... c_n of the solution of y' = f, y(x0) = y0,
/// in powers of (x - x0): c_k = y^(k)(x0) / k!.
std::vector<Rational> taylor_coefficients(const FlowExpr& f, const Rational& x0, const Rational& y0, unsigned n);

}  // namespace tcert
