#include "taylorcert/taylor.hpp"

#include <stdexcept>

namespace tcert {

DerivativeChain derivative_chain(const FlowExpr& f, unsigned n) {
  if (f.order() > 0 || f.slot_count() > 2) {
    throw std::invalid_argument("right-hand side may only mention x and y, got " + f.to_string());
  }
  std::vector<FlowExpr> exprs;
  exprs.reserve(n + 1);
  exprs.push_back(f);
  for (unsigned k = 1; k <= n; ++k) exprs.push_back(flow_derivative(exprs.back()));
  return DerivativeChain(std::move(exprs));
}

std::vector<Rational> initial_derivatives(const DerivativeChain& chain, const Rational& x0, const Rational& y0) {
  // env = [x0, y(x0), y'(x0), ...]; derivative values double as the environment.
  std::vector<Rational> env{x0, y0};
  env.reserve(chain.size() + 2);
  for (std::size_t k = 1; k <= chain.size(); ++k) env.push_back(eval_exact(chain.derivative(k), env));
  return {env.begin() + 1, env.end()};
}

std::vector<Rational> taylor_coefficients(const FlowExpr& f, const Rational& x0, const Rational& y0, unsigned n) {
  if (n == 0) {
    derivative_chain(f, 0);  // validates f
    return {y0};
  }
  const auto values = initial_derivatives(derivative_chain(f, n - 1), x0, y0);
  std::vector<Rational> coeffs;
  coeffs.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) coeffs.push_back(values[k] / factorial(static_cast<unsigned>(k)));
  return coeffs;
}

}  // namespace tcert
