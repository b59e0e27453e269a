#pragma once

// Non-rigorous reference values. Nothing here feeds the certificate; these
// are validation oracles for tests and the report's sanity section.

#include "taylorcert/flow_expr.hpp"
#include "taylorcert/taylor.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <span>
#include <string>
#include <vector>

namespace tcert {

/// 40 significant decimal digits.
using HighFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<40>>;

HighFloat to_high(const Rational& r);

/// Scientific notation with `digits` significant digits.
std::string format_significant(const HighFloat& v, int digits = 20);

struct ReferenceValue {
  enum class Method { Integrator, Bessel };
  HighFloat value;
  HighFloat error_estimate;
  Method method = Method::Integrator;
};

/// f compiled for repeated floating-point evaluation.
class NumericFlow {
 public:
  explicit NumericFlow(const FlowExpr& e);
  /// env[k] is the value of symbol slot k (x, y, y', ...).
  HighFloat operator()(std::span<const HighFloat> env) const;

 private:
  struct Term {
    HighFloat coefficient;
    std::vector<std::pair<std::size_t, unsigned>> factors;  // (slot, power)
  };
  std::vector<Term> terms_;
  std::size_t slots_ = 0;
};

/// Classical RK4 with a fixed number of equal steps from x0 to x.
HighFloat rk4_integrate(const NumericFlow& f, const HighFloat& x0, const HighFloat& y0, const HighFloat& x,
                        unsigned steps);

/// RK4 with step halving until successive results differ by less than tol.
/// error_estimate is that last difference. Throws std::runtime_error if the
/// step budget is exhausted; requires x >= x0 and f of order 0.
ReferenceValue reference_solution(const FlowExpr& f, const Rational& x0, const Rational& y0, const Rational& x,
                                  const HighFloat& tol = HighFloat("1e-20"));

/// reference_solution at every point of an ascending grid in one sweep; the
/// number of steps per grid cell is doubled until every value is stable.
std::vector<ReferenceValue> reference_path(const FlowExpr& f, const Rational& x0, const Rational& y0,
                                           std::span<const Rational> xs, const HighFloat& tol = HighFloat("1e-20"));

/// y, y', ..., y^(chain.size()) at a point where y is known, by evaluating the
/// chain in floating point.
std::vector<HighFloat> numeric_derivatives(const DerivativeChain& chain, const HighFloat& x, const HighFloat& y);

/// Closed form of the solution of y' = x^2 + y^2/4, y(0) = -1, via Bessel
/// functions of orders +-1/4 and +-3/4 at z = x^2/4:
///   y = 2x [B J_{3/4}(z) - A J_{-3/4}(z)] / [A J_{1/4}(z) + B J_{-1/4}(z)],
/// A = Gamma(1/4), B = 4 sqrt(2) Gamma(3/4). It follows from y = -4u'/u with
/// u'' + (x^2/4) u = 0. Each Bessel series is summed to `terms` terms.
/// Throws std::domain_error for x = 0 (the quotient degenerates; the limit is
/// -1) and std::runtime_error if `terms` leaves a relative tail above 1e-25.
ReferenceValue riccati_exact(const Rational& x, unsigned terms = 30);

}  // namespace tcert
