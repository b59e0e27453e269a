#pragma once

#include "taylorcert/cauchy.hpp"
#include "taylorcert/comparison.hpp"
#include "taylorcert/polynomial.hpp"
#include "taylorcert/taylor.hpp"

#include <string>
#include <vector>

namespace tcert {

/// An initial-value problem y' = f(x, y), y(x0) = y0 together with the
/// certification parameters: partial-sum degree, interval [x0, x1], the
/// Cauchy box radii and the rounding applied to intermediate bounds.
struct ProblemSpec {
  FlowExpr f;
  Rational x0;
  Rational y0;
  unsigned degree = 0;
  Rational x1;
  Rational r1{1};
  Rational r2{1};
  DecimalRounding rounding = DecimalRounding::exact();
  Rational enclosure_width = default_enclosure_width();

  /// Throws InputError naming the offending field.
  void validate() const;
};

/// Bound on one derivative y^(k) over I. `tight` is the interval evaluation;
/// `used` is `tight` after rounding and is what later orders consume.
struct DerivativeBound {
  RatInterval tight;
  RatInterval used;
};

/// Bounds y^(k) over x in xrange for k = 1 ... chain.size(). Order k binds y
/// to yrange and y^(j) to the (rounded) bound of order j < k.
std::vector<DerivativeBound> bound_derivatives(const DerivativeChain& chain, const RatInterval& xrange,
                                               const RatInterval& yrange, const DecimalRounding& rounding);

/// Lagrange remainder y^(n+1)(theta) / (n+1)! * (x - x0)^(n+1), bounded for
/// all x in [x0, x0 + dx] from a bound on y^(n+1).
struct RemainderCertificate {
  Rational bound;             // max(|signed.lo|, |signed.hi|)
  RatInterval signed_range;   // bound_top * dx^(n+1) / (n+1)!
};

RemainderCertificate lagrange_remainder(const RatInterval& bound_top, const Rational& dx, unsigned n);

/// Adding coefficient * (x - x0)^(n+1) to the partial sum centres the error;
/// the remaining error is at most halfwidth_scale * dx^(n+1).
struct Centralization {
  Rational coefficient;
  Rational halfwidth_scale;
};

Centralization centralize(const RatInterval& bound_top, unsigned n);

struct Certificate {
  std::vector<Rational> coefficients;   // c_0 ... c_n
  std::vector<Rational> initial_values; // y^(k)(x0), k = 0 ... n+1
  RadiusCertificate radius;
  QuadraticComparison comparison;
  SolutionRange yrange;
  RatInterval yrange_rounded;           // yrange.range after rounding
  std::vector<DerivativeBound> derivative_bounds;  // orders 1 ... n+1
  RemainderCertificate remainder;
  Centralization centralization;
  Rational centralized_halfwidth;
  std::vector<std::string> warnings;

  Polynomial partial_sum() const { return Polynomial(coefficients); }
};

/// Runs every stage: Taylor coefficients, Cauchy radius, comparison range,
/// derivative bounds, Lagrange remainder and centralization. Throws
/// CertificationError with the failing stage's name.
///
/// x1 beyond the Cauchy radius floor is only a warning: the remainder
/// argument needs the solution to exist on I, which the comparison stage
/// already establishes.
Certificate certify_partial_sum(const ProblemSpec& p);

struct PolynomialCheck {
  Rational bound;             // remainder + difference
  Rational remainder_bound;   // from the partial-sum certificate
  Rational difference_bound;  // sup |q - partial sum| over I, interval-evaluated
  /// Sharper bound: the remainder's signed range is merged into the
  /// (x - x0)^(n+1) coefficient of q - partial sum before evaluating. Equals
  /// the centralized halfwidth when q is the centralized partial sum.
  Rational combined_bound;
  Certificate certificate;
};

/// Certifies sup |q(x) - y(x)| <= bound on [x0, x1] for a polynomial q in x.
PolynomialCheck certify_polynomial(const ProblemSpec& p, const Polynomial& q);

}  // namespace tcert
