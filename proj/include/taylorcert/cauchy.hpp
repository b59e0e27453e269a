#pragma once

#include "taylorcert/enclosures.hpp"
#include "taylorcert/flow_expr.hpp"

namespace tcert {

/// Guaranteed lower bound on the convergence radius of the Taylor series
/// solution, from a bound M on |f| over the box |x - x0| <= r1,
/// |y - y0| <= r2:  r = r1 (1 - exp(-r2 / (2 M r1))).
///
/// The bound is conservative; the actual radius of convergence is usually
/// much larger.
struct RadiusCertificate {
  Rational r1;
  Rational r2;
  Rational magnitude;  // M
  RatInterval r_enclosure;
  /// r_enclosure.lo() truncated to two decimals (more if that would be 0).
  Rational r_floor;
};

/// Upper bound on |f| over [x0 - r1, x0 + r1] x [y0 - r2, y0 + r2] by
/// monomial-wise interval evaluation.
Rational magnitude_bound(const FlowExpr& f, const Rational& x0, const Rational& y0, const Rational& r1,
                         const Rational& r2);

/// Throws std::invalid_argument unless r1, r2 and M are all positive.
RadiusCertificate convergence_radius(const Rational& r1, const Rational& r2, const Rational& magnitude,
                                     const Rational& width = default_enclosure_width());

}  // namespace tcert
