#pragma once

#include "taylorcert/interval.hpp"

namespace tcert {

/// Default target width for elementary-function enclosures.
Rational default_enclosure_width();

/// Validated enclosure of pi:
/// [3.14159265358979323, 3.14159265358979324], i.e. the first 18 significant
/// digits of pi = 3.14159265358979323846... truncated and rounded up. Only used
/// for the tangent domain check, where this precision is far more than enough.
const RatInterval& pi_enclosure();

/// Encloses e^(-q) for q >= 0 with width at most `width`.
///
/// Sums the series of e^q until the geometric tail bound
/// q^(N+1)/(N+1)! * 1/(1 - q/(N+2)) is small enough, then takes the reciprocal
/// with outward division. Throws std::invalid_argument if q < 0 or width <= 0.
RatInterval enclose_exp_neg(const Rational& q, const Rational& width);

/// Encloses tan(t) for all t in theta, with theta inside [0, 3/2) and below
/// the certified lower bound of pi/2.
///
/// tan is increasing on the domain, so only the endpoints are evaluated; each
/// uses sin and cos Taylor polynomials with Lagrange remainder bounds. Throws
/// std::domain_error outside the domain and std::invalid_argument if width <= 0.
RatInterval enclose_tan(const RatInterval& theta, const Rational& width);

/// Encloses sqrt(q) for q >= 0; exact perfect squares return a point interval.
RatInterval enclose_sqrt(const Rational& q, const Rational& width);

}  // namespace tcert
