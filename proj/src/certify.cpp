#include "taylorcert/certify.hpp"

#include "taylorcert/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcert {

void ProblemSpec::validate() const {
  if (f.slot_count() > 2) throw InputError("f: only x and y may appear");
  if (x1 <= x0) throw InputError("x1: must be greater than x0");
  if (r1.sign() <= 0) throw InputError("r1: must be positive");
  if (r2.sign() <= 0) throw InputError("r2: must be positive");
  if (enclosure_width.sign() <= 0) throw InputError("width: must be positive");
}

std::vector<DerivativeBound> bound_derivatives(const DerivativeChain& chain, const RatInterval& xrange,
                                               const RatInterval& yrange, const DecimalRounding& rounding) {
  std::vector<RatInterval> env{xrange, yrange};
  std::vector<DerivativeBound> bounds;
  bounds.reserve(chain.size());
  for (std::size_t k = 1; k <= chain.size(); ++k) {
    const RatInterval tight = eval_interval(chain.derivative(k), env);
    const RatInterval used = rounding.apply(tight);
    bounds.push_back({tight, used});
    env.push_back(used);
  }
  return bounds;
}

RemainderCertificate lagrange_remainder(const RatInterval& bound_top, const Rational& dx, unsigned n) {
  if (dx.sign() < 0) throw std::invalid_argument("dx must be non-negative");
  const Rational factor = dx.pow(n + 1) / factorial(n + 1);
  const RatInterval signed_range = scale(bound_top, factor);
  return {signed_range.magnitude(), signed_range};
}

Centralization centralize(const RatInterval& bound_top, unsigned n) {
  const Rational f = factorial(n + 1);
  return {bound_top.midpoint() / f, bound_top.radius() / f};
}

Certificate certify_partial_sum(const ProblemSpec& p) {
  p.validate();
  Certificate cert;
  const Rational dx = p.x1 - p.x0;
  const unsigned n = p.degree;

  DerivativeChain chain;
  try {
    chain = derivative_chain(p.f, n);
  } catch (const std::invalid_argument& e) {
    throw CertificationError("taylor", e.what());
  }
  cert.initial_values = initial_derivatives(chain, p.x0, p.y0);
  for (unsigned k = 0; k <= n; ++k) cert.coefficients.push_back(cert.initial_values[k] / factorial(k));

  try {
    const Rational m = magnitude_bound(p.f, p.x0, p.y0, p.r1, p.r2);
    if (m.is_zero()) throw CertificationError("radius", "f vanishes on the Cauchy box; no radius bound needed");
    cert.radius = convergence_radius(p.r1, p.r2, m, p.enclosure_width);
  } catch (const std::invalid_argument& e) {
    throw CertificationError("radius", e.what());
  }
  if (p.x1 - p.x0 > cert.radius.r_floor) {
    const auto text = [](const Rational& r) {
      const int places = r.decimal_places();
      return r.to_decimal(places >= 0 && places <= 12 ? static_cast<unsigned>(places) : 6u);
    };
    cert.warnings.push_back("x1 - x0 = " + text(dx) + " exceeds the guaranteed convergence radius " +
                            text(cert.radius.r_floor) + "; the remainder certificate still holds on I");
  }

  cert.comparison = extract_comparison(p.f, p.x0, p.x1, p.y0);
  cert.yrange = solution_range(p.f, cert.comparison, p.enclosure_width);
  if (!cert.yrange.valid) throw CertificationError("range", cert.yrange.diagnostics);
  cert.yrange_rounded = p.rounding.apply(cert.yrange.range);

  cert.derivative_bounds = bound_derivatives(chain, RatInterval(p.x0, p.x1), cert.yrange_rounded, p.rounding);
  for (std::size_t k = 1; k <= cert.derivative_bounds.size(); ++k) {
    // Every bound must contain the exact derivative value at x0.
    if (!cert.derivative_bounds[k - 1].used.contains(cert.initial_values[k])) {
      throw CertificationError("bounds", "bound for order " + std::to_string(k) + " misses y^(k)(x0)");
    }
  }

  const RatInterval& top = cert.derivative_bounds.back().used;
  cert.remainder = lagrange_remainder(top, dx, n);
  cert.centralization = centralize(top, n);
  cert.centralized_halfwidth = cert.centralization.halfwidth_scale * dx.pow(n + 1);
  return cert;
}

PolynomialCheck certify_polynomial(const ProblemSpec& p, const Polynomial& q) {
  PolynomialCheck out;
  out.certificate = certify_partial_sum(p);
  // Partial sum is in powers of (x - x0); q is in powers of x.
  const Polynomial diff = q.shifted(p.x0) - out.certificate.partial_sum();
  out.difference_bound = diff.eval_interval(RatInterval(Rational(0), p.x1 - p.x0)).magnitude();
  out.remainder_bound = out.certificate.remainder.bound;
  out.bound = out.remainder_bound + out.difference_bound;

  // q - y = diff(t) - R(t) with R(t) in signed_range * (t/dx)^(n+1).
  const unsigned top = p.degree + 1;
  const RatInterval t(Rational(0), p.x1 - p.x0);
  const RatInterval r_coeff = scale(out.certificate.derivative_bounds.back().used, Rational(1) / factorial(top));
  RatInterval total(Rational(0));
  for (std::size_t k = 0; k < std::max<std::size_t>(diff.coefficients().size(), top + 1); ++k) {
    RatInterval c(diff.coefficient(k));
    if (k == top) c = c - r_coeff;
    total = total + c * pow(t, static_cast<unsigned>(k));
  }
  out.combined_bound = total.magnitude();
  return out;
}

}  // namespace tcert
