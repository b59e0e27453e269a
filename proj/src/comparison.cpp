#include "taylorcert/comparison.hpp"

#include "taylorcert/errors.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace tcert {

namespace {

std::string describe(const RatInterval& iv) {
  std::ostringstream os;
  os << "[" << iv.lo().to_decimal(12, Rational::Round::Floor) << ", " << iv.hi().to_decimal(12, Rational::Round::Ceil)
     << "]";
  return os.str();
}

struct ComparisonParts {
  RatInterval s;      // sqrt(alpha / beta)
  RatInterval theta;  // sqrt(alpha * beta) * (x1 - x0)
};

ComparisonParts comparison_parts(const QuadraticComparison& qc, const Rational& width) {
  const Rational dx = qc.x1 - qc.x0;
  const RatInterval s = enclose_sqrt(qc.alpha / qc.beta, width);
  const RatInterval rate = enclose_sqrt(qc.alpha * qc.beta, dx > Rational(1) ? width / dx : width);
  return {s, scale(rate, dx)};
}

bool angle_in_domain(const RatInterval& theta) {
  return theta.hi() < Rational(3, 2) && theta.hi() < pi_enclosure().lo() / 2;
}

}  // namespace

QuadraticComparison extract_comparison(const FlowExpr& f, const Rational& x0, const Rational& x1, const Rational& y0) {
  if (f.slot_count() > 2) throw CertificationError("comparison", "right-hand side mentions derivative symbols");
  std::map<unsigned, Rational> by_power;
  std::map<unsigned, std::string> first_monomial;
  for (const auto& [exps, c] : f.terms()) {
    const unsigned ex = exps.size() > 0 ? exps[0] : 0;
    const unsigned ey = exps.size() > 1 ? exps[1] : 0;
    by_power[ey] += c * x1.pow(ex);
    first_monomial.try_emplace(ey, FlowExpr::monomial(c, exps).to_string());
  }
  for (const auto& [power, coef] : by_power) {
    if (coef.is_zero() || power == 0 || power == 2) continue;
    throw CertificationError("comparison", "f(x1, y) must have the form alpha + beta*y^2; monomial " +
                                               first_monomial[power] + " leaves a y^" + std::to_string(power) +
                                               " term after substituting x := x1");
  }
  QuadraticComparison qc{by_power[0], by_power[2], x0, x1, y0};
  if (qc.alpha.sign() <= 0) {
    throw CertificationError("comparison", "constant term alpha = " + qc.alpha.raw().get_str() +
                                               " of f(x1, y) must be positive");
  }
  if (qc.beta.sign() <= 0) {
    throw CertificationError("comparison", "y^2 coefficient beta = " + qc.beta.raw().get_str() +
                                               " of f(x1, y) must be positive");
  }
  return qc;
}

Applicability check_applicability(const FlowExpr& f, const Rational& x0, const Rational& x1, const RatInterval& yrange) {
  const std::vector<RatInterval> env{RatInterval(x0, x1), yrange};
  Applicability result;
  const RatInterval f_range = eval_interval(f, env);
  if (f_range.lo().sign() <= 0) {
    result.failure = Applicability::Failure::Positivity;
    result.computed = f_range;
    result.message = "positivity failure: f ranges over " + describe(f_range) + " on the box";
    return result;
  }
  const RatInterval slope = eval_interval(f.partial(Symbol::x()), env);
  if (slope.lo().sign() < 0) {
    result.failure = Applicability::Failure::Monotonicity;
    result.computed = slope;
    result.message = "monotonicity failure: df/dx ranges over " + describe(slope) + " on the box";
    return result;
  }
  result.computed = f_range;
  return result;
}

SolutionRange solution_range(const FlowExpr& f, const QuadraticComparison& qc, const Rational& width) {
  SolutionRange out;
  out.range = RatInterval(qc.y0);
  out.upper_enclosure = RatInterval(qc.y0);
  if (qc.x1 < qc.x0) {
    out.diagnostics = "interval end x1 lies left of x0";
    return out;
  }

  const auto [s, theta] = comparison_parts(qc, width);
  if (!angle_in_domain(theta)) {
    out.diagnostics = "comparison solution escapes before x1: angle sqrt(alpha*beta)*(x1-x0) = " +
                      describe(theta) + " is not below pi/2";
    return out;
  }
  const RatInterval t = enclose_tan(theta, width);
  const RatInterval y0(qc.y0);
  const RatInterval denominator = RatInterval(Rational(1)) - (t * y0) / s;
  if (denominator.lo().sign() <= 0) {
    out.diagnostics = "comparison solution escapes before x1: 1 - t*y0/s = " + describe(denominator) +
                      " is not positive";
    return out;
  }
  const RatInterval upper = snap_outward((s * t + y0) / denominator, width / 4);
  out.upper_enclosure = upper;
  out.range = RatInterval(qc.y0, max(qc.y0, upper.hi()));

  const Applicability app = check_applicability(f, qc.x0, qc.x1, out.range);
  if (!app.ok()) {
    out.diagnostics = app.message;
    return out;
  }
  out.valid = true;
  return out;
}

std::optional<RatInterval> linearized_upper_bound(const QuadraticComparison& qc, const Rational& width) {
  const auto [s, theta] = comparison_parts(qc, width);
  if (!angle_in_domain(theta)) return std::nullopt;
  const RatInterval t = enclose_tan(theta, width);
  const RatInterval y0(qc.y0);
  const RatInterval denominator = RatInterval(Rational(1)) - (theta * y0) / s;
  if (denominator.lo().sign() <= 0) return std::nullopt;
  return (s * t + y0) / denominator;
}

}  // namespace tcert
