#pragma once

#include "taylorcert/enclosures.hpp"
#include "taylorcert/flow_expr.hpp"

#include <optional>
#include <string>

namespace tcert {

/// The right-hand side frozen at the right end of I = [x0, x1]:
/// f(x1, y) = alpha + beta * y^2 with alpha, beta > 0.
struct QuadraticComparison {
  Rational alpha;
  Rational beta;
  Rational x0;
  Rational x1;
  Rational y0;
};

/// Substitutes x := x1 in f and checks the result is alpha + beta * y^2.
/// Throws CertificationError (stage "comparison") naming the offending
/// monomial when a linear or higher-order y term survives, or when alpha or
/// beta is not positive.
QuadraticComparison extract_comparison(const FlowExpr& f, const Rational& x0, const Rational& x1, const Rational& y0);

struct Applicability {
  enum class Failure { None, Positivity, Monotonicity };
  Failure failure = Failure::None;
  /// Interval bound of f (positivity) or df/dx (monotonicity) over the box.
  RatInterval computed;
  std::string message;

  bool ok() const { return failure == Failure::None; }
};

/// Verifies over [x0, x1] x yrange, by interval evaluation, that f > 0 and
/// df/dx >= 0. The latter gives f(x, y) <= f(x1, y) on the box, which is what
/// licenses the differential inequality y' <= f(x1, y).
Applicability check_applicability(const FlowExpr& f, const Rational& x0, const Rational& x1, const RatInterval& yrange);

/// Rigorous range of the solution on I.
struct SolutionRange {
  /// [y0, U]; the lower end is y0 because f > 0 makes y nondecreasing.
  RatInterval range;
  /// Enclosure of the comparison upper bound U.
  RatInterval upper_enclosure;
  bool valid = false;
  std::string diagnostics;
};

/// Integrates dy / (alpha + beta y^2) <= dx from x0 to x1. With
/// s = sqrt(alpha/beta) and t = tan(sqrt(alpha*beta) (x1 - x0)) this gives
///   y(x) <= U = (s t + y0) / (1 - t y0 / s),
/// valid while the angle stays below pi/2, i.e. 1 - t y0 / s > 0. After U is
/// found, check_applicability is re-run on [y0, U].
///
/// Never throws on a failed hypothesis; `valid` is false and `diagnostics`
/// says why.
SolutionRange solution_range(const FlowExpr& f, const QuadraticComparison& qc,
                             const Rational& width = default_enclosure_width());

/// Same bound with tan(theta) replaced by theta in the denominator only,
/// (s t + y0) / (1 - theta y0 / s). For y0 < 0 this is slightly below U and
/// is not a rigorous bound; reported for comparison with hand derivations
/// that linearize the denominator.
std::optional<RatInterval> linearized_upper_bound(const QuadraticComparison& qc,
                                                  const Rational& width = default_enclosure_width());

}  // namespace tcert
