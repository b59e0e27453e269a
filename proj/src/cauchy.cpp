#include "taylorcert/cauchy.hpp"

#include <stdexcept>
#include <vector>

namespace tcert {

Rational magnitude_bound(const FlowExpr& f, const Rational& x0, const Rational& y0, const Rational& r1,
                         const Rational& r2) {
  if (r1.sign() <= 0 || r2.sign() <= 0) throw std::invalid_argument("box radii must be positive");
  const std::vector<RatInterval> env{RatInterval(x0 - r1, x0 + r1), RatInterval(y0 - r2, y0 + r2)};
  return eval_interval(f, env).magnitude();
}

RadiusCertificate convergence_radius(const Rational& r1, const Rational& r2, const Rational& magnitude,
                                     const Rational& width) {
  if (r1.sign() <= 0 || r2.sign() <= 0) throw std::invalid_argument("box radii must be positive");
  if (magnitude.sign() <= 0) throw std::invalid_argument("magnitude bound M must be positive");

  const Rational q = r2 / (Rational(2) * magnitude * r1);
  // Each endpoint of r1 * (1 - e) moves by r1 times the exp enclosure's spread.
  const Rational exp_width = r1 > Rational(1) ? width / r1 : width;
  const RatInterval e = enclose_exp_neg(q, exp_width);
  const RatInterval r = scale(RatInterval(Rational(1)) - e, r1);

  unsigned digits = 2;
  Rational floor = r.lo().floor_to(digits);
  while (floor.sign() <= 0) floor = r.lo().floor_to(++digits);
  return {r1, r2, magnitude, r, floor};
}

}  // namespace tcert
