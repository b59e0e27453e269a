#pragma once

// Fixed-seed random generators for the property tests.

#include "taylorcert/flow_expr.hpp"
#include "taylorcert/interval.hpp"
#include "taylorcert/rational.hpp"

#include <cstdint>
#include <random>

namespace tcert::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// p/q with |p| <= num_bound and 1 <= q <= den_bound.
  Rational rational(long num_bound = 50, long den_bound = 12) {
    return Rational(integer(-num_bound, num_bound), integer(1, den_bound));
  }

  RatInterval interval(long num_bound = 50, long den_bound = 12) {
    const Rational a = rational(num_bound, den_bound);
    const Rational b = rational(num_bound, den_bound);
    return RatInterval(min(a, b), max(a, b));
  }

  /// A rational inside iv: lo + (hi - lo) * k / steps.
  Rational inside(const RatInterval& iv, long steps = 97) {
    return iv.lo() + iv.width() * Rational(integer(0, steps), steps);
  }

  /// Random polynomial in the first `slots` symbols (x, y, y', ...).
  FlowExpr flow_expr(unsigned slots, unsigned max_terms = 4, unsigned max_exp = 2) {
    FlowExpr e;
    const long terms = integer(0, max_terms);
    for (long t = 0; t < terms; ++t) {
      Exponents ex(slots);
      for (auto& v : ex) v = static_cast<std::uint32_t>(integer(0, max_exp));
      e += FlowExpr::monomial(rational(9, 6), ex);
    }
    return e;
  }

  bool coin() { return integer(0, 1) == 1; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace tcert::testing
