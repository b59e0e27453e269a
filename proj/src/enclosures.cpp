#include "taylorcert/enclosures.hpp"

#include <stdexcept>

namespace tcert {

namespace {

void require_positive_width(const Rational& width) {
  if (width.sign() <= 0) throw std::invalid_argument("enclosure width must be positive");
}

// Endpoints snap onto a decimal grid of spacing <= width/4, so the raw
// enclosure may use up to width/2.
Rational snap_grid(const Rational& width) { return width / 4; }

// sin(t) and cos(t) enclosures from Taylor polynomials of degree 2N+1 and 2N,
// with remainders bounded by |t|^(2N+3)/(2N+3)! and |t|^(2N+2)/(2N+2)!.
struct SinCos {
  RatInterval sin;
  RatInterval cos;
};

SinCos enclose_sin_cos(const Rational& t, unsigned half_order) {
  Rational sin_sum(0), cos_sum(0);
  Rational term(1);  // t^k / k!
  for (unsigned k = 0; k <= 2 * half_order + 1; ++k) {
    if (k > 0) term = term * t / Rational(static_cast<long>(k));
    const bool negative = (k / 2) % 2 == 1;
    if (k % 2 == 0) {
      cos_sum += negative ? -term : term;
    } else {
      sin_sum += negative ? -term : term;
    }
  }
  const Rational next_cos = term * t / Rational(static_cast<long>(2 * half_order + 2));
  const Rational next_sin = next_cos * t / Rational(static_cast<long>(2 * half_order + 3));
  const Rational sin_tail = next_sin.abs();
  const Rational cos_tail = next_cos.abs();
  return {RatInterval(sin_sum - sin_tail, sin_sum + sin_tail), RatInterval(cos_sum - cos_tail, cos_sum + cos_tail)};
}

RatInterval enclose_tan_point(const Rational& t, const Rational& width) {
  if (t.is_zero()) return RatInterval(Rational(0));
  for (unsigned half_order = 2;; ++half_order) {
    const SinCos sc = enclose_sin_cos(t, half_order);
    if (sc.cos.lo().sign() <= 0) continue;
    const Rational lo = sc.sin.lo().sign() > 0 ? sc.sin.lo() / sc.cos.hi() : Rational(0);
    const Rational hi = sc.sin.hi() / sc.cos.lo();
    if (hi - lo <= width) return {lo, hi};
  }
}

}  // namespace

Rational default_enclosure_width() { return decimal_unit(12); }

const RatInterval& pi_enclosure() {
  static const RatInterval pi(Rational::parse("3.14159265358979323"), Rational::parse("3.14159265358979324"));
  return pi;
}

RatInterval enclose_exp_neg(const Rational& q, const Rational& width) {
  require_positive_width(width);
  if (q.sign() < 0) throw std::invalid_argument("enclose_exp_neg requires q >= 0");
  if (q.is_zero()) return RatInterval(Rational(1));

  const Rational raw_width = width / 2;
  Rational sum(1);
  Rational term(1);
  for (unsigned n = 1;; ++n) {
    term = term * q / Rational(static_cast<long>(n));
    sum += term;
    // Tail of e^q after the q^n/n! term: sum_{k>n} q^k/k! <= q^(n+1)/(n+1)! / (1 - q/(n+2)).
    const Rational ratio = q / Rational(static_cast<long>(n + 2));
    if (ratio >= Rational(1)) continue;
    const Rational next = term * q / Rational(static_cast<long>(n + 1));
    const Rational tail = next / (Rational(1) - ratio);
    // e^q in [sum, sum + tail], so e^-q in [1/(sum+tail), 1/sum].
    const RatInterval result(Rational(1) / (sum + tail), Rational(1) / sum);
    if (result.width() <= raw_width) {
      const RatInterval snapped = snap_outward(result, snap_grid(width));
      // e^-q > 0 must survive snapping; keep the raw lower end for tiny values.
      if (snapped.lo().sign() <= 0) return {result.lo(), snapped.hi()};
      return snapped;
    }
  }
}

RatInterval enclose_tan(const RatInterval& theta, const Rational& width) {
  require_positive_width(width);
  if (theta.lo().sign() < 0 || theta.hi() >= Rational(3, 2) || theta.hi() >= pi_enclosure().lo() / 2) {
    throw std::domain_error("enclose_tan requires theta within [0, 3/2)");
  }
  if (theta.hi().is_zero()) return RatInterval(Rational(0));
  const Rational raw_width = width / 2;
  const RatInterval lo_enc = enclose_tan_point(theta.lo(), raw_width);
  const RatInterval hi_enc = theta.is_point() ? lo_enc : enclose_tan_point(theta.hi(), raw_width);
  return snap_outward(RatInterval(lo_enc.lo(), hi_enc.hi()), snap_grid(width));
}

RatInterval enclose_sqrt(const Rational& q, const Rational& width) {
  require_positive_width(width);
  if (q.sign() < 0) throw std::invalid_argument("enclose_sqrt requires q >= 0");

  mpz_class num_root, den_root;
  mpz_sqrt(num_root.get_mpz_t(), q.raw().get_num_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), q.raw().get_den_mpz_t());
  if (num_root * num_root == q.raw().get_num() && den_root * den_root == q.raw().get_den()) {
    return RatInterval(Rational(mpq_class(num_root, den_root)));
  }

  // Invariant: lo^2 <= q <= hi^2.
  Rational lo(0);
  Rational hi = max(Rational(1), q);
  const Rational half(1, 2);
  while (hi - lo > width) {
    const Rational mid = (lo + hi) * half;
    if (mid * mid <= q) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace tcert
