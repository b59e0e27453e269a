#include "taylorcert/polynomial.hpp"

#include "taylorcert/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace tcert {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RatInterval Polynomial::eval_interval(const RatInterval& t) const {
  RatInterval sum(Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    sum = sum + scale(pow(t, static_cast<unsigned>(k)), coeffs_[k]);
  }
  return sum;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const Rational& center) const {
  // Horner in polynomial arithmetic: q(s) = (...(c_n (s + a) + c_{n-1})(s + a) ...).
  const Polynomial linear({center, Rational(1)});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * linear + Polynomial({*it});
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  FlowExpr e;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    e += FlowExpr::monomial(coeffs_[k], {static_cast<std::uint32_t>(k)});
  }
  return e.to_string();
}

Polynomial parse_polynomial(std::string_view text) {
  const FlowExpr e = parse_flow_expr(text);
  if (e.slot_count() > 1) throw InputError("polynomial must be in x only");
  std::vector<Rational> c;
  for (const auto& [exps, coef] : e.terms()) {
    const std::size_t k = exps.empty() ? 0 : exps[0];
    if (c.size() <= k) c.resize(k + 1, Rational(0));
    c[k] += coef;
  }
  return Polynomial(std::move(c));
}

Polynomial compose(const FlowExpr& e, const Rational& x0, const Polynomial& p) {
  if (e.slot_count() > 2) throw std::invalid_argument("compose requires an expression in x and y only");
  const Polynomial x_poly({x0, Rational(1)});
  Polynomial out;
  for (const auto& [exps, coef] : e.terms()) {
    Polynomial term({coef});
    const unsigned ex = exps.size() > 0 ? exps[0] : 0;
    const unsigned ey = exps.size() > 1 ? exps[1] : 0;
    for (unsigned i = 0; i < ex; ++i) term = term * x_poly;
    for (unsigned i = 0; i < ey; ++i) term = term * p;
    out = out + term;
  }
  return out;
}

}  // namespace tcert
