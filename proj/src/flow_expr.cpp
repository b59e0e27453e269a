#include "taylorcert/flow_expr.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tcert {

namespace {

void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Exponents multiply(const Exponents& a, const Exponents& b) {
  Exponents out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace

std::string Symbol::name() const {
  if (is_x()) return "x";
  const unsigned k = derivative_order();
  if (k <= 3) return "y" + std::string(k, '\'');
  return "y^(" + std::to_string(k) + ")";
}

FlowExpr FlowExpr::constant(const Rational& c) { return monomial(c, {}); }

FlowExpr FlowExpr::variable(Symbol s) {
  Exponents e(s.slot() + 1, 0);
  e[s.slot()] = 1;
  return monomial(Rational(1), std::move(e));
}

FlowExpr FlowExpr::monomial(const Rational& c, Exponents exponents) {
  FlowExpr out;
  trim(exponents);
  out.add_term(exponents, c);
  return out;
}

void FlowExpr::add_term(const Exponents& exponents, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

unsigned FlowExpr::slot_count() const {
  std::size_t n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, e.size());
  return static_cast<unsigned>(n);
}

unsigned FlowExpr::order() const {
  const unsigned n = slot_count();
  return n >= 2 ? n - 2 : 0;
}

bool FlowExpr::mentions(Symbol s) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.size() > s.slot() && t.first[s.slot()] > 0; });
}

Rational FlowExpr::coefficient(const Exponents& exponents) const {
  Exponents key = exponents;
  trim(key);
  const auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

FlowExpr& FlowExpr::operator+=(const FlowExpr& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

FlowExpr& FlowExpr::operator-=(const FlowExpr& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

FlowExpr& FlowExpr::operator*=(const FlowExpr& rhs) {
  FlowExpr out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) out.add_term(multiply(ea, eb), ca * cb);
  }
  terms_ = std::move(out.terms_);
  return *this;
}

FlowExpr& FlowExpr::operator*=(const Rational& factor) {
  if (factor.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= factor;
  return *this;
}

FlowExpr FlowExpr::operator-() const { return *this * Rational(-1); }

FlowExpr FlowExpr::pow(unsigned exponent) const {
  FlowExpr result = constant(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) result *= *this;
  return result;
}

FlowExpr FlowExpr::partial(Symbol s) const {
  FlowExpr out;
  const unsigned slot = s.slot();
  for (const auto& [e, c] : terms_) {
    if (e.size() <= slot || e[slot] == 0) continue;
    Exponents d = e;
    const auto power = d[slot]--;
    trim(d);
    out.add_term(d, c * Rational(static_cast<long>(power)));
  }
  return out;
}

std::string FlowExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads closer to hand-written formulas.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.abs();
    bool wrote = false;
    if (mag != Rational(1) || e.empty()) {
      os << mag;
      wrote = true;
    }
    for (std::size_t slot = 0; slot < e.size(); ++slot) {
      if (e[slot] == 0) continue;
      const Symbol sym = slot == 0 ? Symbol::x() : Symbol::y(static_cast<unsigned>(slot - 1));
      if (wrote) os << "*";
      os << sym.name();
      if (e[slot] > 1) os << "^" << e[slot];
      wrote = true;
    }
  }
  return os.str();
}

FlowExpr flow_derivative(const FlowExpr& e) {
  FlowExpr out = e.partial(Symbol::x());
  const unsigned slots = e.slot_count();
  for (unsigned slot = 1; slot < slots; ++slot) {
    const Symbol s = Symbol::y(slot - 1);
    FlowExpr d = e.partial(s);
    if (d.is_zero()) continue;
    out += d * FlowExpr::variable(Symbol::y(slot));
  }
  return out;
}

namespace {

[[noreturn]] void unbound(std::size_t slot) {
  const Symbol s = slot == 0 ? Symbol::x() : Symbol::y(static_cast<unsigned>(slot - 1));
  throw std::out_of_range("unbound symbol " + s.name());
}

}  // namespace

Rational eval_exact(const FlowExpr& e, std::span<const Rational> env) {
  Rational sum(0);
  for (const auto& [exps, c] : e.terms()) {
    Rational term = c;
    for (std::size_t slot = 0; slot < exps.size(); ++slot) {
      if (exps[slot] == 0) continue;
      if (slot >= env.size()) unbound(slot);
      term *= env[slot].pow(exps[slot]);
    }
    sum += term;
  }
  return sum;
}

RatInterval eval_interval(const FlowExpr& e, std::span<const RatInterval> env) {
  RatInterval sum(Rational(0));
  for (const auto& [exps, c] : e.terms()) {
    RatInterval term(Rational(1));
    for (std::size_t slot = 0; slot < exps.size(); ++slot) {
      if (exps[slot] == 0) continue;
      if (slot >= env.size()) unbound(slot);
      term = term * pow(env[slot], exps[slot]);
    }
    sum = sum + scale(term, c);
  }
  return sum;
}

}  // namespace tcert
