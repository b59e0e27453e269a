#include "taylorcert/oracle.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace tcert {

namespace {

// Gamma(1/4) and Gamma(3/4) to 40 digits (OEIS A068466 and A068465).
const HighFloat& gamma_quarter() {
  static const HighFloat g("3.625609908221908311930685155867672002995");
  return g;
}

const HighFloat& gamma_three_quarters() {
  static const HighFloat g("1.225416702465177645129098303362890526851");
  return g;
}

constexpr unsigned kMaxDoublings = 24;

struct BesselSum {
  HighFloat value;
  HighFloat last_term;
};

// J_nu(z) = sum_m (-1)^m (z/2)^(2m+nu) / (m! Gamma(m+nu+1)), with
// Gamma(nu+1) supplied and later Gamma values from the recurrence.
BesselSum bessel_j(const HighFloat& nu, const HighFloat& gamma_nu_plus_one, const HighFloat& z, unsigned terms) {
  const HighFloat half = z / 2;
  const HighFloat ratio = -(half * half);
  HighFloat term = boost::multiprecision::pow(half, nu) / gamma_nu_plus_one;
  HighFloat sum = term;
  for (unsigned m = 1; m < terms; ++m) {
    term *= ratio / (HighFloat(m) * (HighFloat(m) + nu));
    sum += term;
  }
  return {sum, term};
}

}  // namespace

HighFloat to_high(const Rational& r) {
  return HighFloat(r.numerator().get_str()) / HighFloat(r.denominator().get_str());
}

std::string format_significant(const HighFloat& v, int digits) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(digits - 1) << v;
  return os.str();
}

NumericFlow::NumericFlow(const FlowExpr& e) {
  slots_ = e.slot_count();
  for (const auto& [exps, c] : e.terms()) {
    Term t{to_high(c), {}};
    for (std::size_t slot = 0; slot < exps.size(); ++slot) {
      if (exps[slot] > 0) t.factors.emplace_back(slot, exps[slot]);
    }
    terms_.push_back(std::move(t));
  }
}

HighFloat NumericFlow::operator()(std::span<const HighFloat> env) const {
  if (env.size() < slots_) throw std::out_of_range("numeric environment too short");
  HighFloat sum = 0;
  for (const auto& t : terms_) {
    HighFloat v = t.coefficient;
    for (const auto& [slot, power] : t.factors) {
      for (unsigned i = 0; i < power; ++i) v *= env[slot];
    }
    sum += v;
  }
  return sum;
}

HighFloat rk4_integrate(const NumericFlow& f, const HighFloat& x0, const HighFloat& y0, const HighFloat& x,
                        unsigned steps) {
  const HighFloat h = (x - x0) / steps;
  const HighFloat half_h = h / 2;
  HighFloat xi = x0;
  HighFloat yi = y0;
  std::array<HighFloat, 2> env;
  auto rhs = [&](const HighFloat& xa, const HighFloat& ya) {
    env[0] = xa;
    env[1] = ya;
    return f(env);
  };
  for (unsigned i = 0; i < steps; ++i) {
    const HighFloat k1 = rhs(xi, yi);
    const HighFloat k2 = rhs(xi + half_h, yi + half_h * k1);
    const HighFloat k3 = rhs(xi + half_h, yi + half_h * k2);
    const HighFloat k4 = rhs(xi + h, yi + h * k3);
    yi += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    xi = x0 + h * (i + 1);
  }
  return yi;
}

ReferenceValue reference_solution(const FlowExpr& f, const Rational& x0, const Rational& y0, const Rational& x,
                                  const HighFloat& tol) {
  const std::vector<Rational> xs{x};
  return reference_path(f, x0, y0, xs, tol).front();
}

std::vector<ReferenceValue> reference_path(const FlowExpr& f, const Rational& x0, const Rational& y0,
                                           std::span<const Rational> xs, const HighFloat& tol) {
  if (f.slot_count() > 2) throw std::invalid_argument("reference integrator needs f(x, y) only");
  if (!std::is_sorted(xs.begin(), xs.end()) || (!xs.empty() && xs.front() < x0)) {
    throw std::invalid_argument("grid must be ascending and start at or after x0");
  }
  const NumericFlow rhs(f);
  std::vector<HighFloat> grid;
  grid.reserve(xs.size());
  for (const auto& xi : xs) grid.push_back(to_high(xi));

  auto sweep = [&](unsigned steps_per_cell) {
    std::vector<HighFloat> out;
    out.reserve(grid.size());
    HighFloat xc = to_high(x0);
    HighFloat yc = to_high(y0);
    for (const auto& xg : grid) {
      if (xg != xc) yc = rk4_integrate(rhs, xc, yc, xg, steps_per_cell);
      xc = xg;
      out.push_back(yc);
    }
    return out;
  };

  std::vector<HighFloat> previous = sweep(4);
  for (unsigned doubling = 0, steps = 8; doubling < kMaxDoublings; ++doubling, steps *= 2) {
    std::vector<HighFloat> current = sweep(steps);
    HighFloat worst = 0;
    for (std::size_t i = 0; i < current.size(); ++i) worst = std::max(worst, HighFloat(abs(current[i] - previous[i])));
    if (worst < tol) {
      std::vector<ReferenceValue> values;
      values.reserve(current.size());
      for (std::size_t i = 0; i < current.size(); ++i) {
        values.push_back({current[i], HighFloat(abs(current[i] - previous[i])), ReferenceValue::Method::Integrator});
      }
      return values;
    }
    previous = std::move(current);
  }
  throw std::runtime_error("reference integrator did not reach the tolerance within the step budget");
}

std::vector<HighFloat> numeric_derivatives(const DerivativeChain& chain, const HighFloat& x, const HighFloat& y) {
  std::vector<HighFloat> env{x, y};
  for (std::size_t k = 1; k <= chain.size(); ++k) env.push_back(NumericFlow(chain.derivative(k))(env));
  return {env.begin() + 1, env.end()};
}

ReferenceValue riccati_exact(const Rational& x, unsigned terms) {
  if (x.is_zero()) throw std::domain_error("closed form degenerates at x = 0 (limit y(0) = -1)");
  if (terms < 2) throw std::runtime_error("riccati_exact needs at least two series terms");

  const HighFloat xv = to_high(x);
  const HighFloat z = xv * xv / 4;
  const HighFloat a = gamma_quarter();
  const HighFloat b = 4 * boost::multiprecision::sqrt(HighFloat(2)) * gamma_three_quarters();

  auto evaluate = [&](unsigned n, HighFloat* worst_tail) {
    const HighFloat q1("0.25"), q3("0.75");
    // Gamma(nu + 1) for nu = 1/4, -1/4, 3/4, -3/4.
    const BesselSum jp1 = bessel_j(q1, a / 4, z, n);
    const BesselSum jm1 = bessel_j(-q1, gamma_three_quarters(), z, n);
    const BesselSum jp3 = bessel_j(q3, 3 * gamma_three_quarters() / 4, z, n);
    const BesselSum jm3 = bessel_j(-q3, a, z, n);
    if (worst_tail != nullptr) {
      HighFloat w = 0;
      for (const auto* s : {&jp1, &jm1, &jp3, &jm3}) w = std::max(w, HighFloat(abs(s->last_term / s->value)));
      *worst_tail = w;
    }
    return 2 * xv * (b * jp3.value - a * jm3.value) / (a * jp1.value + b * jm1.value);
  };

  HighFloat tail;
  const HighFloat value = evaluate(terms, &tail);
  if (tail > HighFloat("1e-25")) throw std::runtime_error("riccati_exact: too few series terms for this x");
  const HighFloat coarser = evaluate(terms - 1, nullptr);
  return {value, HighFloat(abs(value - coarser)), ReferenceValue::Method::Bessel};
}

}  // namespace tcert
