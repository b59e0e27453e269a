#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taylorcert/certify.hpp"
#include "taylorcert/errors.hpp"
#include "taylorcert/oracle.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <map>
#include <vector>

using namespace tcert;

namespace {

Rational q(const char* s) { return Rational::parse(s); }
RatInterval iv(const char* lo, const char* hi) { return RatInterval(q(lo), q(hi)); }

ProblemSpec quarter_problem(DecimalRounding rounding = DecimalRounding::exact()) {
  ProblemSpec p;
  p.f = parse_flow_expr("x^2 + 1/4*y^2");
  p.x0 = q("0");
  p.y0 = q("-1");
  p.degree = 9;
  p.x1 = q("1/5");
  p.r1 = q("1/2");
  p.r2 = q("1");
  p.rounding = rounding;
  return p;
}

ProblemSpec growth_problem() {
  ProblemSpec p;
  p.f = parse_flow_expr("(x + y^2)/4");
  p.x0 = q("0");
  p.y0 = q("1");
  p.degree = 5;
  p.x1 = q("2/5");
  p.r1 = q("2/5");
  p.r2 = q("1");
  return p;
}

// Independent oracle for one monomial of distinct symbols: extremes over the
// corners of the box, with 0 added as a candidate for even powers.
RatInterval corner_range(const Exponents& ex, const Rational& coef, const std::vector<RatInterval>& env) {
  std::vector<std::vector<Rational>> candidates;
  for (std::size_t s = 0; s < ex.size(); ++s) {
    if (ex[s] == 0) continue;
    std::vector<Rational> c{env[s].lo().pow(ex[s]), env[s].hi().pow(ex[s])};
    if (ex[s] % 2 == 0 && env[s].contains_zero()) c.push_back(Rational(0));
    candidates.push_back(c);
  }
  std::vector<Rational> values{coef};
  for (const auto& c : candidates) {
    std::vector<Rational> next;
    for (const auto& v : values)
      for (const auto& w : c) next.push_back(v * w);
    values = next;
  }
  Rational lo = values.front(), hi = values.front();
  for (const auto& v : values) lo = min(lo, v), hi = max(hi, v);
  return {lo, hi};
}

RatInterval corner_oracle(const FlowExpr& e, const std::vector<RatInterval>& env) {
  RatInterval sum(Rational(0));
  for (const auto& [ex, coef] : e.terms()) sum = sum + corner_range(ex, coef, env);
  return sum;
}

}  // namespace

TEST_SUITE("problem spec") {
  TEST_CASE("validation names the field") {
    ProblemSpec p = quarter_problem();
    CHECK_NOTHROW(p.validate());
    p.x1 = q("0");
    CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("x1"), InputError);
    p = quarter_problem();
    p.r2 = q("0");
    CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("r2"), InputError);
    p = quarter_problem();
    p.f = parse_flow_expr("x") * FlowExpr::variable(Symbol::y(1));
    CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("f"), InputError);
  }
}

TEST_SUITE("bound_derivatives") {
  const auto chain = derivative_chain(parse_flow_expr("x^2 + 1/4*y^2"), 9);
  const RatInterval xr = iv("0", "0.2");
  const RatInterval yr = iv("-1", "-0.94");

  TEST_CASE("first two orders") {
    const auto exact = bound_derivatives(chain, xr, yr, DecimalRounding::exact());
    CHECK(exact[0].tight == iv("0.2209", "0.29"));
    const auto rounded = bound_derivatives(chain, xr, yr, DecimalRounding::outward(2));
    CHECK(rounded[0].used == iv("0.22", "0.29"));
    CHECK(rounded[1].tight == iv("-0.145", "0.2966"));
    CHECK(rounded[1].used == iv("-0.15", "0.3"));
  }

  TEST_CASE("two-decimal table for orders 1 to 8") {
    const auto b = bound_derivatives(chain, xr, yr, DecimalRounding::outward(2));
    const std::vector<RatInterval> table{iv("0.22", "0.29"),   iv("-0.15", "0.3"),  iv("1.87", "2.12"),
                                         iv("-1.13", "-0.74"), iv("1.17", "1.93"),  iv("-3.38", "2.23"),
                                         iv("14.59", "27.12"), iv("-61.96", "-22.73")};
    for (std::size_t k = 0; k < table.size(); ++k) {
      CAPTURE(k + 1);
      CHECK(b[k].used == table[k]);
    }
  }

  TEST_CASE("orders 9 and 10 differ from the hand-derived pairs") {
    const auto b = bound_derivatives(chain, xr, yr, DecimalRounding::outward(2));
    CHECK(b[8].used.contains(iv("92.03", "146.76")));
    CHECK(b[8].used != iv("92.03", "146.76"));
    CHECK(b[9].used.lo() < q("-665.9"));
    CHECK(b[9].used != iv("-665.9", "281"));
  }

  TEST_CASE("monomial-wise evaluation equals the corner oracle") {
    for (const auto rounding : {DecimalRounding::exact(), DecimalRounding::outward(2)}) {
      const auto b = bound_derivatives(chain, xr, yr, rounding);
      std::vector<RatInterval> env{xr, yr};
      for (std::size_t k = 1; k <= chain.size(); ++k) {
        CAPTURE(k);
        CHECK(b[k - 1].tight == corner_oracle(chain.derivative(k), env));
        env.push_back(b[k - 1].used);
      }
    }
  }

  TEST_CASE("outward rounding contains the exact bounds at every order") {
    const auto exact = bound_derivatives(chain, xr, yr, DecimalRounding::exact());
    for (unsigned d : {1u, 2u, 3u, 5u}) {
      const auto rounded = bound_derivatives(chain, xr, yr, DecimalRounding::outward(d));
      for (std::size_t k = 0; k < exact.size(); ++k) CHECK(rounded[k].used.contains(exact[k].used));
    }
  }
}

TEST_SUITE("remainder and centralization") {
  TEST_CASE("hand-derived top bound") {
    const auto r = lagrange_remainder(iv("-665.9", "281"), q("0.2"), 9);
    CHECK(r.bound == q("665.9") * q("0.2").pow(10) / factorial(10));
    CHECK(r.bound < q("2e-11"));
    // 1.87908...e-11
    CHECK(r.bound > q("1.879e-11"));
    CHECK(r.bound < q("1.8791e-11"));
    CHECK(r.signed_range.hi() == q("281") * q("0.2").pow(10) / factorial(10));
  }

  TEST_CASE("degenerate inputs") {
    CHECK(lagrange_remainder(RatInterval(Rational(0)), q("0.2"), 9).bound.is_zero());
    const auto z = lagrange_remainder(iv("-5", "7"), q("0"), 3);
    CHECK(z.bound.is_zero());
    CHECK(z.signed_range == RatInterval(Rational(0)));
    CHECK_THROWS_AS(lagrange_remainder(iv("-5", "7"), q("-1"), 3), std::invalid_argument);
  }

  TEST_CASE("centralize") {
    const auto c = centralize(iv("-665.9", "281"), 9);
    CHECK(c.coefficient == q("-1283/24192000"));
    const Rational halfwidth = c.halfwidth_scale * q("0.2").pow(10);
    CHECK((halfwidth - q("1.336e-11")).abs() < q("1e-13"));
    CHECK(centralize(iv("-3", "3"), 4).coefficient.is_zero());
  }
}

TEST_SUITE("certify_partial_sum") {
  TEST_CASE("quarter Riccati problem") {
    const Certificate c = certify_partial_sum(quarter_problem());
    CHECK(c.coefficients.size() == 10);
    CHECK(c.coefficients[3] == q("67/192"));
    CHECK(c.coefficients[9] == q("39803/82575360"));
    CHECK(c.remainder.bound < q("1e-10"));
    CHECK(c.radius.r_floor == q("0.27"));
    CHECK(c.warnings.empty());
    CHECK(c.derivative_bounds.size() == 10);
    CHECK(c.remainder.bound == max(c.remainder.signed_range.lo().abs(), c.remainder.signed_range.hi().abs()));
  }

  TEST_CASE("bounds contain the exact derivatives at x0 and the numeric ones at x1") {
    for (const ProblemSpec& p : {quarter_problem(), quarter_problem(DecimalRounding::outward(2)), growth_problem()}) {
      const Certificate c = certify_partial_sum(p);
      for (std::size_t k = 1; k < c.initial_values.size(); ++k) {
        CHECK(c.derivative_bounds[k - 1].used.contains(c.initial_values[k]));
      }
      const auto chain = derivative_chain(p.f, p.degree);
      const ReferenceValue y1 = reference_solution(p.f, p.x0, p.y0, p.x1);
      const auto numeric = numeric_derivatives(chain, to_high(p.x1), y1.value);
      for (std::size_t k = 1; k < numeric.size(); ++k) {
        CAPTURE(k);
        CHECK(to_high(c.derivative_bounds[k - 1].used.lo()) <= numeric[k]);
        CHECK(numeric[k] <= to_high(c.derivative_bounds[k - 1].used.hi()));
      }
    }
  }

  TEST_CASE("certificate soundness on 50 grid points") {
    for (const ProblemSpec& p : {quarter_problem(), growth_problem()}) {
      const Certificate c = certify_partial_sum(p);
      const Polynomial ps = c.partial_sum();
      std::vector<Rational> grid;
      for (int k = 1; k <= 50; ++k) grid.push_back(p.x0 + (p.x1 - p.x0) * Rational(k, 50));
      const auto ref = reference_path(p.f, p.x0, p.y0, grid, HighFloat("1e-22"));
      const HighFloat bound = to_high(c.remainder.bound);
      const HighFloat central = to_high(c.centralized_halfwidth);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const Rational t = grid[i] - p.x0;
        const HighFloat err = abs(ref[i].value - to_high(ps(t)));
        CHECK(err <= bound);
        const Rational shift = c.centralization.coefficient * t.pow(p.degree + 1);
        CHECK(abs(ref[i].value - to_high(ps(t) + shift)) <= central);
      }
    }
  }

  TEST_CASE("growth problem") {
    const Certificate c = certify_partial_sum(growth_problem());
    CHECK(c.coefficients == std::vector<Rational>{q("1"), q("1/4"), q("3/16"), q("7/192"), q("1/96"), q("19/5120")});
    CHECK(c.remainder.bound < q("2e-5"));
    REQUIRE(c.warnings.size() == 1);
    CHECK(c.warnings[0].find("exceeds the guaranteed convergence radius") != std::string::npos);
  }

  TEST_CASE("degree zero gives the mean-value bound") {
    ProblemSpec p = quarter_problem();
    p.degree = 0;
    const Certificate c = certify_partial_sum(p);
    const RatInterval d1 = eval_interval(p.f, std::vector<RatInterval>{iv("0", "0.2"), c.yrange_rounded});
    CHECK(c.remainder.bound == d1.magnitude() * p.x1);
  }

  TEST_CASE("failures name their stage") {
    ProblemSpec p = quarter_problem();
    p.f = parse_flow_expr("x*y");
    CHECK_THROWS_WITH_AS(certify_partial_sum(p), doctest::Contains("comparison"), CertificationError);
    p.f = parse_flow_expr("x - 1/10 + y^2");
    p.y0 = q("0");
    try {
      certify_partial_sum(p);
      FAIL("expected CertificationError");
    } catch (const CertificationError& e) {
      CHECK(e.stage() == "range");
      CHECK(std::string(e.what()).find("positivity failure") != std::string::npos);
    }
  }
}

TEST_SUITE("certify_polynomial") {
  TEST_CASE("the partial sum itself") {
    const ProblemSpec p = quarter_problem();
    const Certificate c = certify_partial_sum(p);
    const auto check = certify_polynomial(p, c.partial_sum());
    CHECK(check.difference_bound.is_zero());
    CHECK(check.bound == c.remainder.bound);
    CHECK(check.combined_bound == c.remainder.bound);
  }

  TEST_CASE("the centralized partial sum") {
    const ProblemSpec p = quarter_problem();
    const Certificate c = certify_partial_sum(p);
    std::vector<Rational> coeffs = c.coefficients;
    coeffs.push_back(c.centralization.coefficient);
    const auto check = certify_polynomial(p, Polynomial(coeffs));
    CHECK(check.combined_bound == c.centralization.halfwidth_scale * p.x1.pow(10));
    CHECK(check.difference_bound == c.centralization.coefficient.abs() * p.x1.pow(10));
  }

  TEST_CASE("perturbed fifth-order coefficient on the growth problem") {
    const ProblemSpec p = growth_problem();
    const auto check = certify_polynomial(p, parse_polynomial("1 + x/4 + 3/16*x^2 + 7/192*x^3 + 1/96*x^4 + 1/200*x^5"));
    CHECK(check.difference_bound == (q("1/200") - q("19/5120")) * q("2/5").pow(5));
    CHECK(check.bound == check.remainder_bound + check.difference_bound);
    CHECK(check.combined_bound <= check.bound);
    std::vector<Rational> grid;
    for (int k = 1; k <= 100; ++k) grid.push_back(Rational(k, 250));
    const auto ref = reference_path(p.f, p.x0, p.y0, grid, HighFloat("1e-18"));
    const Polynomial ybar = parse_polynomial("1 + x/4 + 3/16*x^2 + 7/192*x^3 + 1/96*x^4 + 1/200*x^5");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const HighFloat err = abs(ref[i].value - to_high(ybar(grid[i])));
      CHECK(err <= HighFloat("2e-5"));
      CHECK(err <= to_high(check.combined_bound));
    }
  }

  TEST_CASE("non-zero expansion point") {
    ProblemSpec p = growth_problem();
    p.x0 = q("1/10");
    p.x1 = q("3/10");
    const Certificate c = certify_partial_sum(p);
    // Partial sum in powers of (x - x0), re-expressed in powers of x.
    const Polynomial in_x = c.partial_sum().shifted(-p.x0);
    const auto check = certify_polynomial(p, in_x);
    CHECK(check.difference_bound.is_zero());
  }
}
