#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/generators.hpp"
#include "taylorcert/errors.hpp"
#include "taylorcert/flow_expr.hpp"
#include "taylorcert/polynomial.hpp"
#include "taylorcert/taylor.hpp"

#include <stdexcept>
#include <vector>

using namespace tcert;
using tcert::testing::Gen;

namespace {

Rational q(const char* s) { return Rational::parse(s); }
FlowExpr X() { return FlowExpr::variable(Symbol::x()); }
FlowExpr Y(unsigned k = 0) { return FlowExpr::variable(Symbol::y(k)); }
FlowExpr C(const char* s) { return FlowExpr::constant(q(s)); }

std::vector<Rational> rationals(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* s : xs) out.push_back(q(s));
  return out;
}

// Independent oracle: Picard-style coefficient recurrence on truncated power
// series, c_{k+1} = [t^k] f(t + x0, p_k(t)) / (k + 1).
std::vector<Rational> picard_coefficients(const FlowExpr& f, const Rational& x0, const Rational& y0, unsigned n) {
  std::vector<Rational> c{y0};
  for (unsigned k = 0; k < n; ++k) {
    const Polynomial g = compose(f, x0, Polynomial(c));
    c.push_back(g.coefficient(k) / Rational(k + 1));
  }
  return c;
}

const FlowExpr kQuarter = parse_flow_expr("x^2 + 1/4*y^2");
const FlowExpr kGrowth = parse_flow_expr("(x + y^2)/4");

}  // namespace

TEST_SUITE("symbols and expressions") {
  TEST_CASE("symbol names") {
    CHECK(Symbol::x().name() == "x");
    CHECK(Symbol::y().name() == "y");
    CHECK(Symbol::y(1).name() == "y'");
    CHECK(Symbol::y(3).name() == "y'''");
    CHECK(Symbol::y(4).name() == "y^(4)");
    CHECK(Symbol::y(10).name() == "y^(10)");
  }

  TEST_CASE("no zero coefficients are stored") {
    FlowExpr e = X() + Y();
    e -= X();
    CHECK(e == Y());
    CHECK(e.size() == 1);
    CHECK((X() - X()).is_zero());
    CHECK((X() * Rational(0)).is_zero());
  }

  TEST_CASE("order and mentions") {
    const FlowExpr e = Y() * Y(3) + X();
    CHECK(e.order() == 3);
    CHECK(e.mentions(Symbol::y(3)));
    CHECK_FALSE(e.mentions(Symbol::y(2)));
    CHECK(kQuarter.order() == 0);
    CHECK(e.coefficient({0, 1, 0, 0, 1}) == Rational(1));
  }

  TEST_CASE("printing round-trips through the parser") {
    Gen g(3);
    for (int i = 0; i < 200; ++i) {
      const FlowExpr e = g.flow_expr(2, 5, 4);
      CAPTURE(e.to_string());
      CHECK(parse_flow_expr(e.to_string()) == e);
    }
  }

  TEST_CASE("partial derivatives") {
    const FlowExpr e = parse_flow_expr("3*x^2*y + y^3");
    CHECK(e.partial(Symbol::x()) == parse_flow_expr("6*x*y"));
    CHECK(e.partial(Symbol::y()) == parse_flow_expr("3*x^2 + 3*y^2"));
    CHECK(e.partial(Symbol::y(2)).is_zero());
  }
}

TEST_SUITE("parser") {
  TEST_CASE("accepted forms") {
    CHECK(kQuarter == X().pow(2) + C("1/4") * Y().pow(2));
    CHECK(kGrowth == C("1/4") * X() + C("1/4") * Y().pow(2));
    CHECK(parse_flow_expr("0.25*x + 0.25*y^2") == kGrowth);
    CHECK(parse_flow_expr("-(x - y)^2") == -(X().pow(2) - C("2") * X() * Y() + Y().pow(2)));
    CHECK(parse_flow_expr("7").is_zero() == false);
    CHECK(parse_flow_expr("x*x*x") == X().pow(3));
    CHECK(parse_flow_expr("  2 * x ^ 2  ") == C("2") * X().pow(2));
    CHECK(parse_flow_expr("x - -y") == X() + Y());
  }

  TEST_CASE("unsupported token is named with its column") {
    try {
      parse_flow_expr("x + sin(x)");
      FAIL("expected ExprSyntaxError");
    } catch (const ExprSyntaxError& e) {
      CHECK(e.detail() == "unsupported token 'sin'");
      CHECK(e.column() == 5);
    }
  }

  TEST_CASE("malformed input") {
    for (const char* bad : {"", "x +", "(x", "x)", "x^", "x^-1", "x^1.5", "y/x", "x/0", "x y", "z", "2..3", "y'"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_flow_expr(bad), ExprSyntaxError);
    }
  }
}

TEST_SUITE("evaluation") {
  TEST_CASE("exact evaluation of the third derivative") {
    const auto chain = derivative_chain(kQuarter, 3);
    const std::vector<Rational> env = rationals({"0", "-1", "1/4", "-1/8"});
    CHECK(eval_exact(chain.derivative(3), env) == Rational(67, 32));
  }

  TEST_CASE("constant under an empty environment") {
    CHECK(eval_exact(C("7"), {}) == Rational(7));
    CHECK(eval_interval(C("7"), {}) == RatInterval(Rational(7)));
  }

  TEST_CASE("unbound symbols") {
    const std::vector<Rational> env = rationals({"0", "1"});
    CHECK_THROWS_AS(eval_exact(Y(1), env), std::out_of_range);
    const std::vector<RatInterval> ienv{RatInterval(Rational(0))};
    CHECK_THROWS_AS(eval_interval(Y(), ienv), std::out_of_range);
  }

  TEST_CASE("interval evaluation contains point evaluation") {
    Gen g(17);
    for (int i = 0; i < 300; ++i) {
      const FlowExpr e = g.flow_expr(3, 5, 3);
      std::vector<RatInterval> boxes;
      std::vector<Rational> points;
      for (int s = 0; s < 3; ++s) {
        boxes.push_back(g.interval(10, 4));
        points.push_back(g.inside(boxes.back()));
      }
      CHECK(eval_interval(e, boxes).contains(eval_exact(e, points)));
    }
  }
}

TEST_SUITE("flow derivative") {
  TEST_CASE("worked chain") {
    const FlowExpr d2 = flow_derivative(kQuarter);
    CHECK(d2 == C("2") * X() + C("1/2") * Y() * Y(1));
    CHECK(flow_derivative(d2) == C("2") + C("1/2") * Y(1).pow(2) + C("1/2") * Y() * Y(2));
    CHECK(flow_derivative(C("7")).is_zero());
  }

  TEST_CASE("chain for the growth problem") {
    const auto chain = derivative_chain(kGrowth, 5);
    CHECK(chain.size() == 6);
    CHECK(chain.derivative(1) == kGrowth);
    CHECK(chain.derivative(2) == C("1/4") + C("1/2") * Y() * Y(1));
  }

  TEST_CASE("tenth derivative formula") {
    const auto chain = derivative_chain(kQuarter, 9);
    REQUIRE(chain.size() == 10);
    const FlowExpr expected = C("63") * Y(4) * Y(5) + C("42") * Y(3) * Y(6) + C("18") * Y(2) * Y(7) +
                              C("9/2") * Y(1) * Y(8) + C("1/2") * Y() * Y(9);
    CHECK(chain.derivative(10) == expected);
    for (std::size_t k = 1; k <= chain.size(); ++k) {
      CHECK(chain.derivative(k).order() <= k - 1);
    }
  }

  TEST_CASE("degree zero chain and invalid right-hand sides") {
    const auto chain = derivative_chain(kQuarter, 0);
    CHECK(chain.size() == 1);
    CHECK(chain.derivative(1) == kQuarter);
    CHECK_THROWS_AS(derivative_chain(Y(1), 3), std::invalid_argument);
  }

  TEST_CASE("linearity and Leibniz rule on 10^3 random expressions") {
    Gen g(424242);
    for (int i = 0; i < 1000; ++i) {
      const unsigned slots = static_cast<unsigned>(g.integer(1, 4));
      const FlowExpr a = g.flow_expr(slots), b = g.flow_expr(slots);
      const Rational c = g.rational(9, 5);
      REQUIRE(flow_derivative(c * a + b) == c * flow_derivative(a) + flow_derivative(b));
      REQUIRE(flow_derivative(a * b) == flow_derivative(a) * b + a * flow_derivative(b));
    }
  }
}

TEST_SUITE("taylor coefficients") {
  // Exact values; the printed table in the source write-up has errors from
  // order 6 on, so these are checked against the independent recurrence.
  const std::vector<Rational> kQuarterDerivs =
      rationals({"-1", "1/4", "-1/8", "67/32", "-35/32", "207/128", "-717/256", "26171/1024", "-29403/512",
                 "358227/2048", "-2323647/4096"});
  const std::vector<Rational> kQuarterCoeffs =
      rationals({"-1", "1/4", "-1/16", "67/192", "-35/768", "69/5120", "-239/61440", "26171/5160960",
                 "-3267/2293760", "39803/82575360", "-28687/183500800"});

  TEST_CASE("quarter Riccati problem to degree 10") {
    CHECK(taylor_coefficients(kQuarter, Rational(0), Rational(-1), 10) == kQuarterCoeffs);
    const auto chain = derivative_chain(kQuarter, 9);
    CHECK(initial_derivatives(chain, Rational(0), Rational(-1)) == kQuarterDerivs);
    CHECK(picard_coefficients(kQuarter, Rational(0), Rational(-1), 10) == kQuarterCoeffs);
  }

  TEST_CASE("orders one to five agree with the hand computation") {
    const auto d = initial_derivatives(derivative_chain(kQuarter, 4), Rational(0), Rational(-1));
    CHECK(d[1] == q("1/4"));
    CHECK(d[2] == q("-1/8"));
    CHECK(d[3] == q("67/32"));
    CHECK(d[4] == q("-35/32"));
    CHECK(d[5] == q("207/128"));
  }

  TEST_CASE("growth problem") {
    CHECK(taylor_coefficients(kGrowth, Rational(0), Rational(1), 5) ==
          rationals({"1", "1/4", "3/16", "7/192", "1/96", "19/5120"}));
  }

  TEST_CASE("degree zero") { CHECK(taylor_coefficients(kQuarter, Rational(0), q("-1"), 0) == rationals({"-1"})); }

  TEST_CASE("non-zero expansion point") {
    const Rational x0 = q("1/3"), y0 = q("2/7");
    CHECK(taylor_coefficients(kQuarter, x0, y0, 7) == picard_coefficients(kQuarter, x0, y0, 7));
  }

  TEST_CASE("series consistency for 20 random polynomial IVPs") {
    Gen g(2718);
    for (int i = 0; i < 20; ++i) {
      FlowExpr f;
      do f = g.flow_expr(2, 4, 2); while (f.is_zero());
      const Rational x0 = g.rational(3, 4), y0 = g.rational(3, 4);
      const unsigned n = static_cast<unsigned>(g.integer(1, 8));
      CAPTURE(f.to_string());
      const Polynomial p(taylor_coefficients(f, x0, y0, n));
      const Polynomial residual = p.derivative() - compose(f, x0, p);
      for (unsigned k = 0; k < n; ++k) REQUIRE(residual.coefficient(k).is_zero());
    }
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("basic algebra") {
    const Polynomial p = parse_polynomial("1 + x/4 + 3/16*x^2");
    CHECK(p.degree() == 2);
    CHECK(p(q("2")) == q("9/4"));
    CHECK(p.derivative() == Polynomial({q("1/4"), q("3/8")}));
    CHECK((p - p).degree() == -1);
    CHECK((p - p).coefficients().empty());
    CHECK(p.shifted(Rational(1))(Rational(0)) == p(Rational(1)));
    CHECK(p.eval_interval(RatInterval(Rational(0), Rational(1))).contains(p(q("1/2"))));
    CHECK_THROWS_AS(parse_polynomial("x*y"), InputError);
  }

  TEST_CASE("shift agrees with evaluation") {
    Gen g(8);
    for (int i = 0; i < 100; ++i) {
      std::vector<Rational> c;
      for (int k = 0; k < 6; ++k) c.push_back(g.rational());
      const Polynomial p(c);
      const Rational center = g.rational(), t = g.rational();
      CHECK(p.shifted(center)(t) == p(t + center));
    }
  }
}
