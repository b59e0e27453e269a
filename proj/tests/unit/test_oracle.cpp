#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taylorcert/oracle.hpp"
#include "taylorcert/taylor.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>
#include <vector>

using namespace tcert;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

const FlowExpr kQuarter = parse_flow_expr("x^2 + 1/4*y^2");
const FlowExpr kGrowth = parse_flow_expr("(x + y^2)/4");

// Frozen from an independent 45-digit Taylor-method integration.
const HighFloat kQuarterAt02("-0.949777124963433388702314810954447750899");
const HighFloat kGrowthAt04("1.132643110604808528154333868922977963990");

}  // namespace

TEST_CASE("formatting") {
  CHECK(format_significant(HighFloat("-0.94977712496343338870123")) == "-9.4977712496343338870e-01");
  CHECK(format_significant(HighFloat("1234.5"), 3) == "1.23e+03");
  CHECK(to_high(q("1/8")) == HighFloat("0.125"));
}

TEST_CASE("integrator at the right end of the worked intervals") {
  const ReferenceValue a = reference_solution(kQuarter, q("0"), q("-1"), q("1/5"));
  CHECK(a.method == ReferenceValue::Method::Integrator);
  CHECK(abs(a.value - kQuarterAt02) < HighFloat("1e-18"));
  CHECK(a.error_estimate >= 0);
  CHECK(a.error_estimate < HighFloat("1e-20"));
  const ReferenceValue b = reference_solution(kGrowth, q("0"), q("1"), q("2/5"));
  CHECK(abs(b.value - kGrowthAt04) < HighFloat("1e-18"));
}

TEST_CASE("x = x0 returns y0 exactly") {
  const ReferenceValue v = reference_solution(kQuarter, q("1/3"), q("2/7"), q("1/3"));
  CHECK(v.value == to_high(q("2/7")));
  CHECK(v.error_estimate == 0);
}

TEST_CASE("integrator preconditions") {
  CHECK_THROWS_AS(reference_solution(kQuarter, q("0"), q("-1"), q("-1/5")), std::invalid_argument);
  CHECK_THROWS_AS(reference_solution(FlowExpr::variable(Symbol::y(1)), q("0"), q("0"), q("1")), std::invalid_argument);
}

TEST_CASE("path values match pointwise values") {
  const std::vector<Rational> grid{q("0.05"), q("0.1"), q("0.15"), q("0.2")};
  const auto path = reference_path(kQuarter, q("0"), q("-1"), grid);
  REQUIRE(path.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const ReferenceValue v = reference_solution(kQuarter, q("0"), q("-1"), grid[i]);
    CHECK(abs(path[i].value - v.value) < HighFloat("1e-19"));
  }
}

TEST_CASE("fourth-order convergence under step halving") {
  const NumericFlow f(kQuarter);
  const HighFloat x0 = 0, y0 = -1, x = 1;
  for (unsigned n : {8u, 16u, 32u}) {
    const HighFloat a = rk4_integrate(f, x0, y0, x, n);
    const HighFloat b = rk4_integrate(f, x0, y0, x, 2 * n);
    const HighFloat c = rk4_integrate(f, x0, y0, x, 4 * n);
    const HighFloat order = log2(abs(a - b) / abs(b - c));
    CAPTURE(n);
    CHECK(order >= 3.8);
    CHECK(order <= 4.2);
  }
}

TEST_CASE("numeric derivatives reproduce the exact ones at x0") {
  const auto chain = derivative_chain(kQuarter, 9);
  const auto exact = initial_derivatives(chain, q("0"), q("-1"));
  const auto numeric = numeric_derivatives(chain, HighFloat(0), HighFloat(-1));
  REQUIRE(numeric.size() == exact.size());
  for (std::size_t k = 0; k < exact.size(); ++k) {
    CHECK(abs(numeric[k] - to_high(exact[k])) <= HighFloat("1e-30") * (1 + abs(numeric[k])));
  }
}

TEST_CASE("numeric flow evaluation") {
  const NumericFlow f(kQuarter);
  const std::vector<HighFloat> env{HighFloat("0.5"), HighFloat("-2")};
  CHECK(f(env) == HighFloat("1.25"));
  CHECK_THROWS_AS(f(std::vector<HighFloat>{HighFloat(0)}), std::out_of_range);
}

TEST_SUITE("Bessel closed form") {
  TEST_CASE("value at 0.2") {
    const ReferenceValue v = riccati_exact(q("1/5"));
    CHECK(v.method == ReferenceValue::Method::Bessel);
    CHECK(abs(v.value - kQuarterAt02) < HighFloat("1e-18"));
    CHECK(format_significant(v.value, 7) == "-9.497771e-01");
  }

  TEST_CASE("approaches the initial value near 0") {
    const ReferenceValue v = riccati_exact(q("1/1000000"));
    CHECK(abs(v.value + 1) < HighFloat("1e-6"));
  }

  TEST_CASE("agrees with the integrator to 1e-10 on the check grid") {
    for (const char* x : {"0.05", "0.1", "0.15", "0.2"}) {
      CAPTURE(x);
      const ReferenceValue b = riccati_exact(q(x));
      const ReferenceValue r = reference_solution(kQuarter, q("0"), q("-1"), q(x));
      CHECK(abs(b.value - r.value) < HighFloat("1e-10"));
      CHECK(abs(b.value - r.value) < HighFloat("1e-17"));
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(riccati_exact(q("0")), std::domain_error);
    CHECK_THROWS_AS(riccati_exact(q("1/5"), 3), std::runtime_error);
    CHECK_THROWS_AS(riccati_exact(q("1/5"), 1), std::runtime_error);
  }
}
