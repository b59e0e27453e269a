#include "cli.hpp"

#include "problem_file.hpp"
#include "report.hpp"
#include "taylorcert/errors.hpp"
#include "taylorcert/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

namespace tcert {

namespace {

struct CommonOptions {
  std::string problem_path;
  std::string json_path;
  std::string rounding;
  std::string width;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("problem", opts.problem_path, "Problem file")->required();
  cmd->add_option("--json", opts.json_path, "Write the machine-readable result to this path");
  cmd->add_option("--rounding", opts.rounding, "Override rounding: exact | outward:<d>");
  cmd->add_option("--width", opts.width, "Override the enclosure width (rational)");
}

ParsedProblem load_with_overrides(const CommonOptions& opts) {
  ParsedProblem parsed = load_problem(opts.problem_path);
  if (!opts.rounding.empty()) {
    try {
      parsed.spec.rounding = DecimalRounding::parse(opts.rounding);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--rounding: ") + e.what());
    }
  }
  if (!opts.width.empty()) {
    try {
      parsed.spec.enclosure_width = Rational::parse(opts.width);
    } catch (const std::exception&) {
      throw InputError("--width: expected a rational, got '" + opts.width + "'");
    }
    parsed.spec.validate();
  }
  return parsed;
}

void write_json(const std::string& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

void print_warnings(std::ostream& err, const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) err << "warning: " << w << "\n";
}

int cmd_coeffs(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const ParsedProblem parsed = load_with_overrides(opts);
  const ProblemSpec& p = parsed.spec;
  print_warnings(err, parsed.warnings);
  DerivativeChain chain;
  try {
    chain = derivative_chain(p.f, p.degree);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("f: ") + e.what());
  }
  const auto values = initial_derivatives(chain, p.x0, p.y0);
  std::vector<Rational> coeffs;
  for (std::size_t k = 0; k < values.size(); ++k) coeffs.push_back(values[k] / factorial(static_cast<unsigned>(k)));

  out << "Derivatives at x0 = " << p.x0 << " and Taylor coefficients c_k = y^(k)(x0)/k!\n";
  for (std::size_t k = 0; k < values.size(); ++k) {
    out << "  k=" << std::setw(2) << k << "  y^(k) = " << std::setw(22) << values[k].raw().get_str()
        << "  c_k = " << coeffs[k] << "\n";
  }
  out << "Derivative formulas\n";
  for (std::size_t k = 1; k <= chain.size(); ++k) {
    out << "  " << Symbol::y(static_cast<unsigned>(k)).name() << " = " << chain.derivative(k).to_string() << "\n";
  }

  Json j{{"problem", problem_json(p)}, {"derivatives_at_x0", Json::array()}, {"coefficients", Json::array()}};
  for (const auto& v : values) j["derivatives_at_x0"].push_back(rational_json(v));
  for (const auto& c : coeffs) j["coefficients"].push_back(rational_json(c));
  write_json(opts.json_path, j);
  return kExitOk;
}

int cmd_radius(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const ParsedProblem parsed = load_with_overrides(opts);
  const ProblemSpec& p = parsed.spec;
  print_warnings(err, parsed.warnings);
  const Rational m = magnitude_bound(p.f, p.x0, p.y0, p.r1, p.r2);
  if (m.is_zero()) throw CertificationError("radius", "f vanishes on the box; the majorant bound does not apply");
  const RadiusCertificate r = convergence_radius(p.r1, p.r2, m, p.enclosure_width);
  out << "r ≥ " << r.r_floor.to_decimal(static_cast<unsigned>(r.r_floor.decimal_places()), Rational::Round::Floor) << " (enclosure " << decimal_interval(r.r_enclosure, 12) << ")\n"
      << "  r1 = " << r.r1 << ", r2 = " << r.r2 << ", M = " << r.magnitude << "\n";
  write_json(opts.json_path, Json{{"problem", problem_json(p)}, {"radius", radius_json(r)}});
  return kExitOk;
}

SolutionRange run_range(const ProblemSpec& p, QuadraticComparison& qc) {
  qc = extract_comparison(p.f, p.x0, p.x1, p.y0);
  SolutionRange sr = solution_range(p.f, qc, p.enclosure_width);
  if (!sr.valid) throw CertificationError("range", sr.diagnostics);
  return sr;
}

int cmd_range(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const ParsedProblem parsed = load_with_overrides(opts);
  const ProblemSpec& p = parsed.spec;
  print_warnings(err, parsed.warnings);
  QuadraticComparison qc;
  const SolutionRange sr = run_range(p, qc);
  const RatInterval rounded = p.rounding.apply(sr.range);
  out << "y' <= " << qc.alpha << " + " << qc.beta << "*y^2 on [" << p.x0 << ", " << p.x1 << "]\n"
      << "U in " << decimal_interval(sr.upper_enclosure, 12) << "\n"
      << "y(x) in " << decimal_interval(sr.range, 12) << "\n";
  if (!p.rounding.is_exact()) out << "reported " << decimal_interval(rounded, p.rounding.decimals()) << "\n";
  write_json(opts.json_path, Json{{"problem", problem_json(p)},
                                  {"alpha", rational_json(qc.alpha)},
                                  {"beta", rational_json(qc.beta)},
                                  {"upper_enclosure", interval_json(sr.upper_enclosure)},
                                  {"tight", interval_json(sr.range)},
                                  {"rounded", interval_json(rounded)}});
  return kExitOk;
}

int cmd_bounds(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const ParsedProblem parsed = load_with_overrides(opts);
  const ProblemSpec& p = parsed.spec;
  print_warnings(err, parsed.warnings);
  QuadraticComparison qc;
  const SolutionRange sr = run_range(p, qc);
  const RatInterval yrange = p.rounding.apply(sr.range);
  const auto chain = derivative_chain(p.f, p.degree);
  const auto bounds = bound_derivatives(chain, RatInterval(p.x0, p.x1), yrange, p.rounding);
  const unsigned digits = p.rounding.is_exact() ? 8 : p.rounding.decimals();
  out << "y in " << decimal_interval(yrange, digits) << "\n";
  Json arr = Json::array();
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    out << std::setw(8) << Symbol::y(static_cast<unsigned>(k + 1)).name() << " in " << decimal_interval(bounds[k].used, digits);
    if (!p.rounding.is_exact()) out << "   (tight " << decimal_interval(bounds[k].tight, 8) << ")";
    out << "\n";
    arr.push_back(Json{{"order", k + 1}, {"tight", interval_json(bounds[k].tight)}, {"used", interval_json(bounds[k].used)}});
  }
  write_json(opts.json_path, Json{{"problem", problem_json(p)}, {"yrange", interval_json(yrange)}, {"derivative_bounds", arr}});
  return kExitOk;
}

int cmd_certify(const CommonOptions& opts, bool sanity, std::ostream& out, std::ostream& err) {
  const ParsedProblem parsed = load_with_overrides(opts);
  const Certificate cert = certify_partial_sum(parsed.spec);
  const ReportDocument doc = make_report(parsed.spec, cert, parsed.warnings, sanity);
  print_warnings(err, doc.warnings);
  out << render_text(doc);
  write_json(opts.json_path, to_json(doc));
  return kExitOk;
}

int cmd_check_poly(const CommonOptions& opts, const std::string& poly_path, std::ostream& out, std::ostream& err) {
  const ParsedProblem parsed = load_with_overrides(opts);
  print_warnings(err, parsed.warnings);
  const Polynomial q = load_polynomial(poly_path);
  const PolynomialCheck check = certify_polynomial(parsed.spec, q);
  const auto sci = [](const Rational& r) { return format_significant(to_high(r), 6); };
  out << "q(x) = " << q.to_string() << "\n"
      << "on [" << parsed.spec.x0 << ", " << parsed.spec.x1 << "]: sup |q - y| <= " << sci(check.bound) << "\n"
      << "  degree-" << parsed.spec.degree << " remainder   <= " << sci(check.remainder_bound) << "\n"
      << "  |q - partial sum|    <= " << sci(check.difference_bound) << "\n"
      << "merging the remainder into the x^" << (parsed.spec.degree + 1) << " term: sup |q - y| <= "
      << sci(check.combined_bound) << "\n";
  write_json(opts.json_path, Json{{"problem", problem_json(parsed.spec)},
                                  {"polynomial", q.to_string()},
                                  {"bound", rational_json(check.bound)},
                                  {"remainder_bound", rational_json(check.remainder_bound)},
                                  {"difference_bound", rational_json(check.difference_bound)},
                                  {"combined_bound", rational_json(check.combined_bound)}});
  return kExitOk;
}

bool is_quarter_riccati(const ProblemSpec& p) {
  return p.f == parse_flow_expr("x^2 + 1/4*y^2") && p.x0.is_zero() && p.y0 == Rational(-1);
}

int cmd_oracle(const CommonOptions& opts, const std::string& at, const std::string& method, const std::string& tol,
               std::ostream& out, std::ostream& err) {
  const ParsedProblem parsed = load_with_overrides(opts);
  const ProblemSpec& p = parsed.spec;
  print_warnings(err, parsed.warnings);
  Rational x;
  try {
    x = Rational::parse(at);
  } catch (const std::exception&) {
    throw InputError("--at: expected a rational, got '" + at + "'");
  }
  ReferenceValue v;
  if (method == "bessel") {
    if (!is_quarter_riccati(p)) throw InputError("--method bessel only applies to y' = x^2 + y^2/4, y(0) = -1");
    v = x.is_zero() ? ReferenceValue{HighFloat(-1), HighFloat(0), ReferenceValue::Method::Bessel} : riccati_exact(x);
  } else {
    if (x < p.x0) throw InputError("--at: must not lie left of x0");
    HighFloat tolerance;
    try {
      tolerance = HighFloat(tol);
    } catch (const std::exception&) {
      throw InputError("--tol: expected a decimal, got '" + tol + "'");
    }
    v = reference_solution(p.f, p.x0, p.y0, x, tolerance);
  }
  out << "y(" << x << ") = " << format_significant(v.value) << " +- " << format_significant(v.error_estimate, 3)
      << " (" << (v.method == ReferenceValue::Method::Bessel ? "bessel" : "integrator") << ")\n";
  write_json(opts.json_path, Json{{"x", rational_json(x)},
                                  {"value", format_significant(v.value)},
                                  {"error_estimate", format_significant(v.error_estimate, 3)},
                                  {"method", method}});
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Taylor partial sums and a priori error certificates for polynomial ODE IVPs"};
  app.require_subcommand(1);

  CommonOptions opts;
  bool no_sanity = false;
  std::string poly_path, at, method = "integrator", tol = "1e-20";

  auto* coeffs = app.add_subcommand("coeffs", "Exact derivatives and Taylor coefficients at x0");
  add_common(coeffs, opts);
  auto* radius = app.add_subcommand("radius", "Guaranteed convergence radius from Cauchy's majorant");
  add_common(radius, opts);
  auto* range = app.add_subcommand("range", "Rigorous solution range on [x0, x1]");
  add_common(range, opts);
  auto* bounds = app.add_subcommand("bounds", "Interval bounds on y', y'', ... over [x0, x1]");
  add_common(bounds, opts);
  auto* certify = app.add_subcommand("certify", "Full certificate for the degree-n partial sum");
  add_common(certify, opts);
  certify->add_flag("--no-sanity", no_sanity, "Skip the non-rigorous reference-integrator check");
  auto* check_poly = app.add_subcommand("check-poly", "Certify an arbitrary polynomial against the solution");
  add_common(check_poly, opts);
  check_poly->add_option("--poly", poly_path, "Polynomial file (expression in x)")->required();
  auto* oracle = app.add_subcommand("oracle", "Non-rigorous high-precision reference value");
  add_common(oracle, opts);
  oracle->add_option("--at", at, "Abscissa")->required();
  oracle->add_option("--method", method, "integrator | bessel")->check(CLI::IsMember({"integrator", "bessel"}));
  oracle->add_option("--tol", tol, "Step-halving tolerance for the integrator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (coeffs->parsed()) return cmd_coeffs(opts, out, err);
    if (radius->parsed()) return cmd_radius(opts, out, err);
    if (range->parsed()) return cmd_range(opts, out, err);
    if (bounds->parsed()) return cmd_bounds(opts, out, err);
    if (certify->parsed()) return cmd_certify(opts, !no_sanity, out, err);
    if (check_poly->parsed()) return cmd_check_poly(opts, poly_path, out, err);
    if (oracle->parsed()) return cmd_oracle(opts, at, method, tol, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CertificationError& e) {
    err << "certification failed: " << e.what() << "\n";
    return kExitCertification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace tcert
