#include "report.hpp"

#include "taylorcert/errors.hpp"
#include "taylorcert/oracle.hpp"

#include <sstream>

namespace tcert {

namespace {

Rational parse_rational(const Json& j) { return Rational::parse(j.get<std::string>()); }

RatInterval parse_interval(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("expected an interval [\"lo\", \"hi\"]");
  return {parse_rational(j[0]), parse_rational(j[1])};
}

std::vector<Rational> parse_rationals(const Json& j) {
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(parse_rational(v));
  return out;
}

Json rationals_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(rational_json(v));
  return arr;
}

std::string sci(const Rational& r) { return format_significant(to_high(r), 6); }

std::vector<std::string> parity_notes_for(const ProblemSpec& p, const Certificate& c) {
  std::vector<std::string> notes;
  notes.push_back(
      "Derivative bounds use monomial-wise interval evaluation: every summand is bounded at its own worst case, "
      "so a symbol shared between summands is not correlated.");
  if (!p.rounding.is_exact()) {
    notes.push_back("Each derivative bound is rounded outward to " + std::to_string(p.rounding.decimals()) +
                    " decimals before it feeds the next order; the tight interval is listed next to it.");
  }
  if (const auto lin = linearized_upper_bound(c.comparison, p.enclosure_width)) {
    const Rational gap = c.yrange.upper_enclosure.hi() - lin->lo();
    std::ostringstream os;
    os << "Replacing tan(theta) by theta in the comparison denominator gives U ~ "
       << lin->midpoint().to_decimal(10) << "; the rigorous bound U <= " << c.yrange.upper_enclosure.hi().to_decimal(10, Rational::Round::Ceil)
       << (gap.sign() > 0 ? " lies above it by " + sci(gap) : " does not exceed it")
       << ", so the linearized form is not used.";
    notes.push_back(os.str());
  }
  return notes;
}

}  // namespace

Json rational_json(const Rational& r) { return r.to_fraction_string(); }

Json interval_json(const RatInterval& iv) { return Json::array({rational_json(iv.lo()), rational_json(iv.hi())}); }

Json problem_json(const ProblemSpec& p) {
  return Json{{"f", p.f.to_string()},
              {"x0", rational_json(p.x0)},
              {"y0", rational_json(p.y0)},
              {"degree", p.degree},
              {"x1", rational_json(p.x1)},
              {"r1", rational_json(p.r1)},
              {"r2", rational_json(p.r2)},
              {"rounding", p.rounding.to_string()},
              {"width", rational_json(p.enclosure_width)}};
}

Json radius_json(const RadiusCertificate& r) {
  return Json{{"r1", rational_json(r.r1)},
              {"r2", rational_json(r.r2)},
              {"M", rational_json(r.magnitude)},
              {"r_enclosure", interval_json(r.r_enclosure)},
              {"r_floor", rational_json(r.r_floor)}};
}

ReportDocument make_report(const ProblemSpec& problem, const Certificate& certificate,
                           std::vector<std::string> input_warnings, bool with_sanity) {
  ReportDocument doc{problem, certificate, std::move(input_warnings), {}, std::nullopt};
  for (const auto& w : certificate.warnings) doc.warnings.push_back(w);
  doc.parity_notes = parity_notes_for(problem, certificate);
  if (with_sanity) {
    const ReferenceValue ref = reference_solution(problem.f, problem.x0, problem.y0, problem.x1);
    const HighFloat p = to_high(certificate.partial_sum()(problem.x1 - problem.x0));
    doc.sanity = SanityCheck{format_significant(ref.value), format_significant(p),
                             format_significant(HighFloat(abs(ref.value - p)), 6)};
  }
  return doc;
}

Json to_json(const ReportDocument& doc) {
  const Certificate& c = doc.certificate;
  Json bounds = Json::array();
  for (std::size_t k = 0; k < c.derivative_bounds.size(); ++k) {
    bounds.push_back(Json{{"order", k + 1},
                          {"tight", interval_json(c.derivative_bounds[k].tight)},
                          {"used", interval_json(c.derivative_bounds[k].used)}});
  }
  Json cert{
      {"coefficients", rationals_json(c.coefficients)},
      {"derivatives_at_x0", rationals_json(c.initial_values)},
      {"radius", radius_json(c.radius)},
      {"comparison",
       Json{{"alpha", rational_json(c.comparison.alpha)},
            {"beta", rational_json(c.comparison.beta)},
            {"x0", rational_json(c.comparison.x0)},
            {"x1", rational_json(c.comparison.x1)},
            {"y0", rational_json(c.comparison.y0)}}},
      {"solution_range",
       Json{{"valid", c.yrange.valid},
            {"tight", interval_json(c.yrange.range)},
            {"rounded", interval_json(c.yrange_rounded)},
            {"upper_enclosure", interval_json(c.yrange.upper_enclosure)},
            {"diagnostics", c.yrange.diagnostics}}},
      {"derivative_bounds", bounds},
      {"remainder", Json{{"bound", rational_json(c.remainder.bound)}, {"signed", interval_json(c.remainder.signed_range)}}},
      {"centralization",
       Json{{"coefficient", rational_json(c.centralization.coefficient)},
            {"halfwidth_scale", rational_json(c.centralization.halfwidth_scale)},
            {"halfwidth", rational_json(c.centralized_halfwidth)}}},
      {"warnings", c.warnings},
  };
  Json j{{"problem", problem_json(doc.problem)}, {"certificate", cert}, {"warnings", doc.warnings},
         {"parity_notes", doc.parity_notes}};
  if (doc.sanity) {
    j["sanity"] = Json{{"reference_y_x1", doc.sanity->reference_value},
                       {"partial_sum_x1", doc.sanity->partial_sum_value},
                       {"observed_error", doc.sanity->observed_error}};
  }
  return j;
}

ReportDocument report_from_json(const Json& j) {
  try {
    ReportDocument doc;
    const Json& pj = j.at("problem");
    ProblemSpec& p = doc.problem;
    p.f = parse_flow_expr(pj.at("f").get<std::string>());
    p.x0 = parse_rational(pj.at("x0"));
    p.y0 = parse_rational(pj.at("y0"));
    p.degree = pj.at("degree").get<unsigned>();
    p.x1 = parse_rational(pj.at("x1"));
    p.r1 = parse_rational(pj.at("r1"));
    p.r2 = parse_rational(pj.at("r2"));
    p.rounding = DecimalRounding::parse(pj.at("rounding").get<std::string>());
    p.enclosure_width = parse_rational(pj.at("width"));

    const Json& cj = j.at("certificate");
    Certificate& c = doc.certificate;
    c.coefficients = parse_rationals(cj.at("coefficients"));
    c.initial_values = parse_rationals(cj.at("derivatives_at_x0"));
    const Json& rj = cj.at("radius");
    c.radius = {parse_rational(rj.at("r1")), parse_rational(rj.at("r2")), parse_rational(rj.at("M")),
                parse_interval(rj.at("r_enclosure")), parse_rational(rj.at("r_floor"))};
    const Json& qj = cj.at("comparison");
    c.comparison = {parse_rational(qj.at("alpha")), parse_rational(qj.at("beta")), parse_rational(qj.at("x0")),
                    parse_rational(qj.at("x1")), parse_rational(qj.at("y0"))};
    const Json& sj = cj.at("solution_range");
    c.yrange.valid = sj.at("valid").get<bool>();
    c.yrange.range = parse_interval(sj.at("tight"));
    c.yrange.upper_enclosure = parse_interval(sj.at("upper_enclosure"));
    c.yrange.diagnostics = sj.at("diagnostics").get<std::string>();
    c.yrange_rounded = parse_interval(sj.at("rounded"));
    for (const auto& b : cj.at("derivative_bounds")) {
      c.derivative_bounds.push_back({parse_interval(b.at("tight")), parse_interval(b.at("used"))});
    }
    c.remainder = {parse_rational(cj.at("remainder").at("bound")), parse_interval(cj.at("remainder").at("signed"))};
    const Json& zj = cj.at("centralization");
    c.centralization = {parse_rational(zj.at("coefficient")), parse_rational(zj.at("halfwidth_scale"))};
    c.centralized_halfwidth = parse_rational(zj.at("halfwidth"));
    c.warnings = cj.at("warnings").get<std::vector<std::string>>();

    doc.warnings = j.at("warnings").get<std::vector<std::string>>();
    doc.parity_notes = j.at("parity_notes").get<std::vector<std::string>>();
    if (j.contains("sanity")) {
      const Json& s = j.at("sanity");
      doc.sanity = SanityCheck{s.at("reference_y_x1").get<std::string>(), s.at("partial_sum_x1").get<std::string>(),
                               s.at("observed_error").get<std::string>()};
    }
    return doc;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  } catch (const ExprSyntaxError& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string decimal_interval(const RatInterval& iv, unsigned digits) {
  return "[" + iv.lo().to_decimal(digits, Rational::Round::Floor) + ", " +
         iv.hi().to_decimal(digits, Rational::Round::Ceil) + "]";
}

// Short rationals are shown verbatim; long ones are left to the machine format.
static std::string exact_note(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str().size() <= 40 ? "  (exact " + os.str() + ")" : "  (exact value in the JSON report)";
}

std::string render_text(const ReportDocument& doc) {
  const ProblemSpec& p = doc.problem;
  const Certificate& c = doc.certificate;
  const unsigned n = p.degree;
  std::ostringstream os;

  os << "Problem\n"
     << "  y' = " << p.f.to_string() << ",  y(" << p.x0 << ") = " << p.y0 << "\n"
     << "  interval I = [" << p.x0 << ", " << p.x1 << "], partial sum degree " << n << ", rounding "
     << p.rounding.to_string() << "\n\n";

  os << "Taylor coefficients about x0 (powers of x - x0)\n";
  for (std::size_t k = 0; k < c.coefficients.size(); ++k) {
    os << "  c" << k << " = " << c.coefficients[k] << "\n";
  }
  os << "\n";

  const auto& r = c.radius;
  os << "Convergence radius (Cauchy majorant, r1 = " << r.r1 << ", r2 = " << r.r2 << ", M = " << r.magnitude << ")\n"
     << "  r >= " << r.r_floor.to_decimal(static_cast<unsigned>(r.r_floor.decimal_places()), Rational::Round::Floor) << "  (enclosure " << decimal_interval(r.r_enclosure, 12) << ")\n\n";

  os << "Solution range on I (comparison with y' <= " << c.comparison.alpha << " + " << c.comparison.beta
     << "*y^2)\n"
     << "  U in " << decimal_interval(c.yrange.upper_enclosure, 12) << "\n"
     << "  y(x) in " << decimal_interval(c.yrange.range, 12);
  if (!p.rounding.is_exact()) os << "  reported as " << decimal_interval(c.yrange_rounded, p.rounding.decimals());
  os << "\n\n";

  os << "Derivative bounds on I\n";
  for (std::size_t k = 0; k < c.derivative_bounds.size(); ++k) {
    const auto& b = c.derivative_bounds[k];
    os << "  order " << (k + 1) << ": " << decimal_interval(b.tight, 8);
    if (!p.rounding.is_exact()) os << "  -> " << decimal_interval(b.used, p.rounding.decimals());
    os << "\n";
  }
  os << "\n";

  os << "Lagrange remainder of the degree-" << n << " partial sum on I\n"
     << "  |R_" << n << "(x)| <= " << sci(c.remainder.bound) << exact_note(c.remainder.bound) << "\n"
     << "  signed range " << "[" << sci(c.remainder.signed_range.lo()) << ", " << sci(c.remainder.signed_range.hi())
     << "]\n\n";

  os << "Centralized error\n"
     << "  add " << sci(c.centralization.coefficient) << " * (x - x0)^" << (n + 1)
     << exact_note(c.centralization.coefficient) << "\n"
     << "  remaining error <= " << sci(c.centralized_halfwidth) << "\n";

  if (doc.sanity) {
    os << "\nSanity check (non-rigorous reference integrator at x1)\n"
       << "  y(x1) ~ " << doc.sanity->reference_value << "\n"
       << "  partial sum ~ " << doc.sanity->partial_sum_value << "\n"
       << "  observed error ~ " << doc.sanity->observed_error << "\n";
  }
  if (!doc.warnings.empty()) {
    os << "\nWarnings\n";
    for (const auto& w : doc.warnings) os << "  - " << w << "\n";
  }
  if (!doc.parity_notes.empty()) {
    os << "\nNotes\n";
    for (const auto& note : doc.parity_notes) os << "  - " << note << "\n";
  }
  return os.str();
}

}  // namespace tcert
