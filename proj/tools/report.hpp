#pragma once

#include "taylorcert/certify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tcert {

using Json = nlohmann::ordered_json;

/// Non-rigorous cross-check of the certificate at the right end of I.
struct SanityCheck {
  std::string reference_value;   // integrator y(x1), 20 significant digits
  std::string partial_sum_value; // partial sum at x1
  std::string observed_error;    // |reference - partial sum|
};

/// Everything `certify` reports. Rationals are serialized as "p/q" strings so
/// the machine format is lossless.
struct ReportDocument {
  ProblemSpec problem;
  Certificate certificate;
  std::vector<std::string> warnings;
  std::vector<std::string> parity_notes;
  std::optional<SanityCheck> sanity;
};

ReportDocument make_report(const ProblemSpec& problem, const Certificate& certificate,
                           std::vector<std::string> input_warnings, bool with_sanity = true);

Json rational_json(const Rational& r);
Json interval_json(const RatInterval& iv);
Json problem_json(const ProblemSpec& p);
Json radius_json(const RadiusCertificate& r);
Json to_json(const ReportDocument& doc);

/// Inverse of to_json; throws InputError on a malformed document.
ReportDocument report_from_json(const Json& j);

/// Human-readable rendering. Relaxed numbers appear next to their tight
/// enclosures.
std::string render_text(const ReportDocument& doc);

/// "[lo, hi]" with lo rounded down and hi rounded up to `digits` places.
std::string decimal_interval(const RatInterval& iv, unsigned digits);

}  // namespace tcert
