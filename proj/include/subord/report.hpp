#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "subord/hunter.hpp"
#include "subord/verify.hpp"

namespace subord {

using Json = nlohmann::ordered_json;

// {"family", "n", "b" | "mu", "coeffs": [[re, im], ...], "order"}; coeffs start
// at the family's lowest exponent (z for A, 1/z for Sigma, 1 for H).
Json member_to_json(const ClassSpec& spec, const LaurentSeries& member);
// Throws ParseError on malformed input and SignViolation on a bad fixed coefficient.
LaurentSeries member_from_json(const Json& j, ClassSpec* spec = nullptr);

Json params_to_json(const ParameterSet& p);
Json witness_to_json(const Witness& w);
Json report_to_json(const VerificationReport& r);
Json hunt_to_json(const HuntSpec& spec, const ParameterSet& params, const HuntResult& r);

// Header of the summary CSV, then one row per report.
std::string csv_header();
std::string csv_row(const VerificationReport& r);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace subord
