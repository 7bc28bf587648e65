#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "bohrlab/functionals.hpp"
#include "bohrlab/harness.hpp"
#include "bohrlab/series.hpp"

namespace bohrlab::io {

using Json = nlohmann::json;

/// 17 significant digits, enough to round-trip a double.
std::string format_number(double x);

/// {m, p, coeffs: [[re, im], ...], bound, certificate}
Json series_to_json(const LacunarySeries& s);
LacunarySeries series_from_json(const Json& j);

/// Either the series object above or a generator
/// {"family": "mobius" | "mobius_minus" | "schur" | "constant", ...} with
/// optional m and p.
FunctionDescriptor descriptor_from_json(const Json& j);

Json space_to_json(const SpaceSpec& s);
SpaceSpec space_from_json(const Json& j);

/// {"form", "domain", "target", "u", "dir", "h", "omega", "v", "read"}
BanachInput banach_from_json(const Json& j);

using FunctionInput = std::variant<FunctionDescriptor, BanachInput>;

/// Parses a function file. Every failure surfaces as a Parse error.
FunctionInput parse_function_input(const std::string& text);
std::string describe(const FunctionInput& in);
/// Term sequence of the input at the truncation order suited to r.
CoefficientSeries input_terms(const FunctionInput& in, double r);
bool input_certified(const FunctionInput& in);

Json report_to_json(const EvaluationReport& rep);
/// kind,params,r,value,tail_error,margin,certified
std::string report_csv_header();
std::string report_csv_row(const FunctionalKind& kind, const EvaluationReport& rep);
/// Parameters as a semicolon list, e.g. "p=2;m=1".
std::string kind_params(const FunctionalKind& kind);

Json witness_to_json(const WitnessReport& w);
Json campaign_to_json(const CampaignSummary& s);

}  // namespace bohrlab::io
