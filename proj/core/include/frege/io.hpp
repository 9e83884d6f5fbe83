#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "frege/apportionment.hpp"
#include "frege/axioms.hpp"
#include "frege/bias.hpp"
#include "frege/modified.hpp"
#include "frege/original.hpp"
#include "frege/profile.hpp"

namespace frege {

enum class OutputFormat { Text, Csv, Json };
std::optional<OutputFormat> output_format_from_name(std::string_view name);

/// Auto-detects the input: JSON object
///   {"candidates": ["a","b"], "rounds": [[5,3,2], ...], "repeat": true|false}
/// or CSV with one row of integer plurality scores per round (always a
/// varying profile; a one-round JSON profile with repeat=true is the fixed
/// electorate). Errors name the offending round and candidate.
Profile parse_profile(std::string_view bytes);

/// Canonical JSON for a profile; parse_profile(render_profile_json(p))
/// reproduces p exactly.
std::string render_profile_json(const Profile& profile);

/// Tables 1-2 layout: t, per-candidate scores with a '*' marker on the
/// argmax, winner, cost. Byte-stable for fixed inputs.
std::string render_trace(const OriginalTrace& trace, OutputFormat format);

/// Modified-method traces additionally carry every score as an exact
/// fraction, a decimal, and a denominator-scaled integer (the "multiplied by
/// 2750" presentation).
std::string render_trace(const ModifiedTrace& trace, OutputFormat format);

/// Smallest common multiple of all score denominators in the trace; for a
/// fixed electorate of n voters this divides n.
BigInt trace_scale(const ModifiedTrace& trace);

std::string render_quota_report(const QuotaReport& report,
                                const std::vector<std::string>& labels, OutputFormat format);

/// {"votes": [...], "seats": k, "method": "dhondt" | ... } — method optional
/// (absent means "compare all").
struct ApportionRequest {
  std::vector<BigInt> votes;
  std::int64_t seats = 0;
  std::optional<Method> method;
};
ApportionRequest parse_apportion_request(std::string_view bytes);

std::string render_solution(Method method, const Seats& seats, OutputFormat format);
std::string render_comparison(const std::vector<std::pair<Method, Seats>>& solutions,
                              OutputFormat format);

std::string render_axiom_report_json(const AxiomReport& report);
std::string render_axiom_table(const AxiomTable& table, OutputFormat format);

std::string render_bias_report(const BiasReport& report, OutputFormat format);

} // namespace frege
