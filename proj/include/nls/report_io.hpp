#pragma once

#include <string>
#include <utility>

#include "json.hpp"
#include "nls/closure.hpp"
#include "nls/system_io.hpp"

namespace nls {

std::string verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& name);

// 64-bit FNV-1a of the compact canonical document, as fixed-width hex.
std::string input_hash(const SystemDocument& doc);

// Decision report rendered for files: verdict, optional rank and printed
// basis rows, optional witness with its full condition trace, the per-round
// operator counts, and the input document echoed back for reproducibility.
nlohmann::json report_to_json(const DecisionReport& rep,
                              const SystemDocument& doc);

// Inverse of report_to_json up to the fields the schema carries (closed
// generator lists are recomputable and are not serialized). Serializing the
// result again reproduces the input JSON exactly.
std::pair<DecisionReport, SystemDocument> report_from_json(
    const nlohmann::json& j);

}  // namespace nls
