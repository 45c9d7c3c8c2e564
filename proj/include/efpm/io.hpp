#pragma once

#include <string>

#include "json.hpp"

#include "efpm/generator.hpp"
#include "efpm/market.hpp"

// File formats. Instances are JSON {"budgets":[...],"qualities":[...]} or
// CSV with a required "budget,quality" header and one row per index.
// Outcomes are JSON {"assignment":[...],"prices":[...],"revenue":r,
// "surpluses":[...]}, assignment and prices in original indexing. Field
// order is fixed and floats print in shortest round-trip form, so equal
// values produce byte-identical files.

namespace efpm::io {

using ordered_json = nlohmann::ordered_json;

ordered_json instance_to_json(const Instance& inst);
Instance instance_from_json(const ordered_json& j);

std::string instance_to_csv(const Instance& inst);
Instance instance_from_csv(const std::string& text);

ordered_json outcome_to_json(const Outcome& out);
Outcome outcome_from_json(const ordered_json& j);

ordered_json audit_to_json(const AuditReport& report);

ordered_json genspec_to_json(const GenSpec& spec);
GenSpec genspec_from_json(const ordered_json& j);

// Fixed serialization used for all files: 2-space indent, trailing newline.
std::string dump(const ordered_json& j);
ordered_json parse(const std::string& text);  // throws Error(ParseError)

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Reads a JSON or CSV instance file; sniffs the format from the first
// non-whitespace byte.
Instance load_instance(const std::string& path);
Outcome load_outcome(const std::string& path);

}  // namespace efpm::io
