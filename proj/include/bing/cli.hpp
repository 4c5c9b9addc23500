#pragma once

#include "bing/json_io.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace bing::cli {

// Exit codes: 0 success/decided, 2 usage or malformed input, 3 inconclusive
// verdict, 4 numerical-check failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses "abelian:2,4", "catalog:A5" or "unknown".
GroupSpec group_spec_from_string(const std::string& text);

// Structural validation of a report against the shipped schema (the subset
// of JSON Schema used by data/report.schema.json: type, required,
// properties, items, enum, $defs keyed by command).
bool validate_report(const json& report, const json& schema,
                     std::vector<std::string>& errors);

}  // namespace bing::cli
