#pragma once

#include <string>

#include <json.hpp>

namespace stm {

using Json = nlohmann::json;

// Schema and program stamps attached to every report.
Json report_versions();

// Assemble {command, config, checks, versions, timing}.  Timing lives only
// under the "timing" key so golden comparisons can ignore it.
Json make_report(const std::string& command, Json config, Json checks, double elapsed_ms);

// True iff every check record carries pass == true.
bool all_pass(const Json& report);

// Structural diff ignoring "timing" everywhere; returns a list of
// difference descriptions (empty = equal).
std::vector<std::string> golden_diff(const Json& report, const Json& golden);

Json load_json(const std::string& path);            // throws with a readable message
void write_json(const std::string& path, const Json& j);

} // namespace stm
