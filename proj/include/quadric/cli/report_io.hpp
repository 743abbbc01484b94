#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "quadric/cli/config.hpp"

namespace quadric::cli {

inline constexpr const char* kReportVersion = "1";

/// Key order is preserved so parameters round-trip in order.
using Json = nlohmann::ordered_json;

std::string format_text(const verify::SuiteResult& result);

Json to_json(const verify::SuiteResult& result, const RunConfig& config);

/// Inverse of to_json for the reports and summary.
verify::SuiteResult from_json(const Json& doc);

/// Writes the report to config.out (or `console`) and returns the exit code:
/// 0 when every check passed, 1 on any failure, 2 if the output cannot be written.
int emit_report(const verify::SuiteResult& result, const RunConfig& config, std::ostream& console,
                std::ostream& errors);

}  // namespace quadric::cli
