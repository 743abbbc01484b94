#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadric/field/error.hpp"
#include "quadric/verify/suite.hpp"

namespace quadric::cli {

enum class Format { Text, Json };

struct RunConfig {
  verify::SuiteConfig suite;
  std::string mode = "both";  ///< exact | float | both
  Format format = Format::Text;
  std::optional<std::string> out;
};

/// Bad flags or values; the front end maps it to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct ParseOutcome {
  std::optional<RunConfig> config;  ///< empty when the run should stop early
  int exit_code = 0;
  std::string output;  ///< help or error text
};

ParseOutcome parse_args(int argc, const char* const* argv);

/// Splits "a,b,c"; empty items are rejected.
std::vector<std::string> split_list(const std::string& text);

}  // namespace quadric::cli
