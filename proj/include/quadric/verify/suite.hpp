#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadric/verify/checks.hpp"

namespace quadric::verify {

struct SuiteConfig {
  std::vector<int> m_values{3, 4, 5};
  bool exact = true;
  bool floating = true;
  std::vector<mpq_class> u_values{mpq_class(1, 2), mpq_class(1), mpq_class(2)};
  std::vector<double> r_values;  ///< float-mode tubes given by radius
  std::vector<std::uint64_t> seeds{42};
  int trials = kDefaultTrials;
  std::optional<double> tolerance;
  std::vector<std::string> filters;  ///< fnmatch globs on check names; empty = all
  mpq_class lambda_shift = 0;
  std::vector<double> alphas;
};

bool matches_filters(const std::string& name, const std::vector<std::string>& filters);

/// Runs every selected check over mode × m × (tube parameters or seeds), in
/// registration order. Exceptions thrown by a check become SetupError reports.
SuiteResult run_suite(const SuiteConfig& config);

/// Runs a single check; exceptions become a SetupError report.
CheckReport run_check(const CheckDef& def, const CheckContext& ctx);

}  // namespace quadric::verify
