#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadric/field/scalar.hpp"

namespace quadric::verify {

enum class Status { Pass, Fail, Skipped, SetupError };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

/// Direction of the comparison against the tolerance. Most checks assert
/// that a residual vanishes (AtMost); non-vanishing probes assert a lower
/// bound on the smallest residual seen (Above).
enum class Bound { AtMost, Above };

std::string_view to_string(Bound b);
Bound bound_from_string(std::string_view s);

using Parameters = std::vector<std::pair<std::string, std::string>>;

struct CheckReport {
  std::string name;
  std::string anchor;
  Mode mode = Mode::Float;
  Scalar residual;         ///< float norm, or exact squared norm
  double tolerance = 0.0;  ///< unused in exact mode, where zero is required
  Bound bound = Bound::AtMost;
  Status status = Status::Pass;
  std::uint64_t seed = 0;
  Parameters parameters;
  std::int64_t elapsed_ns = 0;
  std::string message;

  bool passed() const { return status == Status::Pass; }
  /// Prefix of the name before the first '.'.
  std::string category() const;
  /// name[mode key=value ...], unique within a suite run.
  std::string label() const;
  /// Value of a parameter, or "" when absent.
  std::string parameter(std::string_view key) const;
};

/// Whether a residual meets its bound: exact AtMost needs an exact zero,
/// exact Above a nonzero value; float compares against tolerance.
bool residual_passes(const Scalar& residual, double tolerance, Bound bound);

struct CategoryCounts {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  int setup_errors = 0;
  friend bool operator==(const CategoryCounts&, const CategoryCounts&) = default;
};

struct SuiteSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  int setup_errors = 0;
  std::map<std::string, CategoryCounts> by_category;
  std::vector<std::string> failing;  ///< labels of Fail and SetupError reports
  friend bool operator==(const SuiteSummary&, const SuiteSummary&) = default;
};

SuiteSummary summarize(const std::vector<CheckReport>& reports);

struct SuiteResult {
  std::vector<CheckReport> reports;
  SuiteSummary summary;

  /// True when nothing failed or errored; skipped checks do not count.
  bool all_passed() const { return summary.failed == 0 && summary.setup_errors == 0; }
};

}  // namespace quadric::verify
