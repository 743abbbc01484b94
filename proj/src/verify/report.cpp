#include "quadric/verify/report.hpp"

#include "quadric/field/error.hpp"

namespace quadric::verify {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
    case Status::SetupError:
      return "setup_error";
  }
  return "?";
}

Status status_from_string(std::string_view s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "skipped") return Status::Skipped;
  if (s == "setup_error") return Status::SetupError;
  throw PreconditionError("unknown status '" + std::string(s) + "'");
}

std::string_view to_string(Bound b) { return b == Bound::AtMost ? "at_most" : "above"; }

Bound bound_from_string(std::string_view s) {
  if (s == "at_most") return Bound::AtMost;
  if (s == "above") return Bound::Above;
  throw PreconditionError("unknown bound '" + std::string(s) + "'");
}

std::string CheckReport::category() const { return name.substr(0, name.find('.')); }

std::string CheckReport::label() const {
  std::string out = name + "[" + std::string(quadric::to_string(mode));
  for (const auto& [k, v] : parameters) {
    if (k == "m" || k == "u" || k == "r" || k == "seed") out += " " + k + "=" + v;
  }
  return out + "]";
}

std::string CheckReport::parameter(std::string_view key) const {
  for (const auto& [k, v] : parameters) {
    if (k == key) return v;
  }
  return {};
}

bool residual_passes(const Scalar& residual, double tolerance, Bound bound) {
  if (residual.is_exact()) {
    return bound == Bound::AtMost ? residual.is_zero() : !residual.is_zero();
  }
  const double r = residual.as_float();
  return bound == Bound::AtMost ? r <= tolerance : r > tolerance;
}

SuiteSummary summarize(const std::vector<CheckReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    ++s.total;
    CategoryCounts& c = s.by_category[r.category()];
    switch (r.status) {
      case Status::Pass:
        ++s.passed;
        ++c.passed;
        break;
      case Status::Fail:
        ++s.failed;
        ++c.failed;
        s.failing.push_back(r.label());
        break;
      case Status::Skipped:
        ++s.skipped;
        ++c.skipped;
        break;
      case Status::SetupError:
        ++s.setup_errors;
        ++c.setup_errors;
        s.failing.push_back(r.label());
        break;
    }
  }
  return s;
}

}  // namespace quadric::verify
