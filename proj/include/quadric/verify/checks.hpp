#pragma once

// The registered checks. Each check is a pure function of a CheckContext and
// returns one CheckReport; randomness comes only from the context seed.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quadric/field/linalg.hpp"
#include "quadric/surface/tube.hpp"
#include "quadric/verify/report.hpp"

namespace quadric::verify {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr int kDefaultTrials = 50;
/// Lower bound asserted by the non-vanishing probes.
inline constexpr double kNonvanishingThreshold = 1e-6;

/// How a check is instantiated over the configuration grid.
enum class ParamKind {
  Tube,    ///< once per tube parameter (u, or r in float mode)
  Seeded,  ///< once per seed
};

struct CheckContext {
  int m = 3;
  Mode mode = Mode::Float;
  std::optional<surface::TubeSpec> tube;
  std::uint64_t seed = 42;
  int trials = kDefaultTrials;
  double tolerance = kDefaultTolerance;
  mpq_class lambda_shift = 0;  ///< tube corruption for negative testing
  std::vector<double> alphas;  ///< α values for the isotropic probes; empty = defaults
};

struct CheckDef {
  std::string name;
  std::string anchor;
  ParamKind kind;
  bool exact;     ///< runs in exact mode
  bool floating;  ///< runs in float mode
  std::function<CheckReport(const CheckContext&)> run;
};

/// All checks in registration order.
const std::vector<CheckDef>& registry();

/// Anchors that the suite must cover; each needs at least one registered check.
const std::vector<std::string>& required_anchors();

/// ‖PQ − QP‖_F in float mode, its square in exact mode.
template <FieldScalar T>
Scalar check_commutator(const Matrix<T>& p, const Matrix<T>& q) {
  return frobenius_residual(commutator(p, q));
}

}  // namespace quadric::verify
