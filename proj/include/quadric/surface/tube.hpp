#pragma once

// The type-B tube around a real form S^m ⊂ Q^m at one point, and the
// eigenstructure of shape operators restricted to TM.

#include <optional>
#include <string>
#include <vector>

#include "quadric/surface/hypersurface.hpp"

namespace quadric::surface {

/// Tube radius given either as r ∈ (0, π/(2√2)) (float only) or as
/// u = tan(√2 r) > 0, rational so that exact mode can use it.
class TubeSpec {
 public:
  static TubeSpec from_radius(int m, double r);
  static TubeSpec from_u(int m, mpq_class u);

  int m() const { return m_; }
  bool has_u() const { return u_.has_value(); }
  const mpq_class& u() const;  ///< PreconditionError when built from a radius
  double radius() const;       ///< r = atan(u)/√2 when built from u
  double u_value() const;      ///< tan(√2 r) when built from a radius
  std::string describe() const;  ///< "u=1/2" or "r=0.5"

 private:
  TubeSpec(int m, std::optional<mpq_class> u, std::optional<double> r)
      : m_(m), u_(std::move(u)), r_(r) {}
  int m_;
  std::optional<mpq_class> u_;
  std::optional<double> r_;
};

template <FieldScalar T>
struct TypeBTube {
  HypersurfacePoint<T> point;
  T alpha;   ///< −√2/u, the value on ℝξ
  T lambda;  ///< √2·u, the value on V(A)∩𝒞
  T mu;      ///< 0, the value on JV(A)∩𝒞
  std::vector<Vec<T>> t_alpha;   ///< {ξ}
  std::vector<Vec<T>> t_lambda;  ///< e_2..e_m
  std::vector<Vec<T>> t_mu;      ///< Je_2..Je_m

  /// ξ, then the T_λ basis, then the T_μ basis.
  std::vector<Vec<T>> eigenbasis() const;
};

/// N = e_1, A = A0, S = αξξᵀ + λ Σ_{i≥2} e_i e_iᵀ. `lambda_shift` is added to
/// the curvature on T_λ only (alpha/lambda/mu keep the nominal values); a
/// nonzero shift gives a deliberately inconsistent shape operator.
/// Exact mode requires a u-parameter; float mode accepts either.
template <FieldScalar T>
TypeBTube<T> build_type_B_tube(const TubeSpec& spec, const T& lambda_shift = T(0));

struct EigenCluster {
  Scalar value;
  int multiplicity = 0;
  std::vector<Vec<double>> basis;  ///< float path only; orthonormal
};

struct EigenStructure {
  std::vector<EigenCluster> clusters;  ///< ascending by value
  int total_multiplicity() const;
};

/// Raised when sorted eigenvalues chain into a cluster wider than the
/// clustering tolerance, so the grouping is not well defined.
class ClusteringAmbiguity : public Error {
 public:
  using Error::Error;
};

inline constexpr double kClusterTol = 1e-8;

/// Float path: S restricted to an orthonormal tangent basis, diagonalized by
/// sym_eigen, clustered with |Δ| ≤ kClusterTol·(1 + |λ|).
EigenStructure eigenstructure(const HypersurfacePoint<double>& h);

/// Orthonormal basis of TM = N^⊥ (2m − 1 vectors).
std::vector<Vec<double>> tangent_basis(const HypersurfacePoint<double>& h);

template <FieldScalar T>
struct ExpectedEigenvalue {
  T value;
  int multiplicity;
};

template <FieldScalar T>
struct EigenTableCheck {
  bool matches = false;
  std::vector<int> found;                  ///< dim ker(S − λI) ∩ TM per entry
  std::vector<std::vector<Vec<T>>> bases;  ///< null-space bases per entry
  std::string message;
};

/// Exact-capable verification of an expected table: each λ must have the
/// stated multiplicity on TM, values must be distinct and multiplicities must
/// sum to 2m − 1.
template <FieldScalar T>
EigenTableCheck<T> verify_eigen_table(const HypersurfacePoint<T>& h,
                                      const std::vector<ExpectedEigenvalue<T>>& expected);

}  // namespace quadric::surface
