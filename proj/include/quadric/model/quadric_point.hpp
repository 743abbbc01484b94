#pragma once

// Pointwise model of the tangent space of the complex quadric Q^m.
//
// Basis convention: the model space is R^{2m} with the dot product. Indices
// 0..m-1 are e_1..e_m, a basis of V(A0); indices m..2m-1 are Je_1..Je_m.
// Hence J(x; y) = (-y; x) and A0(x; y) = (x; -y) in block form.

#include <optional>
#include <string>

#include "quadric/field/linalg.hpp"

namespace quadric::model {

/// J applied to a model-space vector; O(n).
template <FieldScalar T>
Vec<T> apply_J(const Vec<T>& v);

/// The base conjugation A0 applied to a model-space vector; O(n).
template <FieldScalar T>
Vec<T> apply_A0(const Vec<T>& v);

template <FieldScalar T>
class QuadricPoint {
 public:
  explicit QuadricPoint(int m);

  int m() const { return m_; }
  std::size_t dim() const { return static_cast<std::size_t>(2 * m_); }
  const Matrix<T>& J() const { return J_; }
  const Matrix<T>& A0() const { return A0_; }

  /// e_{i+1} (0-based i), spans V(A0).
  Vec<T> e(int i) const { return Vec<T>::unit(dim(), static_cast<std::size_t>(i)); }
  /// J e_{i+1}, spans JV(A0).
  Vec<T> Je(int i) const { return Vec<T>::unit(dim(), static_cast<std::size_t>(m_ + i)); }

 private:
  int m_;
  Matrix<T> J_;
  Matrix<T> A0_;
};

/// Throws PreconditionError for m < 3: Q^1 and Q^2 are excluded (they are a
/// round sphere and a product of spheres).
template <FieldScalar T>
QuadricPoint<T> build_quadric_point(int m);

/// A_θ = (cos θ·I + sin θ·J)·A0, a member of the S¹-family of real structures.
template <FieldScalar T>
class Conjugation {
 public:
  Conjugation(int m, T cos_theta, T sin_theta);

  const T& cos_theta() const { return cos_; }
  const T& sin_theta() const { return sin_; }
  double theta() const;
  const Matrix<T>& matrix() const { return matrix_; }

  Vec<T> apply(const Vec<T>& v) const;

 private:
  T cos_;
  T sin_;
  Matrix<T> matrix_;
};

/// (c, s) must satisfy c² + s² = 1, exactly in exact mode and to 1e-12 in
/// float mode; otherwise PreconditionError.
template <FieldScalar T>
Conjugation<T> conjugation_at(const QuadricPoint<T>& q, const T& cos_theta, const T& sin_theta);

inline Conjugation<double> conjugation_at(const QuadricPoint<double>& q, double theta) {
  return conjugation_at(q, std::cos(theta), std::sin(theta));
}

/// θ = kπ/2, the quarter turns available in exact arithmetic.
template <FieldScalar T>
Conjugation<T> conjugation_quarter_turn(const QuadricPoint<T>& q, int k);

/// W = cos(t) Z1 + sin(t) J Z2 for orthonormal Z1, Z2 ∈ V(A), 0 ≤ t ≤ π/4.
/// The angle enters as (cos t, sin t) so exact mode can express t = π/4.
template <FieldScalar T>
Vec<T> singular_vector(const QuadricPoint<T>& q, const T& cos_t, const T& sin_t, const Vec<T>& z1,
                       const Vec<T>& z2, const Conjugation<T>& a);

inline Vec<double> singular_vector(const QuadricPoint<double>& q, double t, const Vec<double>& z1,
                                   const Vec<double>& z2, const Conjugation<double>& a) {
  return singular_vector(q, std::cos(t), std::sin(t), z1, z2, a);
}

enum class SingularKind { Principal, Isotropic, Regular };

std::string to_string(SingularKind kind);

template <FieldScalar T>
struct Singularity {
  SingularKind kind;
  double t;                 ///< angle in [0, π/4], from cos 2t
  double best_theta;        ///< θ of the conjugation adapted to N
  bool theta_degenerate;    ///< a = b = 0: every θ is adapted; best_theta is 0
  double cos2t;             ///< √(a² + b²)
  T cos2t_sq;               ///< a² + b², exact in exact mode
  T a;                      ///< g(A0 N, N)
  T b;                      ///< g(J A0 N, N)
};

/// Principal/Isotropic bands on cos 2t for float classification.
inline constexpr double kSingularBand = 1e-9;

/// Throws PreconditionError for non-unit N.
template <FieldScalar T>
Singularity<T> classify_singularity(const QuadricPoint<T>& q, const Vec<T>& n);

/// The family member with g(A N, N) = cos 2t and g(A ξ, N) = 0 for ξ = −JN.
/// In exact mode this is available when cos θ, sin θ lie in Q(sqrt2), which
/// covers principal and isotropic normals; otherwise PreconditionError.
template <FieldScalar T>
Conjugation<T> adapted_conjugation(const QuadricPoint<T>& q, const Vec<T>& n);

/// The ambient curvature tensor R̄(X,Y)Z, all nine terms written out.
template <FieldScalar T>
Vec<T> ambient_curvature(const QuadricPoint<T>& q, const Conjugation<T>& a, const Vec<T>& x,
                         const Vec<T>& y, const Vec<T>& z);

/// U ↦ R̄(U,N)N as a 2m×2m matrix, column by column from ambient_curvature.
template <FieldScalar T>
Matrix<T> ambient_jacobi(const QuadricPoint<T>& q, const Conjugation<T>& a, const Vec<T>& n);

/// Closed form U − g(U,N)N + 3g(U,ξ)ξ + g(AN,N)AU − g(AN,U)AN − g(Aξ,U)Aξ.
/// Valid only for an adapted conjugation; PreconditionError otherwise.
template <FieldScalar T>
Matrix<T> ambient_jacobi_closed_form(const QuadricPoint<T>& q, const Conjugation<T>& a,
                                     const Vec<T>& n);

/// |‖v‖² − 1|; exact zero test in exact mode.
template <FieldScalar T>
bool is_unit(const Vec<T>& v, double tol = 1e-12);

}  // namespace quadric::model
