#pragma once

// Pointwise data of a real hypersurface M in Q^m at one point.
//
// Tangential operators are stored as full 2m×2m matrices that annihilate the
// unit normal N and map N^⊥ into itself; tangentiality is an invariant that
// tests check rather than a change of basis.

#include "quadric/field/linalg.hpp"
#include "quadric/field/scalar.hpp"
#include "quadric/model/quadric_point.hpp"

namespace quadric::surface {

using model::Conjugation;
using model::QuadricPoint;

template <FieldScalar T>
class HypersurfacePoint {
 public:
  const QuadricPoint<T>& quadric() const { return q_; }
  const Conjugation<T>& conjugation() const { return a_; }
  std::size_t dim() const { return q_.dim(); }

  const Vec<T>& normal() const { return n_; }     ///< N
  const Matrix<T>& shape() const { return s_; }   ///< S
  const Vec<T>& reeb() const { return xi_; }      ///< ξ = −JN
  const Matrix<T>& phi() const { return phi_; }   ///< φ = P J P
  const Matrix<T>& b() const { return b_; }       ///< B = P A P
  const Matrix<T>& projector() const { return p_; }  ///< P = I − N Nᵀ
  const Vec<T>& a_normal() const { return an_; }  ///< AN
  const Vec<T>& a_reeb() const { return axi_; }   ///< Aξ
  const Vec<T>& phi_a_reeb() const { return phi_axi_; }  ///< φAξ
  const T& alpha() const { return alpha_; }       ///< g(Sξ, ξ)
  const T& beta() const { return beta_; }         ///< g(Aξ, ξ)

  T eta(const Vec<T>& x) const { return dot(x, xi_); }
  T rho(const Vec<T>& x) const { return dot(x, an_); }
  Vec<T> tangent_part(const Vec<T>& x) const;
  Vec<T> apply_phi(const Vec<T>& x) const { return phi_ * x; }
  Vec<T> apply_b(const Vec<T>& x) const { return b_ * x; }
  Vec<T> apply_s(const Vec<T>& x) const { return s_ * x; }

  template <FieldScalar U>
  friend HypersurfacePoint<U> make_hypersurface_point(QuadricPoint<U> q, Conjugation<U> a,
                                                      Vec<U> n, Matrix<U> s);

 private:
  HypersurfacePoint(QuadricPoint<T> q, Conjugation<T> a, Vec<T> n, Matrix<T> s);

  QuadricPoint<T> q_;
  Conjugation<T> a_;
  Vec<T> n_;
  Matrix<T> s_;
  Vec<T> xi_;
  Matrix<T> p_;
  Matrix<T> phi_;
  Matrix<T> b_;
  Vec<T> an_;
  Vec<T> axi_;
  Vec<T> phi_axi_;
  T alpha_;
  T beta_;
};

/// Validates and derives (ξ, η, φ, B, ρ, α, β). Throws PreconditionError when
/// N is not unit, S is not symmetric, S·N ≠ 0, or A is not adapted to N
/// (g(Aξ, N) ≠ 0; see model::adapted_conjugation).
template <FieldScalar T>
HypersurfacePoint<T> make_hypersurface_point(QuadricPoint<T> q, Conjugation<T> a, Vec<T> n,
                                             Matrix<T> s);

/// make_hypersurface_point with the adapted conjugation for N.
template <FieldScalar T>
HypersurfacePoint<T> make_hypersurface_point(QuadricPoint<T> q, Vec<T> n, Matrix<T> s);

/// Float tolerance used for construction-time and classification tests.
inline constexpr double kStructureTol = 1e-10;

template <FieldScalar T>
struct HopfResult {
  bool hopf;
  T alpha;
  Scalar residual;  ///< ‖Sξ − αξ‖ (float) or its square (exact)
};

template <FieldScalar T>
HopfResult<T> is_hopf(const HypersurfacePoint<T>& h);

template <FieldScalar T>
struct ContactResult {
  bool contact;
  T c;              ///< least-squares scalar in Sφ + φS = 2cφ
  Scalar residual;  ///< ‖Sφ + φS − 2cφ‖
};

/// Contact requires a zero residual and c ≠ 0.
template <FieldScalar T>
ContactResult<T> is_contact(const HypersurfacePoint<T>& h);

/// Builds the tangential matrix of a linear map given on tangent vectors:
/// column k is P·f(P e_k).
template <FieldScalar T, class F>
Matrix<T> tangential_operator(const HypersurfacePoint<T>& h, F&& f) {
  Matrix<T> out(h.dim(), h.dim());
  for (std::size_t k = 0; k < h.dim(); ++k) {
    out.set_column(k, h.tangent_part(f(h.projector().column(k))));
  }
  return out;
}

/// R(X,Y)Z = (R̄(X,Y)Z)ᵀ + g(SY,Z)SX − g(SX,Z)SY. Inputs must be tangent.
template <FieldScalar T>
Vec<T> induced_curvature(const HypersurfacePoint<T>& h, const Vec<T>& x, const Vec<T>& y,
                         const Vec<T>& z);

/// R̄_N on TM by the hypersurface formula
/// Y + 3η(Y)ξ + g(AN,N)BY + g(AN,Y)φAξ − g(Aξ,Y)Aξ.
template <FieldScalar T>
Matrix<T> normal_jacobi(const HypersurfacePoint<T>& h);

/// P · R̄_N · P from the ambient curvature tensor.
template <FieldScalar T>
Matrix<T> normal_jacobi_projected(const HypersurfacePoint<T>& h);

/// R_ξ by the Hopf formula
/// Y − η(Y)ξ + βBY − g(Aξ,Y)Aξ − g(φAξ,Y)φAξ + αSY − α²η(Y)ξ.
/// Throws PreconditionError when h is not Hopf.
template <FieldScalar T>
Matrix<T> structure_jacobi(const HypersurfacePoint<T>& h);

/// Y ↦ R(Y,ξ)ξ through the Gauss equation; defined for any h.
template <FieldScalar T>
Matrix<T> structure_jacobi_gauss(const HypersurfacePoint<T>& h);

/// R_X for X ∈ 𝒞 by the closed form expanded through B and φ.
/// Throws PreconditionError when X is not tangent or η(X) ≠ 0.
template <FieldScalar T>
Matrix<T> jacobi_rx(const HypersurfacePoint<T>& h, const Vec<T>& x);

/// Y ↦ R(Y,X)X through the Gauss equation; any tangent X.
template <FieldScalar T>
Matrix<T> jacobi_rx_gauss(const HypersurfacePoint<T>& h, const Vec<T>& x);

/// The bilinear form of the Hopf pointwise identity
///   2g(SφSX,Y) − αg((φS+Sφ)X,Y) − 2g(φX,Y) + 2g(X,AN)g(Y,Aξ) − 2g(Y,AN)g(X,Aξ)
///   − 2g(X,AN)g(ξ,Aξ)η(Y) + 2g(Y,AN)g(ξ,Aξ)η(X)
/// evaluated at (X, Y). It vanishes on every Hopf hypersurface.
template <FieldScalar T>
T hopf_identity_form(const HypersurfacePoint<T>& h, const Vec<T>& x, const Vec<T>& y);

/// The vector V with g(V, Y) = hopf_identity_form(X, Y) for tangent Y.
template <FieldScalar T>
Vec<T> hopf_identity_vector(const HypersurfacePoint<T>& h, const Vec<T>& x);

/// Tangent vector test: |g(x, N)| ≤ tol, exact zero in exact mode.
template <FieldScalar T>
bool is_tangent(const HypersurfacePoint<T>& h, const Vec<T>& x, double tol = kStructureTol);

}  // namespace quadric::surface
