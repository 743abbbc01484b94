#pragma once

// Seeded random instances: normals with a planted singular angle, Hopf shape
// operators, and the constrained families used by the isotropic, principal
// and regular-case checks.
//
// All generators draw from an explicit std::mt19937_64, so a fixed seed gives
// a fixed instance. Exact-mode draws are small rationals.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "quadric/field/eigen.hpp"
#include "quadric/surface/hypersurface.hpp"

namespace quadric::surface {

using Rng = std::mt19937_64;

/// Seeds a generator from (seed, salt...) through std::seed_seq.
inline Rng make_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> salt = {}) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed),
                                   static_cast<std::uint32_t>(seed >> 32)};
  for (auto s : salt) {
    words.push_back(static_cast<std::uint32_t>(s));
    words.push_back(static_cast<std::uint32_t>(s >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

/// Uniform on [lo, hi) in float mode; a rational p/q with |p/q| ≤ hi-ish in
/// exact mode (q ∈ {1..4}).
template <FieldScalar T>
T random_entry(Rng& rng, double lo = -3.0, double hi = 3.0) {
  if constexpr (is_exact_v<T>) {
    std::uniform_int_distribution<long> den(1, 4);
    const long q = den(rng);
    std::uniform_int_distribution<long> num(static_cast<long>(std::floor(lo * q)),
                                            static_cast<long>(std::floor(hi * q)));
    return T::ratio(num(rng), q);
  } else {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
}

template <FieldScalar T>
Vec<T> random_vector(std::size_t d, Rng& rng) {
  Vec<T> v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = random_entry<T>(rng);
  return v;
}

template <FieldScalar T>
Matrix<T> random_symmetric(std::size_t d, Rng& rng) {
  Matrix<T> m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      m(i, j) = random_entry<T>(rng);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

/// I − Σ v vᵀ for a family of orthonormal vectors.
template <FieldScalar T>
Matrix<T> complement_projector(std::size_t d, const std::vector<Vec<T>>& orthonormal) {
  Matrix<T> p = Matrix<T>::identity(d);
  for (const auto& v : orthonormal) p.add_outer(T(-1), v, v);
  return p;
}

/// Projector onto 𝒞 = {N, ξ}^⊥.
template <FieldScalar T>
Matrix<T> contact_projector(const Vec<T>& n) {
  return complement_projector<T>(n.size(), {n, Vec<T>(-model::apply_J(n))});
}

/// Projector onto 𝒬 = {N, ξ, AN, Aξ}^⊥ for an isotropic N (the four vectors
/// are then orthonormal).
template <FieldScalar T>
Matrix<T> isotropic_projector(const Conjugation<T>& a, const Vec<T>& n) {
  const Vec<T> xi = -model::apply_J(n);
  return complement_projector<T>(n.size(), {n, xi, a.apply(n), a.apply(xi)});
}

/// S = αξξᵀ + P_𝒞 M P_𝒞 with M random symmetric: a generic Hopf shape operator.
template <FieldScalar T>
Matrix<T> random_hopf_shape(const Vec<T>& n, const T& alpha, Rng& rng) {
  const Matrix<T> pc = contact_projector(n);
  Matrix<T> s = pc * random_symmetric<T>(n.size(), rng) * pc;
  const Vec<T> xi = -model::apply_J(n);
  s.add_outer(alpha, xi, xi);
  return s;
}

/// Random vector of 𝒞.
template <FieldScalar T>
Vec<T> random_contact_vector(const Vec<T>& n, Rng& rng) {
  return contact_projector(n) * random_vector<T>(n.size(), rng);
}

struct PlantedNormal {
  Vec<double> n;
  Conjugation<double> a;  ///< the family member with Z1, Z2 ∈ V(A)
  Vec<double> z1;
  Vec<double> z2;
  double t;
};

/// N = cos t Z1 + sin t JZ2 with a random conjugation A_θ and random
/// orthonormal Z1, Z2 ∈ V(A_θ).
inline PlantedNormal random_planted_normal(const model::QuadricPoint<double>& q, double t,
                                           Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> gauss;
  const double theta = angle(rng);
  auto a = model::conjugation_at(q, theta);
  const std::size_t m = static_cast<std::size_t>(q.m());
  std::vector<Vec<double>> raw;
  for (int k = 0; k < 2; ++k) {
    Vec<double> v(q.dim());
    for (std::size_t i = 0; i < m; ++i) v[i] = gauss(rng);
    raw.push_back(std::move(v));
  }
  auto z = gram_schmidt(raw);
  // e^{(θ/2)J} carries V(A0) onto V(A_θ).
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  for (auto& v : z) {
    Vec<double> jv = model::apply_J(v);
    v *= c;
    v.axpy(s, jv);
  }
  Vec<double> n = model::singular_vector(q, t, z[0], z[1], a);
  return {std::move(n), std::move(a), std::move(z[0]), std::move(z[1]), t};
}

/// Isotropic Hopf S = αξξᵀ + P_𝒬 M P_𝒬: Sξ = αξ and SAξ = SAN = 0 hold by
/// construction, everything else is random.
template <FieldScalar T>
Matrix<T> random_isotropic_hopf_shape(const Conjugation<T>& a, const Vec<T>& n, const T& alpha,
                                      Rng& rng) {
  const Matrix<T> pq = isotropic_projector(a, n);
  Matrix<T> s = pq * random_symmetric<T>(n.size(), rng) * pq;
  const Vec<T> xi = -model::apply_J(n);
  s.add_outer(alpha, xi, xi);
  return s;
}

/// λ ∈ [−3, 3] avoiding a 0.05-band around α/2, where the φ-partner value
/// (αλ + 2)/(2λ − α) is undefined.
inline double generic_principal_value(double alpha, Rng& rng) {
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (;;) {
    const double lambda = dist(rng);
    if (std::abs(2.0 * lambda - alpha) >= 0.05) return lambda;
  }
}

/// Isotropic Hopf S built from φ-pairs (v, Jv) spanning 𝒬:
/// S = αξξᵀ + Σ λ_i v_i v_iᵀ + μ_i Jv_i Jv_iᵀ, μ_i = (αλ_i + 2)/(2λ_i − α).
inline Matrix<double> random_isotropic_paired_shape(const Conjugation<double>& a,
                                                    const Vec<double>& n, double alpha,
                                                    Rng& rng) {
  const std::size_t d = n.size();
  const Matrix<double> pq = isotropic_projector(a, n);
  std::vector<Vec<double>> chosen;
  Matrix<double> s(d, d);
  const Vec<double> xi = -model::apply_J(n);
  s.add_outer(alpha, xi, xi);
  std::normal_distribution<double> gauss;
  while (chosen.size() + 4 < d) {
    Vec<double> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = gauss(rng);
    v = pq * v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& c : chosen) v.axpy(-dot(v, c), c);
    }
    const double len = norm(v);
    if (len < 1e-3) continue;
    v *= 1.0 / len;
    Vec<double> jv = model::apply_J(v);
    const double lambda = generic_principal_value(alpha, rng);
    const double mu = (alpha * lambda + 2.0) / (2.0 * lambda - alpha);
    s.add_outer(lambda, v, v);
    s.add_outer(mu, jv, jv);
    chosen.push_back(std::move(v));
    chosen.push_back(std::move(jv));
  }
  return s;
}

/// Random principal Hopf S commuting with A: independent symmetric blocks on
/// V(A)∩𝒞 and JV(A)∩𝒞. A nonzero `coupling` adds a symmetric term linking
/// the two blocks, which breaks AS = SA. Requires AN = N.
template <FieldScalar T>
Matrix<T> random_principal_shape(const Conjugation<T>& a, const Vec<T>& n, const T& alpha,
                                 const T& coupling, Rng& rng) {
  const std::size_t d = n.size();
  const Vec<T> xi = -model::apply_J(n);
  const T half = constant<T>(1, 2);
  Matrix<T> plus = half * (Matrix<T>::identity(d) + a.matrix());
  plus.add_outer(T(-1), n, n);
  Matrix<T> minus = half * (Matrix<T>::identity(d) - a.matrix());
  minus.add_outer(T(-1), xi, xi);
  Matrix<T> s = plus * random_symmetric<T>(d, rng) * plus;
  s += minus * random_symmetric<T>(d, rng) * minus;
  s.add_outer(alpha, xi, xi);
  if (!FieldTraits<T>::is_zero(coupling)) {
    Vec<T> u = plus * random_vector<T>(d, rng);
    Vec<T> v = minus * random_vector<T>(d, rng);
    s.add_outer(coupling, u, v);
    s.add_outer(coupling, v, u);
  }
  return s;
}

/// Hopf S with SAξ = αβξ and SφAξ = σ·φAξ, random on the rest of 𝒞.
/// Needs 1 − β² ≠ 0 and an adapted A; PreconditionError otherwise.
inline Matrix<double> forced_value_shape(const Conjugation<double>& a, const Vec<double>& n,
                                     double alpha, double sigma, Rng& rng) {
  const std::size_t d = n.size();
  const Vec<double> xi = -model::apply_J(n);
  const Vec<double> axi = a.apply(xi);
  const double beta = dot(axi, xi);
  Vec<double> w = axi;
  w.axpy(-beta, xi);
  Vec<double> phi_axi = model::apply_J(axi);
  phi_axi.axpy(-dot(phi_axi, n), n);
  const double wn = norm(w), pn = norm(phi_axi);
  if (wn < 1e-8 || pn < 1e-8) {
    throw PreconditionError("forced_value_shape: 1 - beta^2 = 0, the constraint subspace degenerates");
  }
  w *= 1.0 / wn;
  phi_axi *= 1.0 / pn;
  const Matrix<double> rest = complement_projector<double>(d, {n, xi, w, phi_axi});
  Matrix<double> s = rest * random_symmetric<double>(d, rng) * rest;
  s.add_outer(alpha, xi, xi);
  s.add_outer(sigma, phi_axi, phi_axi);
  return s;
}

}  // namespace quadric::surface
