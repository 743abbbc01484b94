#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "quadric/model/quadric_point.hpp"

using namespace quadric;
using namespace quadric::model;

namespace {

using V = Vec<double>;

// Independent evaluation of the ambient curvature with explicit J and A.
V oracle_curvature(const Matrix<double>& J, const Matrix<double>& A, const V& x, const V& y,
                   const V& z) {
  auto g = [](const V& a, const V& b) { return dot(a, b); };
  const V jx = J * x, jy = J * y, jz = J * z, ax = A * x, ay = A * y, jax = J * ax, jay = J * ay;
  V r(x.size());
  r.axpy(g(y, z), x).axpy(-g(x, z), y);
  r.axpy(g(jy, z), jx).axpy(-g(jx, z), jy).axpy(-2 * g(jx, y), jz);
  r.axpy(g(ay, z), ax).axpy(-g(ax, z), ay);
  r.axpy(g(jay, z), jax).axpy(-g(jax, z), jay);
  return r;
}

V gaussian_unit(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  V v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = g(rng);
  return (1.0 / norm(v)) * v;
}

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("quadric point rejects m < 3") {
    CHECK_THROWS_AS(build_quadric_point<double>(2), PreconditionError);
    CHECK_NOTHROW(build_quadric_point<QSqrt2>(3));
  }

  TEST_CASE("conjugations square to the identity and anticommute with J") {
    const auto q = build_quadric_point<QSqrt2>(4);
    const auto a = conjugation_at(q, QSqrt2::ratio(3, 5), QSqrt2::ratio(4, 5));
    const auto& m = a.matrix();
    CHECK((m * m - Matrix<QSqrt2>::identity(8)).is_zero());
    CHECK((m * q.J() + q.J() * m).is_zero());
    CHECK((m - m.transpose()).is_zero());
    CHECK_THROWS(conjugation_at(q, QSqrt2(1), QSqrt2(1)));
  }

  TEST_CASE("known curvature values") {
    const auto q = build_quadric_point<QSqrt2>(3);
    const auto a = conjugation_quarter_turn(q, 0);
    // Principal plane spanned in V(A).
    CHECK(ambient_curvature(q, a, q.e(0), q.e(1), q.e(1)).values() ==
          (QSqrt2(2) * q.e(0)).values());
    // Holomorphic plane of a principal vector: sectional curvature 2.
    CHECK(ambient_curvature(q, a, q.e(0), q.Je(0), q.Je(0)).values() ==
          (QSqrt2(2) * q.e(0)).values());
    // Holomorphic plane of an isotropic vector: sectional curvature 4.
    const QSqrt2 h(0, mpq_class(1, 2));
    Vec<QSqrt2> x = h * q.e(0);
    x.axpy(h, q.Je(1));
    const Vec<QSqrt2> jx = apply_J(x);
    CHECK(dot(ambient_curvature(q, a, x, jx, jx), x) == QSqrt2(4));
  }

  TEST_CASE("curvature matches an independent evaluation") {
    const auto q = build_quadric_point<double>(5);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
      const auto a = conjugation_at(q, 0.37 * k);
      const V x = gaussian_unit(10, rng), y = gaussian_unit(10, rng), z = gaussian_unit(10, rng);
      const V diff = ambient_curvature(q, a, x, y, z) - oracle_curvature(q.J(), a.matrix(), x, y, z);
      CHECK(norm(diff) < 1e-13);
    }
  }

  TEST_CASE("singular classification of reference normals") {
    const auto q = build_quadric_point<QSqrt2>(3);
    const QSqrt2 h(0, mpq_class(1, 2));
    CHECK(classify_singularity(q, q.e(0)).kind == SingularKind::Principal);
    CHECK(classify_singularity(q, q.Je(2)).kind == SingularKind::Principal);
    Vec<QSqrt2> iso = h * q.e(0);
    iso.axpy(h, q.Je(1));
    const auto s_iso = classify_singularity(q, iso);
    CHECK(s_iso.kind == SingularKind::Isotropic);
    CHECK(s_iso.cos2t_sq.is_zero());
    Vec<QSqrt2> reg = QSqrt2::ratio(4, 5) * q.e(0);
    reg.axpy(QSqrt2::ratio(3, 5), q.Je(1));
    const auto s_reg = classify_singularity(q, reg);
    CHECK(s_reg.kind == SingularKind::Regular);
    CHECK(s_reg.cos2t_sq == QSqrt2::ratio(49, 625));
    const auto a = adapted_conjugation(q, reg);
    CHECK(dot(a.apply(reg), reg) == QSqrt2::ratio(7, 25));
    CHECK(dot(a.apply(apply_J(reg)), reg).is_zero());
  }

  TEST_CASE("planted angle is recovered under a rotated frame") {
    const auto q = build_quadric_point<double>(4);
    for (double t : {0.1, 0.4, 0.7}) {
      const auto a = conjugation_at(q, 1.1);
      // Orthonormal Z1, Z2 in V(A_θ): rotate e1, e2 by e^{(θ/2)J}.
      const double c = std::cos(0.55), s = std::sin(0.55);
      V z1 = c * q.e(0), z2 = c * q.e(1);
      z1.axpy(s, q.Je(0));
      z2.axpy(s, q.Je(1));
      const V n = singular_vector(q, t, z1, z2, a);
      CHECK(classify_singularity(q, n).cos2t == doctest::Approx(std::cos(2 * t)).epsilon(1e-13));
    }
  }

  TEST_CASE("normal Jacobi closed form agrees with the brute force") {
    const auto q = build_quadric_point<double>(3);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
      const V n = gaussian_unit(6, rng);
      const auto a = adapted_conjugation(q, n);
      const auto diff = ambient_jacobi(q, a, n) - ambient_jacobi_closed_form(q, a, n);
      CHECK(frobenius_norm(diff) < 1e-12);
    }
    CHECK_THROWS_AS(ambient_jacobi(q, conjugation_at(q, 0.0), V{1, 1, 0, 0, 0, 0}), PreconditionError);
  }
}
