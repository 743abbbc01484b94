#include <doctest.h>

#include <cmath>

#include "quadric/surface/generators.hpp"
#include "quadric/surface/tube.hpp"

using namespace quadric;
using namespace quadric::surface;

namespace {

std::vector<std::pair<double, int>> spectrum(const EigenStructure& es) {
  std::vector<std::pair<double, int>> out;
  for (const auto& c : es.clusters) out.emplace_back(c.value.as_float(), c.multiplicity);
  return out;
}

}  // namespace

TEST_SUITE("surface") {
  TEST_CASE("tube u=1, m=3: principal curvatures") {
    const auto tube = build_type_B_tube<double>(TubeSpec::from_u(3, 1));
    const auto sp = spectrum(eigenstructure(tube.point));
    REQUIRE(sp.size() == 3);
    CHECK(sp[0].first == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
    CHECK(sp[0].second == 1);
    CHECK(std::abs(sp[1].first) < 1e-12);
    CHECK(sp[1].second == 2);
    CHECK(sp[2].first == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(sp[2].second == 2);
  }

  TEST_CASE("tube u=1, m=4: exact eigen table") {
    const auto tube = build_type_B_tube<QSqrt2>(TubeSpec::from_u(4, 1));
    const QSqrt2 r2 = QSqrt2::sqrt2();
    const auto ok = verify_eigen_table<QSqrt2>(tube.point, {{-r2, 1}, {r2, 3}, {QSqrt2(0), 3}});
    CHECK(ok.matches);
    const auto bad = verify_eigen_table<QSqrt2>(tube.point, {{-r2, 1}, {r2, 2}, {QSqrt2(0), 4}});
    CHECK_FALSE(bad.matches);
  }

  TEST_CASE("tube from a radius") {
    const double r = 0.3, u = std::tan(std::sqrt(2.0) * r);
    const auto tube = build_type_B_tube<double>(TubeSpec::from_radius(5, r));
    const auto sp = spectrum(eigenstructure(tube.point));
    REQUIRE(sp.size() == 3);
    CHECK(sp[0].first == doctest::Approx(-std::sqrt(2.0) / u).epsilon(1e-12));
    CHECK(sp[2].first == doctest::Approx(std::sqrt(2.0) * u).epsilon(1e-12));
    CHECK(sp[2].second == 4);
    CHECK_THROWS_AS(TubeSpec::from_radius(3, 1.2), PreconditionError);
    CHECK_THROWS_AS(TubeSpec::from_u(3, 0), PreconditionError);
  }

  TEST_CASE("contact scalar of the tube") {
    const auto tube = build_type_B_tube<QSqrt2>(TubeSpec::from_u(3, 1));
    const auto c = is_contact(tube.point);
    CHECK(c.contact);
    CHECK(c.c == QSqrt2(0, mpq_class(1, 2)));  // 1/√2 = −1/α
  }

  TEST_CASE("totally geodesic shape and non-Hopf shapes") {
    const auto q = model::build_quadric_point<QSqrt2>(3);
    const auto n = q.e(0);
    const auto h0 = make_hypersurface_point(q, n, Matrix<QSqrt2>(6, 6));
    const auto hopf = is_hopf(h0);
    CHECK(hopf.hopf);
    CHECK(hopf.alpha.is_zero());
    CHECK_FALSE(is_contact(h0).contact);  // c = 0

    Matrix<QSqrt2> s(6, 6);
    const Vec<QSqrt2> xi = -model::apply_J(n);
    s.add_outer(QSqrt2(1), xi, q.e(1));
    s.add_outer(QSqrt2(1), q.e(1), xi);
    const auto h1 = make_hypersurface_point(q, n, s);
    CHECK_FALSE(is_hopf(h1).hopf);
    CHECK_THROWS_AS(structure_jacobi(h1), PreconditionError);
    CHECK_THROWS_AS(jacobi_rx(h0, xi), PreconditionError);
  }

  TEST_CASE("construction preconditions") {
    const auto q = model::build_quadric_point<double>(3);
    const Vec<double> n = q.e(0);
    CHECK_THROWS_AS(make_hypersurface_point(q, Vec<double>(2.0 * n), Matrix<double>(6, 6)),
                    PreconditionError);
    Matrix<double> asym(6, 6);
    asym(1, 2) = 1.0;
    CHECK_THROWS_AS(make_hypersurface_point(q, n, asym), PreconditionError);
    // A_{π/2} is not adapted to a regular normal in V(A0) ⊕ JV(A0).
    Vec<double> reg = 0.8 * q.e(0);
    reg.axpy(0.6, q.Je(1));
    CHECK_THROWS_AS(
        make_hypersurface_point(q, model::conjugation_at(q, std::acos(0.0)), reg, Matrix<double>(6, 6)),
        PreconditionError);
  }

  TEST_CASE("Gauss and formula routes agree on a random Hopf point") {
    const auto q = model::build_quadric_point<QSqrt2>(3);
    auto rng = make_rng(9);
    Vec<QSqrt2> n = QSqrt2::ratio(4, 5) * q.e(0);
    n.axpy(QSqrt2::ratio(3, 5), q.Je(1));
    const auto h = make_hypersurface_point(q, n, random_hopf_shape(n, QSqrt2::ratio(3, 2), rng));
    CHECK((structure_jacobi(h) - structure_jacobi_gauss(h)).is_zero());
    CHECK((normal_jacobi(h) - normal_jacobi_projected(h)).is_zero());
    const auto x = random_contact_vector(n, rng);
    CHECK((jacobi_rx(h, x) - jacobi_rx_gauss(h, x)).is_zero());
  }

  TEST_CASE("the tube's commuting structure") {
    for (int m : {3, 4}) {
      const auto tube = build_type_B_tube<QSqrt2>(TubeSpec::from_u(m, mpq_class(1, 2)));
      const auto rn = normal_jacobi(tube.point);
      CHECK(commutator(rn, structure_jacobi(tube.point)).is_zero());
      for (const auto& x : tube.t_lambda) CHECK(commutator(rn, jacobi_rx(tube.point, x)).is_zero());
      for (const auto& x : tube.t_mu) CHECK(commutator(rn, jacobi_rx(tube.point, x)).is_zero());
    }
  }
}
