#include <doctest.h>

#include <cmath>
#include <random>

#include "quadric/field/eigen.hpp"
#include "quadric/field/linalg.hpp"
#include "quadric/field/scalar.hpp"

using namespace quadric;

TEST_SUITE("field") {
  TEST_CASE("QSqrt2 arithmetic agrees with doubles") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int k = 0; k < 200; ++k) {
      const QSqrt2 x(mpq_class(d(rng), 4), mpq_class(d(rng), 3));
      const QSqrt2 y(mpq_class(d(rng), 5), mpq_class(d(rng), 2));
      const double xd = x.to_double(), yd = y.to_double();
      CHECK((x + y).to_double() == doctest::Approx(xd + yd).epsilon(1e-14));
      CHECK((x * y).to_double() == doctest::Approx(xd * yd).epsilon(1e-14));
      if (!y.is_zero()) {
        CHECK((x / y).to_double() == doctest::Approx(xd / yd).epsilon(1e-12));
        CHECK(y * y.inverse() == QSqrt2(1));
      }
      CHECK(x.sign() == (xd > 0) - (xd < 0));
    }
  }

  TEST_CASE("QSqrt2 identities and parsing") {
    const QSqrt2 r2 = QSqrt2::sqrt2();
    CHECK(r2 * r2 == QSqrt2(2));
    CHECK((QSqrt2(1) + r2) * (r2 - QSqrt2(1)) == QSqrt2(1));
    CHECK(QSqrt2(3) - QSqrt2(2) * r2 > QSqrt2(0));  // 3 > 2√2
    CHECK(QSqrt2(mpq_class(17, 12)) > r2);
    const QSqrt2 x(mpq_class(-7, 3), mpq_class(5, 2));
    CHECK(QSqrt2::parse(x.to_string()) == x);
    CHECK(QSqrt2::parse("1/2") == QSqrt2::ratio(1, 2));
    CHECK(parse_rational("1e-3") == mpq_class(1, 1000));
    CHECK_THROWS_AS(QSqrt2(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(QSqrt2::parse("1 + 2*sqrt3"), PreconditionError);
  }

  TEST_CASE("Scalar keeps modes apart") {
    const Scalar a(1.5), b(QSqrt2(1));
    CHECK_FALSE(a.is_exact());
    CHECK(b.is_exact());
    CHECK_THROWS_AS((void)(a + b), ModeMismatch);
    CHECK_THROWS_AS((void)(a == b), ModeMismatch);
    CHECK(Scalar::parse(Mode::Float, Scalar(0.1).to_string()) == Scalar(0.1));
    CHECK(Scalar::parse(Mode::Exact, "1/3 + -2/7*sqrt2") == Scalar(QSqrt2(mpq_class(1, 3), mpq_class(-2, 7))));
  }

  TEST_CASE("rank and null space") {
    Matrix<QSqrt2> m{{QSqrt2(1), QSqrt2(2), QSqrt2(3)},
                     {QSqrt2(2), QSqrt2(4), QSqrt2(6)},
                     {QSqrt2(0), QSqrt2::sqrt2(), QSqrt2(1)}};
    CHECK(rank(m) == 2);
    const auto ns = null_space(m);
    REQUIRE(ns.size() == 1);
    CHECK((m * ns[0]).is_zero());
    CHECK_THROWS_AS(Vec<double>(3) + Vec<double>(4), DimensionMismatch);
  }

  TEST_CASE("Jacobi eigensolver reconstructs random symmetric matrices") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3, 3);
    for (std::size_t n : {1u, 2u, 5u, 10u, 12u}) {
      Matrix<double> m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
      const auto e = sym_eigen(m);
      const auto rec = e.vectors * Matrix<double>::diagonal(e.values) * e.vectors.transpose();
      CHECK(frobenius_norm(Matrix<double>(rec - m)) <= 1e-11 * frobenius_norm(m));
      std::vector<Vec<double>> cols;
      for (std::size_t k = 0; k < n; ++k) cols.push_back(e.vectors.column(k));
      CHECK(orthonormality_defect(cols) < 1e-12);
      CHECK(std::is_sorted(e.values.begin(), e.values.end()));
    }
    Matrix<double> asym{{1.0, 2.0}, {0.0, 1.0}};
    CHECK_THROWS_AS(sym_eigen(asym), PreconditionError);
  }

  TEST_CASE("Gram-Schmidt rejects dependent families") {
    std::vector<Vec<double>> vs{Vec<double>{1.0, 0.0, 0.0}, Vec<double>{2.0, 0.0, 0.0}};
    CHECK_THROWS_AS(gram_schmidt(vs), RankDeficient);
    const auto q = gram_schmidt({Vec<double>{1.0, 1.0, 0.0}, Vec<double>{0.0, 1.0, 1.0}});
    CHECK(orthonormality_defect(q) < 1e-14);
  }
}
