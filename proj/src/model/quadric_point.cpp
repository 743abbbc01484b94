#include "quadric/model/quadric_point.hpp"

#include <cmath>
#include <numbers>

namespace quadric::model {

namespace {

bool is_rational_square(const mpq_class& q, mpq_class& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return false;
  }
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  root = mpq_class(num, den);
  root.canonicalize();
  return true;
}

// Nonnegative square root inside Q(sqrt2), when it exists.
std::optional<QSqrt2> exact_sqrt(const QSqrt2& x) {
  if (x.sign() < 0) return std::nullopt;
  const mpq_class& A = x.rational_part();
  const mpq_class& B = x.surd_part();
  mpq_class p, q;
  if (sgn(B) == 0) {
    if (is_rational_square(A, p)) return QSqrt2(p, 0);
    if (is_rational_square(A / 2, q)) return QSqrt2(0, q);
    return std::nullopt;
  }
  // (p + q√2)² = A + B√2  ⇔  p² + 2q² = A, 2pq = B.
  mpq_class disc_root;
  if (!is_rational_square(A * A - 2 * B * B, disc_root)) return std::nullopt;
  for (const mpq_class& p_sq : {mpq_class((A + disc_root) / 2), mpq_class((A - disc_root) / 2)}) {
    if (sgn(p_sq) <= 0 || !is_rational_square(p_sq, p)) continue;
    q = B / (2 * p);
    QSqrt2 r(p, q);
    if (r.sign() < 0) r = -r;
    if (r * r == x) return r;
  }
  return std::nullopt;
}

}  // namespace

template <FieldScalar T>
Vec<T> apply_J(const Vec<T>& v) {
  const std::size_t m = v.size() / 2;
  Vec<T> out(v.size());
  for (std::size_t i = 0; i < m; ++i) {
    out[i] = -v[m + i];
    out[m + i] = v[i];
  }
  return out;
}

template <FieldScalar T>
Vec<T> apply_A0(const Vec<T>& v) {
  const std::size_t m = v.size() / 2;
  Vec<T> out = v;
  for (std::size_t i = m; i < 2 * m; ++i) out[i] = -out[i];
  return out;
}

template <FieldScalar T>
QuadricPoint<T>::QuadricPoint(int m) : m_(m), J_(2 * m, 2 * m), A0_(2 * m, 2 * m) {
  for (int i = 0; i < m; ++i) {
    J_(m + i, i) = T(1);
    J_(i, m + i) = T(-1);
    A0_(i, i) = T(1);
    A0_(m + i, m + i) = T(-1);
  }
}

template <FieldScalar T>
QuadricPoint<T> build_quadric_point(int m) {
  if (m < 3) {
    throw PreconditionError("build_quadric_point: m = " + std::to_string(m) +
                            " but the model requires m >= 3 (Q^1 is a 2-sphere, Q^2 a product "
                            "of 2-spheres)");
  }
  return QuadricPoint<T>(m);
}

template <FieldScalar T>
Conjugation<T>::Conjugation(int m, T cos_theta, T sin_theta)
    : cos_(std::move(cos_theta)), sin_(std::move(sin_theta)), matrix_(2 * m, 2 * m) {
  for (int i = 0; i < m; ++i) {
    // (cI + sJ) A0 in block form: [[c, s], [s, -c]].
    matrix_(i, i) = cos_;
    matrix_(m + i, m + i) = -cos_;
    matrix_(i, m + i) = sin_;
    matrix_(m + i, i) = sin_;
  }
}

template <FieldScalar T>
double Conjugation<T>::theta() const {
  return std::atan2(to_double(sin_), to_double(cos_));
}

template <FieldScalar T>
Vec<T> Conjugation<T>::apply(const Vec<T>& v) const {
  const std::size_t m = v.size() / 2;
  if (2 * m != matrix_.rows()) throw DimensionMismatch("Conjugation::apply: wrong dimension");
  Vec<T> out(v.size());
  for (std::size_t i = 0; i < m; ++i) {
    out[i] = cos_ * v[i] + sin_ * v[m + i];
    out[m + i] = sin_ * v[i] - cos_ * v[m + i];
  }
  return out;
}

template <FieldScalar T>
Conjugation<T> conjugation_at(const QuadricPoint<T>& q, const T& cos_theta, const T& sin_theta) {
  const T defect = cos_theta * cos_theta + sin_theta * sin_theta - T(1);
  if (!near_zero(defect, 1e-12)) {
    throw PreconditionError("conjugation_at: (cos, sin) is not on the unit circle");
  }
  return Conjugation<T>(q.m(), cos_theta, sin_theta);
}

template <FieldScalar T>
Conjugation<T> conjugation_quarter_turn(const QuadricPoint<T>& q, int k) {
  static constexpr int kCos[4] = {1, 0, -1, 0};
  static constexpr int kSin[4] = {0, 1, 0, -1};
  const int r = ((k % 4) + 4) % 4;
  return Conjugation<T>(q.m(), T(kCos[r]), T(kSin[r]));
}

template <FieldScalar T>
bool is_unit(const Vec<T>& v, double tol) {
  return near_zero(T(norm_sq(v) - T(1)), tol);
}

template <FieldScalar T>
Vec<T> singular_vector(const QuadricPoint<T>& q, const T& cos_t, const T& sin_t, const Vec<T>& z1,
                       const Vec<T>& z2, const Conjugation<T>& a) {
  if (z1.size() != q.dim() || z2.size() != q.dim()) {
    throw DimensionMismatch("singular_vector: Z1, Z2 must have dimension 2m");
  }
  constexpr double tol = 1e-12;
  if (!is_unit(z1, tol) || !is_unit(z2, tol) || !near_zero(dot(z1, z2), tol)) {
    throw PreconditionError("singular_vector: Z1, Z2 are not orthonormal");
  }
  if (!near_zero(norm_sq(Vec<T>(a.apply(z1) - z1)), tol) ||
      !near_zero(norm_sq(Vec<T>(a.apply(z2) - z2)), tol)) {
    throw PreconditionError("singular_vector: Z1, Z2 are not fixed by A");
  }
  if (!near_zero(T(cos_t * cos_t + sin_t * sin_t - T(1)), tol)) {
    throw PreconditionError("singular_vector: (cos t, sin t) is not on the unit circle");
  }
  // 0 ≤ t ≤ π/4 ⇔ cos t ≥ sin t ≥ 0.
  if (to_double(sin_t) < -tol || to_double(T(cos_t - sin_t)) < -tol) {
    throw PreconditionError("singular_vector: t must lie in [0, pi/4]");
  }
  Vec<T> w = cos_t * z1;
  w.axpy(sin_t, apply_J(z2));
  return w;
}

std::string to_string(SingularKind kind) {
  switch (kind) {
    case SingularKind::Principal:
      return "principal";
    case SingularKind::Isotropic:
      return "isotropic";
    case SingularKind::Regular:
      return "regular";
  }
  return "?";
}

template <FieldScalar T>
Singularity<T> classify_singularity(const QuadricPoint<T>& q, const Vec<T>& n) {
  if (n.size() != q.dim()) throw DimensionMismatch("classify_singularity: wrong dimension");
  if (!is_unit(n)) throw PreconditionError("classify_singularity: N is not a unit vector");
  const Vec<T> a0n = apply_A0(n);
  T a = dot(a0n, n);
  T b = dot(apply_J(a0n), n);
  T cos2t_sq = a * a + b * b;
  const double cos2t = std::min(1.0, std::sqrt(std::max(0.0, to_double(cos2t_sq))));

  SingularKind kind = SingularKind::Regular;
  bool degenerate = false;
  if constexpr (is_exact_v<T>) {
    if (cos2t_sq == T(1)) kind = SingularKind::Principal;
    if (cos2t_sq.is_zero()) kind = SingularKind::Isotropic;
    degenerate = cos2t_sq.is_zero();
  } else {
    if (std::abs(cos2t - 1.0) <= kSingularBand) kind = SingularKind::Principal;
    if (cos2t <= kSingularBand) kind = SingularKind::Isotropic;
    degenerate = cos2t <= kSingularBand;
  }
  const double best_theta = degenerate ? 0.0 : std::atan2(to_double(b), to_double(a));
  return Singularity<T>{kind,     0.5 * std::acos(cos2t), best_theta,         degenerate,
                        cos2t,    std::move(cos2t_sq),    std::move(a),       std::move(b)};
}

template <FieldScalar T>
Conjugation<T> adapted_conjugation(const QuadricPoint<T>& q, const Vec<T>& n) {
  const Singularity<T> s = classify_singularity(q, n);
  if (s.theta_degenerate) return conjugation_quarter_turn(q, 0);
  if constexpr (is_exact_v<T>) {
    auto r = exact_sqrt(s.cos2t_sq);
    if (!r) {
      throw PreconditionError(
          "adapted_conjugation: cos 2t = sqrt(" + s.cos2t_sq.to_string() +
          ") is not in Q(sqrt2); use float mode for this normal");
    }
    return conjugation_at(q, T(s.a / *r), T(s.b / *r));
  } else {
    return conjugation_at(q, s.best_theta);
  }
}

template <FieldScalar T>
Vec<T> ambient_curvature(const QuadricPoint<T>& q, const Conjugation<T>& a, const Vec<T>& x,
                         const Vec<T>& y, const Vec<T>& z) {
  if (x.size() != q.dim() || y.size() != q.dim() || z.size() != q.dim()) {
    throw DimensionMismatch("ambient_curvature: vectors must have dimension 2m");
  }
  const Vec<T> jx = apply_J(x);
  const Vec<T> jy = apply_J(y);
  const Vec<T> jz = apply_J(z);
  const Vec<T> ax = a.apply(x);
  const Vec<T> ay = a.apply(y);
  const Vec<T> jax = apply_J(ax);
  const Vec<T> jay = apply_J(ay);

  Vec<T> r(q.dim());
  r.axpy(dot(y, z), x);
  r.axpy(-dot(x, z), y);
  r.axpy(dot(jy, z), jx);
  r.axpy(-dot(jx, z), jy);
  r.axpy(T(-2) * dot(jx, y), jz);
  r.axpy(dot(ay, z), ax);
  r.axpy(-dot(ax, z), ay);
  r.axpy(dot(jay, z), jax);
  r.axpy(-dot(jax, z), jay);
  return r;
}

template <FieldScalar T>
Matrix<T> ambient_jacobi(const QuadricPoint<T>& q, const Conjugation<T>& a, const Vec<T>& n) {
  if (!is_unit(n)) throw PreconditionError("ambient_jacobi: N is not a unit vector");
  Matrix<T> out(q.dim(), q.dim());
  for (std::size_t k = 0; k < q.dim(); ++k) {
    out.set_column(k, ambient_curvature(q, a, Vec<T>::unit(q.dim(), k), n, n));
  }
  return out;
}

template <FieldScalar T>
Matrix<T> ambient_jacobi_closed_form(const QuadricPoint<T>& q, const Conjugation<T>& a,
                                     const Vec<T>& n) {
  if (!is_unit(n)) throw PreconditionError("ambient_jacobi_closed_form: N is not a unit vector");
  const Vec<T> xi = -apply_J(n);
  const Vec<T> an = a.apply(n);
  const Vec<T> axi = a.apply(xi);
  if (!near_zero(dot(axi, n), 1e-12)) {
    throw PreconditionError("ambient_jacobi_closed_form: conjugation is not adapted to N");
  }
  Matrix<T> out = Matrix<T>::identity(q.dim());
  out.add_outer(T(-1), n, n);
  out.add_outer(T(3), xi, xi);
  out += dot(an, n) * a.matrix();
  out.add_outer(T(-1), an, an);
  out.add_outer(T(-1), axi, axi);
  return out;
}

#define QUADRIC_INSTANTIATE(T)                                                                 \
  template Vec<T> apply_J(const Vec<T>&);                                                      \
  template Vec<T> apply_A0(const Vec<T>&);                                                     \
  template class QuadricPoint<T>;                                                              \
  template QuadricPoint<T> build_quadric_point<T>(int);                                        \
  template class Conjugation<T>;                                                               \
  template Conjugation<T> conjugation_at(const QuadricPoint<T>&, const T&, const T&);          \
  template Conjugation<T> conjugation_quarter_turn(const QuadricPoint<T>&, int);               \
  template bool is_unit(const Vec<T>&, double);                                                \
  template Vec<T> singular_vector(const QuadricPoint<T>&, const T&, const T&, const Vec<T>&,   \
                                  const Vec<T>&, const Conjugation<T>&);                       \
  template Singularity<T> classify_singularity(const QuadricPoint<T>&, const Vec<T>&);         \
  template Conjugation<T> adapted_conjugation(const QuadricPoint<T>&, const Vec<T>&);          \
  template Vec<T> ambient_curvature(const QuadricPoint<T>&, const Conjugation<T>&,             \
                                    const Vec<T>&, const Vec<T>&, const Vec<T>&);              \
  template Matrix<T> ambient_jacobi(const QuadricPoint<T>&, const Conjugation<T>&,             \
                                    const Vec<T>&);                                            \
  template Matrix<T> ambient_jacobi_closed_form(const QuadricPoint<T>&, const Conjugation<T>&, \
                                                const Vec<T>&);

QUADRIC_INSTANTIATE(double)
QUADRIC_INSTANTIATE(QSqrt2)

#undef QUADRIC_INSTANTIATE

}  // namespace quadric::model
