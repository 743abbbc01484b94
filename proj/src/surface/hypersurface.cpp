#include "quadric/surface/hypersurface.hpp"

#include <cmath>

namespace quadric::surface {

namespace {

template <FieldScalar T>
Scalar vector_residual(const Vec<T>& v) {
  if constexpr (is_exact_v<T>) {
    return norm_sq(v);
  } else {
    return norm(v);
  }
}

template <FieldScalar T>
bool residual_small(const Scalar& r, double tol) {
  if constexpr (is_exact_v<T>) {
    return r.is_zero();
  } else {
    return r.as_float() <= tol;
  }
}

template <FieldScalar T>
void require_tangent(const HypersurfacePoint<T>& h, const Vec<T>& x, const char* what) {
  if (x.size() != h.dim()) throw DimensionMismatch(std::string(what) + ": wrong dimension");
  if (!is_tangent(h, x)) {
    throw PreconditionError(std::string(what) + ": input vector is not tangent (g(X, N) != 0)");
  }
}

}  // namespace

template <FieldScalar T>
HypersurfacePoint<T>::HypersurfacePoint(QuadricPoint<T> q, Conjugation<T> a, Vec<T> n,
                                        Matrix<T> s)
    : q_(std::move(q)), a_(std::move(a)), n_(std::move(n)), s_(std::move(s)) {
  const std::size_t d = q_.dim();
  xi_ = -model::apply_J(n_);
  p_ = Matrix<T>::identity(d);
  p_.add_outer(T(-1), n_, n_);
  phi_ = p_ * q_.J() * p_;
  b_ = p_ * a_.matrix() * p_;
  an_ = a_.apply(n_);
  axi_ = a_.apply(xi_);
  phi_axi_ = phi_ * axi_;
  alpha_ = dot(s_ * xi_, xi_);
  beta_ = dot(axi_, xi_);
}

template <FieldScalar T>
Vec<T> HypersurfacePoint<T>::tangent_part(const Vec<T>& x) const {
  Vec<T> out = x;
  out.axpy(-dot(x, n_), n_);
  return out;
}

template <FieldScalar T>
HypersurfacePoint<T> make_hypersurface_point(QuadricPoint<T> q, Conjugation<T> a, Vec<T> n,
                                             Matrix<T> s) {
  const std::size_t d = q.dim();
  if (n.size() != d || s.rows() != d || s.cols() != d || a.matrix().rows() != d) {
    throw DimensionMismatch("make_hypersurface_point: N, S and A must live in dimension 2m");
  }
  if (!model::is_unit(n)) throw PreconditionError("make_hypersurface_point: N is not a unit vector");
  const double scale = 1.0 + max_abs(s);
  if (!is_symmetric(s, kStructureTol * scale)) {
    throw PreconditionError("make_hypersurface_point: S is not symmetric");
  }
  if (!near_zero(T(norm_sq(s * n)), kStructureTol * scale * scale)) {
    throw PreconditionError("make_hypersurface_point: S does not annihilate N");
  }
  const Vec<T> xi = -model::apply_J(n);
  if (!near_zero(dot(a.apply(xi), n), 1e-12)) {
    throw PreconditionError(
        "make_hypersurface_point: conjugation is not adapted to N (g(A xi, N) != 0); "
        "use model::adapted_conjugation");
  }
  return HypersurfacePoint<T>(std::move(q), std::move(a), std::move(n), std::move(s));
}

template <FieldScalar T>
HypersurfacePoint<T> make_hypersurface_point(QuadricPoint<T> q, Vec<T> n, Matrix<T> s) {
  Conjugation<T> a = model::adapted_conjugation(q, n);
  return make_hypersurface_point(std::move(q), std::move(a), std::move(n), std::move(s));
}

template <FieldScalar T>
bool is_tangent(const HypersurfacePoint<T>& h, const Vec<T>& x, double tol) {
  return near_zero(dot(x, h.normal()), tol * (1.0 + max_abs(x)));
}

template <FieldScalar T>
HopfResult<T> is_hopf(const HypersurfacePoint<T>& h) {
  Vec<T> defect = h.apply_s(h.reeb());
  defect.axpy(-h.alpha(), h.reeb());
  Scalar r = vector_residual(defect);
  const bool hopf = residual_small<T>(r, kStructureTol * (1.0 + max_abs(h.shape())));
  return {hopf, h.alpha(), std::move(r)};
}

template <FieldScalar T>
ContactResult<T> is_contact(const HypersurfacePoint<T>& h) {
  const Matrix<T> lhs = h.shape() * h.phi() + h.phi() * h.shape();
  const T num = trace(lhs * h.phi().transpose());
  const T den = trace(h.phi() * h.phi().transpose());
  T c = num / (T(2) * den);
  Matrix<T> defect = lhs;
  defect -= (T(2) * c) * h.phi();
  Scalar r = frobenius_residual(defect);
  const double tol = kStructureTol * (1.0 + max_abs(h.shape()));
  const bool contact = residual_small<T>(r, tol) && !near_zero(c, tol);
  return {contact, std::move(c), std::move(r)};
}

template <FieldScalar T>
Vec<T> induced_curvature(const HypersurfacePoint<T>& h, const Vec<T>& x, const Vec<T>& y,
                         const Vec<T>& z) {
  require_tangent(h, x, "induced_curvature");
  require_tangent(h, y, "induced_curvature");
  require_tangent(h, z, "induced_curvature");
  Vec<T> r = h.tangent_part(model::ambient_curvature(h.quadric(), h.conjugation(), x, y, z));
  const Vec<T> sx = h.apply_s(x);
  const Vec<T> sy = h.apply_s(y);
  r.axpy(dot(sy, z), sx);
  r.axpy(-dot(sx, z), sy);
  return r;
}

template <FieldScalar T>
Matrix<T> normal_jacobi(const HypersurfacePoint<T>& h) {
  const T ann = dot(h.a_normal(), h.normal());
  return tangential_operator(h, [&](const Vec<T>& y) {
    Vec<T> r = y;
    r.axpy(T(3) * h.eta(y), h.reeb());
    r.axpy(ann, h.apply_b(y));
    r.axpy(h.rho(y), h.phi_a_reeb());
    r.axpy(-dot(h.a_reeb(), y), h.a_reeb());
    return r;
  });
}

template <FieldScalar T>
Matrix<T> normal_jacobi_projected(const HypersurfacePoint<T>& h) {
  return h.projector() * model::ambient_jacobi(h.quadric(), h.conjugation(), h.normal()) *
         h.projector();
}

template <FieldScalar T>
Matrix<T> structure_jacobi(const HypersurfacePoint<T>& h) {
  if (!is_hopf(h).hopf) {
    throw PreconditionError("structure_jacobi: the formula route requires a Hopf hypersurface");
  }
  const T& alpha = h.alpha();
  const T& beta = h.beta();
  return tangential_operator(h, [&](const Vec<T>& y) {
    const T eta = h.eta(y);
    Vec<T> r = y;
    r.axpy(-eta, h.reeb());
    r.axpy(beta, h.apply_b(y));
    r.axpy(-dot(h.a_reeb(), y), h.a_reeb());
    r.axpy(-dot(h.phi_a_reeb(), y), h.phi_a_reeb());
    r.axpy(alpha, h.apply_s(y));
    r.axpy(-alpha * alpha * eta, h.reeb());
    return r;
  });
}

template <FieldScalar T>
Matrix<T> structure_jacobi_gauss(const HypersurfacePoint<T>& h) {
  return tangential_operator(
      h, [&](const Vec<T>& y) { return induced_curvature(h, y, h.reeb(), h.reeb()); });
}

template <FieldScalar T>
Matrix<T> jacobi_rx(const HypersurfacePoint<T>& h, const Vec<T>& x) {
  require_tangent(h, x, "jacobi_rx");
  if (!near_zero(h.eta(x), kStructureTol * (1.0 + max_abs(x)))) {
    throw PreconditionError("jacobi_rx: the closed form needs X orthogonal to xi");
  }
  const Vec<T> phix = h.apply_phi(x);
  const Vec<T> bx = h.apply_b(x);
  const Vec<T> phibx = h.apply_phi(bx);
  const Vec<T> sx = h.apply_s(x);
  const T gxx = dot(x, x);
  const T gbxx = dot(bx, x);
  const T gphibxx = dot(phibx, x);
  const T gsxx = dot(sx, x);
  const T rhox = h.rho(x);
  return tangential_operator(h, [&](const Vec<T>& y) {
    const Vec<T> by = h.apply_b(y);
    const Vec<T> phiby = h.apply_phi(by);
    const T gphibyx = dot(phiby, x);
    Vec<T> r = gxx * y;
    r.axpy(-dot(x, y), x);
    r.axpy(T(-3) * dot(x, h.apply_phi(y)), phix);
    r.axpy(gbxx, by);
    r.axpy(-dot(bx, y), bx);
    r.axpy(gphibxx, phiby);
    r.axpy(-gphibxx * h.rho(y), h.reeb());
    r.axpy(-gphibyx, phibx);
    r.axpy(gphibyx * rhox, h.reeb());
    r.axpy(gsxx, h.apply_s(y));
    r.axpy(-dot(h.apply_s(y), x), sx);
    return r;
  });
}

template <FieldScalar T>
Matrix<T> jacobi_rx_gauss(const HypersurfacePoint<T>& h, const Vec<T>& x) {
  require_tangent(h, x, "jacobi_rx_gauss");
  return tangential_operator(h, [&](const Vec<T>& y) { return induced_curvature(h, y, x, x); });
}

template <FieldScalar T>
T hopf_identity_form(const HypersurfacePoint<T>& h, const Vec<T>& x, const Vec<T>& y) {
  const Vec<T> sx = h.apply_s(x);
  const Vec<T> phix = h.apply_phi(x);
  const T& alpha = h.alpha();
  const T& beta = h.beta();
  T v = T(2) * dot(h.apply_s(h.apply_phi(sx)), y);
  v -= alpha * (dot(h.apply_phi(sx), y) + dot(h.apply_s(phix), y));
  v -= T(2) * dot(phix, y);
  v += T(2) * dot(x, h.a_normal()) * dot(y, h.a_reeb());
  v -= T(2) * dot(y, h.a_normal()) * dot(x, h.a_reeb());
  v -= T(2) * dot(x, h.a_normal()) * beta * h.eta(y);
  v += T(2) * dot(y, h.a_normal()) * beta * h.eta(x);
  return v;
}

template <FieldScalar T>
Vec<T> hopf_identity_vector(const HypersurfacePoint<T>& h, const Vec<T>& x) {
  const Vec<T> sx = h.apply_s(x);
  const Vec<T> phix = h.apply_phi(x);
  const Vec<T> phisx = h.apply_phi(sx);
  Vec<T> v = T(2) * h.apply_s(phisx);
  v.axpy(-h.alpha(), phisx);
  v.axpy(-h.alpha(), h.apply_s(phix));
  v.axpy(T(-2), phix);
  v.axpy(T(2) * h.rho(x), h.a_reeb());
  v.axpy(T(-2) * dot(x, h.a_reeb()), h.a_normal());
  v.axpy(T(-2) * h.rho(x) * h.beta(), h.reeb());
  v.axpy(T(2) * h.beta() * h.eta(x), h.a_normal());
  return h.tangent_part(v);
}

#define QUADRIC_INSTANTIATE(T)                                                                    \
  template class HypersurfacePoint<T>;                                                            \
  template HypersurfacePoint<T> make_hypersurface_point(QuadricPoint<T>, Conjugation<T>, Vec<T>,  \
                                                        Matrix<T>);                               \
  template HypersurfacePoint<T> make_hypersurface_point(QuadricPoint<T>, Vec<T>, Matrix<T>);      \
  template bool is_tangent(const HypersurfacePoint<T>&, const Vec<T>&, double);                   \
  template HopfResult<T> is_hopf(const HypersurfacePoint<T>&);                                    \
  template ContactResult<T> is_contact(const HypersurfacePoint<T>&);                              \
  template Vec<T> induced_curvature(const HypersurfacePoint<T>&, const Vec<T>&, const Vec<T>&,    \
                                    const Vec<T>&);                                               \
  template Matrix<T> normal_jacobi(const HypersurfacePoint<T>&);                                  \
  template Matrix<T> normal_jacobi_projected(const HypersurfacePoint<T>&);                        \
  template Matrix<T> structure_jacobi(const HypersurfacePoint<T>&);                               \
  template Matrix<T> structure_jacobi_gauss(const HypersurfacePoint<T>&);                         \
  template Matrix<T> jacobi_rx(const HypersurfacePoint<T>&, const Vec<T>&);                       \
  template Matrix<T> jacobi_rx_gauss(const HypersurfacePoint<T>&, const Vec<T>&);                 \
  template T hopf_identity_form(const HypersurfacePoint<T>&, const Vec<T>&, const Vec<T>&);       \
  template Vec<T> hopf_identity_vector(const HypersurfacePoint<T>&, const Vec<T>&);

QUADRIC_INSTANTIATE(double)
QUADRIC_INSTANTIATE(QSqrt2)

#undef QUADRIC_INSTANTIATE

}  // namespace quadric::surface
