#include "quadric/surface/tube.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "quadric/field/eigen.hpp"

namespace quadric::surface {

namespace {

constexpr double kMaxRadius = std::numbers::pi / (2.0 * std::numbers::sqrt2);

}  // namespace

TubeSpec TubeSpec::from_radius(int m, double r) {
  if (m < 3) throw PreconditionError("TubeSpec: m must be at least 3");
  if (!(r > 0.0 && r < kMaxRadius)) {
    throw PreconditionError("TubeSpec: radius " + std::to_string(r) +
                            " outside (0, pi/(2 sqrt2))");
  }
  return TubeSpec(m, std::nullopt, r);
}

TubeSpec TubeSpec::from_u(int m, mpq_class u) {
  if (m < 3) throw PreconditionError("TubeSpec: m must be at least 3");
  if (sgn(u) <= 0) throw PreconditionError("TubeSpec: u must be positive, got " + u.get_str());
  return TubeSpec(m, std::move(u), std::nullopt);
}

const mpq_class& TubeSpec::u() const {
  if (!u_) throw PreconditionError("TubeSpec: an irrational radius has no exact u");
  return *u_;
}

double TubeSpec::radius() const {
  return r_ ? *r_ : std::atan(u_->get_d()) / std::numbers::sqrt2;
}

double TubeSpec::u_value() const {
  return u_ ? u_->get_d() : std::tan(std::numbers::sqrt2 * *r_);
}

std::string TubeSpec::describe() const {
  if (u_) return "u=" + u_->get_str();
  std::ostringstream os;
  os.precision(17);
  os << "r=" << *r_;
  return os.str();
}

template <FieldScalar T>
std::vector<Vec<T>> TypeBTube<T>::eigenbasis() const {
  std::vector<Vec<T>> out = t_alpha;
  out.insert(out.end(), t_lambda.begin(), t_lambda.end());
  out.insert(out.end(), t_mu.begin(), t_mu.end());
  return out;
}

template <FieldScalar T>
TypeBTube<T> build_type_B_tube(const TubeSpec& spec, const T& lambda_shift) {
  T u;
  if constexpr (is_exact_v<T>) {
    u = T(spec.u(), 0);
  } else {
    u = spec.u_value();
  }
  const T sqrt2 = FieldTraits<T>::sqrt2();
  T alpha = -sqrt2 / u;
  T lambda = sqrt2 * u;

  auto q = model::build_quadric_point<T>(spec.m());
  const int m = spec.m();
  Vec<T> n = q.e(0);
  Vec<T> xi = -model::apply_J(n);
  Matrix<T> s(q.dim(), q.dim());
  s.add_outer(alpha, xi, xi);
  std::vector<Vec<T>> t_lambda, t_mu;
  for (int i = 1; i < m; ++i) {
    s.add_outer(lambda + lambda_shift, q.e(i), q.e(i));
    t_lambda.push_back(q.e(i));
    t_mu.push_back(q.Je(i));
  }
  auto a = model::conjugation_quarter_turn(q, 0);
  auto h = make_hypersurface_point(std::move(q), std::move(a), std::move(n), std::move(s));
  return TypeBTube<T>{std::move(h), std::move(alpha), std::move(lambda), T(0),
                      {std::move(xi)}, std::move(t_lambda), std::move(t_mu)};
}

int EigenStructure::total_multiplicity() const {
  int total = 0;
  for (const auto& c : clusters) total += c.multiplicity;
  return total;
}

std::vector<Vec<double>> tangent_basis(const HypersurfacePoint<double>& h) {
  std::vector<Vec<double>> basis;
  const Vec<double>& n = h.normal();
  for (std::size_t k = 0; k < h.dim() && basis.size() + 1 < h.dim(); ++k) {
    Vec<double> v = Vec<double>::unit(h.dim(), k);
    for (int pass = 0; pass < 2; ++pass) {
      v.axpy(-dot(v, n), n);
      for (const auto& b : basis) v.axpy(-dot(v, b), b);
    }
    const double len = norm(v);
    if (len < 1e-6) continue;
    v *= 1.0 / len;
    basis.push_back(std::move(v));
  }
  if (basis.size() + 1 != h.dim()) throw RankDeficient("tangent_basis: could not span N^perp");
  return basis;
}

EigenStructure eigenstructure(const HypersurfacePoint<double>& h) {
  const auto basis = tangent_basis(h);
  const Matrix<double> t = Matrix<double>::from_columns(basis);
  Matrix<double> restricted = t.transpose() * h.shape() * t;
  // Symmetrize away rounding so sym_eigen's exact symmetry test passes.
  for (std::size_t i = 0; i < restricted.rows(); ++i) {
    for (std::size_t j = i + 1; j < restricted.cols(); ++j) {
      const double avg = 0.5 * (restricted(i, j) + restricted(j, i));
      restricted(i, j) = restricted(j, i) = avg;
    }
  }
  const SymEigen eig = sym_eigen(restricted);

  EigenStructure out;
  std::size_t k = 0;
  while (k < eig.values.size()) {
    std::size_t end = k + 1;
    while (end < eig.values.size() &&
           eig.values[end] - eig.values[end - 1] <= kClusterTol * (1.0 + std::abs(eig.values[end]))) {
      ++end;
    }
    const double lo = eig.values[k];
    const double hi = eig.values[end - 1];
    if (hi - lo > kClusterTol * (1.0 + std::abs(hi))) {
      throw ClusteringAmbiguity("eigenstructure: eigenvalues " + std::to_string(lo) + " .. " +
                                std::to_string(hi) +
                                " chain together but are further apart than the cluster tolerance");
    }
    EigenCluster c;
    double sum = 0.0;
    for (std::size_t i = k; i < end; ++i) {
      sum += eig.values[i];
      c.basis.push_back(t * eig.vectors.column(i));
    }
    c.value = sum / static_cast<double>(end - k);
    c.multiplicity = static_cast<int>(end - k);
    out.clusters.push_back(std::move(c));
    k = end;
  }
  return out;
}

template <FieldScalar T>
EigenTableCheck<T> verify_eigen_table(const HypersurfacePoint<T>& h,
                                      const std::vector<ExpectedEigenvalue<T>>& expected) {
  EigenTableCheck<T> out;
  out.matches = true;
  std::ostringstream msg;
  const std::size_t d = h.dim();
  int total = 0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    for (std::size_t j = i + 1; j < expected.size(); ++j) {
      if (near_zero(T(expected[i].value - expected[j].value), 1e-10)) {
        out.matches = false;
        msg << "expected values " << i << " and " << j << " coincide; ";
      }
    }
  }
  for (const auto& e : expected) {
    // {x : (S − λI)x = 0, g(x, N) = 0}, the λ-eigenspace inside TM.
    Matrix<T> sys(d + 1, d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) sys(r, c) = h.shape()(r, c);
      sys(r, r) -= e.value;
    }
    for (std::size_t c = 0; c < d; ++c) sys(d, c) = h.normal()[c];
    auto basis = null_space(sys, 1e-9);
    const int found = static_cast<int>(basis.size());
    total += found;
    if (found != e.multiplicity) {
      out.matches = false;
      msg << "eigenvalue " << FieldTraits<T>::to_string(e.value) << ": multiplicity " << found
          << ", expected " << e.multiplicity << "; ";
    }
    out.found.push_back(found);
    out.bases.push_back(std::move(basis));
  }
  if (total != static_cast<int>(d) - 1) {
    out.matches = false;
    msg << "multiplicities sum to " << total << ", dim TM is " << d - 1 << "; ";
  }
  out.message = msg.str();
  if (out.message.size() >= 2) out.message.resize(out.message.size() - 2);
  return out;
}

#define QUADRIC_INSTANTIATE(T)                                                             \
  template struct TypeBTube<T>;                                                            \
  template TypeBTube<T> build_type_B_tube(const TubeSpec&, const T&);                      \
  template EigenTableCheck<T> verify_eigen_table(const HypersurfacePoint<T>&,              \
                                                 const std::vector<ExpectedEigenvalue<T>>&);

QUADRIC_INSTANTIATE(double)
QUADRIC_INSTANTIATE(QSqrt2)

#undef QUADRIC_INSTANTIATE

}  // namespace quadric::surface
