#include "quadric/field/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace quadric {

namespace {

double off_diagonal_norm(const Matrix<double>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Applies the rotation in the (p, q) plane that annihilates a(p, q).
void rotate(Matrix<double>& a, Matrix<double>& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

SymEigen sym_eigen(const Matrix<double>& m, JacobiOptions opts) {
  if (!m.is_square()) throw PreconditionError("sym_eigen: non-square " + m.shape());
  if (!is_symmetric(m, 1e-12 * (1.0 + max_abs(m)))) {
    throw PreconditionError("sym_eigen: input is not symmetric");
  }
  const std::size_t n = m.rows();
  Matrix<double> a = m;
  // Symmetrize exactly so rotations keep the mirror entries consistent.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (a(i, j) + a(j, i));
  Matrix<double> v = Matrix<double>::identity(n);

  const double scale = frobenius_norm(a);
  int sweep = 0;
  if (scale > 0.0) {
    while (off_diagonal_norm(a) > opts.off_diagonal_tol * scale) {
      if (sweep == opts.max_sweeps) {
        throw ConvergenceError("sym_eigen: no convergence after " + std::to_string(sweep) +
                               " sweeps");
      }
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
          if (a(p, q) != 0.0) rotate(a, v, p, q);
      ++sweep;
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  SymEigen out{std::vector<double>(n), Matrix<double>(n, n), sweep};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    out.vectors.set_column(k, v.column(order[k]));
  }
  return out;
}

std::vector<Vec<double>> gram_schmidt(const std::vector<Vec<double>>& vs) {
  constexpr double kPivotTol = 1e-10;
  std::vector<Vec<double>> out;
  out.reserve(vs.size());
  for (std::size_t k = 0; k < vs.size(); ++k) {
    Vec<double> w = vs[k];
    if (!out.empty()) w.check_size(out.front(), "gram_schmidt");
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : out) w.axpy(-dot(q, w), q);
    }
    const double nrm = norm(w);
    if (nrm < kPivotTol) {
      throw RankDeficient("gram_schmidt: vector " + std::to_string(k) +
                          " is linearly dependent on its predecessors");
    }
    w *= 1.0 / nrm;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (std::abs(w[i]) > 1e-12) {
        if (w[i] < 0) w *= -1.0;
        break;
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

double orthonormality_defect(const std::vector<Vec<double>>& vs) {
  double worst = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i; j < vs.size(); ++j)
      worst = std::max(worst, std::abs(dot(vs[i], vs[j]) - (i == j ? 1.0 : 0.0)));
  return worst;
}

}  // namespace quadric
