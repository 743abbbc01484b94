#pragma once

// Small dense vectors and matrices over double or Q(sqrt2).
//
// Sizes here are at most a few dozen, so everything is a plain row-major
// std::vector with value semantics. Operations check dimensions and throw
// DimensionMismatch on misuse.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "quadric/field/error.hpp"
#include "quadric/field/scalar.hpp"
#include "quadric/field/traits.hpp"

namespace quadric {

template <FieldScalar T>
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : data_(n, T(0)) {}
  Vec(std::initializer_list<T> xs) : data_(xs) {}
  explicit Vec(std::vector<T> xs) : data_(std::move(xs)) {}

  static Vec unit(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = T(1);
    return v;
  }

  std::size_t size() const { return data_.size(); }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }
  const std::vector<T>& values() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const T& x) { return FieldTraits<T>::is_zero(x); });
  }

  Vec& operator+=(const Vec& o) {
    check_size(o, "+=");
    for (std::size_t i = 0; i < size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    check_size(o, "-=");
    for (std::size_t i = 0; i < size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Vec& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  /// this += s * o, without a temporary.
  Vec& axpy(const T& s, const Vec& o) {
    check_size(o, "axpy");
    if (FieldTraits<T>::is_zero(s)) return *this;
    for (std::size_t i = 0; i < size(); ++i) data_[i] += s * o.data_[i];
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator-(Vec a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Vec operator*(const T& s, Vec a) { return a *= s; }
  friend Vec operator*(Vec a, const T& s) { return a *= s; }
  friend bool operator==(const Vec& a, const Vec& b) { return a.data_ == b.data_; }

  void check_size(const Vec& o, const char* op) const {
    if (o.size() != size()) {
      throw DimensionMismatch(std::string("Vec ") + op + ": sizes " + std::to_string(size()) +
                              " and " + std::to_string(o.size()));
    }
  }

 private:
  std::vector<T> data_;
};

template <FieldScalar T>
T dot(const Vec<T>& u, const Vec<T>& v) {
  u.check_size(v, "dot");
  T s(0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!FieldTraits<T>::is_zero(u[i]) && !FieldTraits<T>::is_zero(v[i])) s += u[i] * v[i];
  }
  return s;
}

template <FieldScalar T>
T norm_sq(const Vec<T>& u) {
  return dot(u, u);
}

inline double norm(const Vec<double>& u) { return std::sqrt(norm_sq(u)); }

template <FieldScalar T>
double max_abs(const Vec<T>& u) {
  double m = 0.0;
  for (const auto& x : u) m = std::max(m, magnitude(x));
  return m;
}

template <FieldScalar T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("Matrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Matrix from_columns(const std::vector<Vec<T>>& cols) {
    if (cols.empty()) return {};
    Matrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<T> column(std::size_t j) const {
    Vec<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec<T> row(std::size_t i) const {
    Vec<T> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }
  void set_column(std::size_t j, const Vec<T>& v) {
    if (v.size() != rows_) throw DimensionMismatch("Matrix::set_column: wrong length");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const T& x) { return FieldTraits<T>::is_zero(x); });
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o, "+=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o, "-=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  /// this += s * u vᵀ.
  Matrix& add_outer(const T& s, const Vec<T>& u, const Vec<T>& v) {
    if (u.size() != rows_ || v.size() != cols_) throw DimensionMismatch("Matrix::add_outer");
    for (std::size_t i = 0; i < rows_; ++i) {
      if (FieldTraits<T>::is_zero(u[i])) continue;
      const T su = s * u[i];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!FieldTraits<T>::is_zero(v[j])) (*this)(i, j) += su * v[j];
      }
    }
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionMismatch("mat_mul: " + a.shape() + " times " + b.shape());
    }
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (FieldTraits<T>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!FieldTraits<T>::is_zero(b(k, j))) c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend Vec<T> operator*(const Matrix& a, const Vec<T>& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("mat_vec: " + a.shape() + " times vector");
    Vec<T> r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      T s(0);
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (!FieldTraits<T>::is_zero(a(i, j)) && !FieldTraits<T>::is_zero(v[j])) s += a(i, j) * v[j];
      }
      r[i] = std::move(s);
    }
    return r;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DimensionMismatch(std::string("Matrix ") + op + ": " + shape() + " vs " + o.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <FieldScalar T>
Matrix<T> outer(const Vec<T>& u, const Vec<T>& v) {
  Matrix<T> m(u.size(), v.size());
  m.add_outer(T(1), u, v);
  return m;
}

/// AB − BA.
template <FieldScalar T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionMismatch("commutator: " + a.shape() + " and " + b.shape());
  }
  return a * b - b * a;
}

/// Σ entry²; exact in Q(sqrt2) because entries are real.
template <FieldScalar T>
T frobenius_sq(const Matrix<T>& a) {
  T s(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!FieldTraits<T>::is_zero(a(i, j))) s += a(i, j) * a(i, j);
  return s;
}

inline double frobenius_norm(const Matrix<double>& a) { return std::sqrt(frobenius_sq(a)); }

/// Frobenius norm in float mode, squared Frobenius norm in exact mode: the
/// square root of a Q(sqrt2) element generally leaves the field.
template <FieldScalar T>
Scalar frobenius_residual(const Matrix<T>& a) {
  if constexpr (is_exact_v<T>) {
    return frobenius_sq(a);
  } else {
    return frobenius_norm(a);
  }
}

template <FieldScalar T>
double max_abs(const Matrix<T>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, magnitude(a(i, j)));
  return m;
}

/// Exact symmetry in exact mode; |Mij − Mji| ≤ tol in float mode.
template <FieldScalar T>
bool is_symmetric(const Matrix<T>& a, double tol = 0.0) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if constexpr (is_exact_v<T>) {
        if (a(i, j) != a(j, i)) return false;
      } else {
        if (std::abs(a(i, j) - a(j, i)) > tol) return false;
      }
    }
  }
  return true;
}

template <FieldScalar T>
T trace(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionMismatch("trace of non-square " + a.shape());
  T s(0);
  for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

/// Reduced row echelon form. Pivots are exact nonzeros in exact mode and
/// entries above `tol` (largest-magnitude pivoting) in float mode.
template <FieldScalar T>
std::pair<Matrix<T>, std::vector<std::size_t>> row_echelon(Matrix<T> a, double tol = 1e-12) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t best = a.rows();
    double best_mag = 0.0;
    for (std::size_t i = r; i < a.rows(); ++i) {
      if constexpr (is_exact_v<T>) {
        if (!a(i, c).is_zero()) {
          best = i;
          break;
        }
      } else {
        if (std::abs(a(i, c)) > std::max(tol, best_mag)) {
          best = i;
          best_mag = std::abs(a(i, c));
        }
      }
    }
    if (best == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(best, j));
    const T inv = T(1) / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || FieldTraits<T>::is_zero(a(i, c))) continue;
      const T f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

template <FieldScalar T>
std::size_t rank(const Matrix<T>& a, double tol = 1e-12) {
  return row_echelon(a, tol).second.size();
}

/// Basis of {x : a x = 0}, one vector per free column (not orthonormalized).
template <FieldScalar T>
std::vector<Vec<T>> null_space(const Matrix<T>& a, double tol = 1e-12) {
  auto [r, pivots] = row_echelon(a, tol);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<T>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<T> v(a.cols());
    v[free] = T(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace quadric
