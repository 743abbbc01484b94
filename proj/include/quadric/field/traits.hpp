#pragma once

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>
#include <type_traits>

#include "quadric/field/qsqrt2.hpp"

namespace quadric {

enum class Mode { Exact, Float };

std::string_view to_string(Mode mode);

/// Compile-time description of the two scalar fields the engine runs over.
template <class T>
struct FieldTraits;

template <>
struct FieldTraits<double> {
  static constexpr Mode mode = Mode::Float;
  static bool is_zero(double x) { return x == 0.0; }
  static double to_double(double x) { return x; }
  static double ratio(long p, long q) { return static_cast<double>(p) / static_cast<double>(q); }
  static double from_rational(const mpq_class& q) { return q.get_d(); }
  static double sqrt2() { return std::sqrt(2.0); }
  static std::string to_string(double x);
};

template <>
struct FieldTraits<QSqrt2> {
  static constexpr Mode mode = Mode::Exact;
  static bool is_zero(const QSqrt2& x) { return x.is_zero(); }
  static double to_double(const QSqrt2& x) { return x.to_double(); }
  static QSqrt2 ratio(long p, long q) { return QSqrt2::ratio(p, q); }
  static QSqrt2 from_rational(const mpq_class& q) { return {q, 0}; }
  static QSqrt2 sqrt2() { return QSqrt2::sqrt2(); }
  static std::string to_string(const QSqrt2& x) { return x.to_string(); }
};

template <class T>
concept FieldScalar = std::same_as<T, double> || std::same_as<T, QSqrt2>;

template <FieldScalar T>
inline constexpr bool is_exact_v = FieldTraits<T>::mode == Mode::Exact;

template <FieldScalar T>
T constant(long p, long q = 1) {
  return FieldTraits<T>::ratio(p, q);
}

template <FieldScalar T>
double to_double(const T& x) {
  return FieldTraits<T>::to_double(x);
}

/// |x| as a double, for float-side tolerance tests.
template <FieldScalar T>
double magnitude(const T& x) {
  return std::abs(FieldTraits<T>::to_double(x));
}

/// Exact zero test in exact mode, |x| ≤ tol in float mode.
template <FieldScalar T>
bool near_zero(const T& x, double tol) {
  if constexpr (is_exact_v<T>) {
    return FieldTraits<T>::is_zero(x);
  } else {
    return std::abs(x) <= tol;
  }
}

}  // namespace quadric
