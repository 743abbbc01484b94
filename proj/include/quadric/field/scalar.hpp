#pragma once

#include <string>
#include <variant>

#include "quadric/field/qsqrt2.hpp"
#include "quadric/field/traits.hpp"

namespace quadric {

/// A scalar tagged with its arithmetic mode, for values whose mode is only
/// known at run time (check residuals, serialized reports).
///
/// Arithmetic across modes throws ModeMismatch; there is no coercion.
class Scalar {
 public:
  Scalar() : value_(0.0) {}
  Scalar(double x) : value_(x) {}          // NOLINT(google-explicit-constructor)
  Scalar(QSqrt2 x) : value_(std::move(x)) {}  // NOLINT(google-explicit-constructor)

  Mode mode() const { return std::holds_alternative<double>(value_) ? Mode::Float : Mode::Exact; }
  bool is_exact() const { return mode() == Mode::Exact; }

  /// Throws ModeMismatch when the held mode differs.
  double as_float() const;
  const QSqrt2& as_exact() const;

  bool is_zero() const;
  double to_double() const;
  /// "%.17g" for floats, "a + b*sqrt2" for exact values.
  std::string to_string() const;
  static Scalar parse(Mode mode, const std::string& text);

  Scalar inverse() const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x);
  friend Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }
  /// Mode-checked equality: comparing an exact with a float value throws.
  friend bool operator==(const Scalar& x, const Scalar& y);

 private:
  std::variant<QSqrt2, double> value_;
};

}  // namespace quadric
