#include "quadric/field/scalar.hpp"

#include <cstdio>
#include <cstdlib>

#include "quadric/field/error.hpp"

namespace quadric {

std::string_view to_string(Mode mode) { return mode == Mode::Exact ? "exact" : "float"; }

std::string FieldTraits<double>::to_string(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void require_same_mode(const Scalar& x, const Scalar& y, const char* op) {
  if (x.mode() != y.mode()) {
    throw ModeMismatch(std::string("Scalar ") + op + ": cannot combine " +
                       std::string(to_string(x.mode())) + " and " +
                       std::string(to_string(y.mode())) + " values");
  }
}

}  // namespace

double Scalar::as_float() const {
  if (const double* d = std::get_if<double>(&value_)) return *d;
  throw ModeMismatch("Scalar holds an exact value, float requested");
}

const QSqrt2& Scalar::as_exact() const {
  if (const QSqrt2* q = std::get_if<QSqrt2>(&value_)) return *q;
  throw ModeMismatch("Scalar holds a float value, exact requested");
}

bool Scalar::is_zero() const {
  return is_exact() ? as_exact().is_zero() : as_float() == 0.0;
}

double Scalar::to_double() const {
  return is_exact() ? as_exact().to_double() : as_float();
}

std::string Scalar::to_string() const {
  return is_exact() ? as_exact().to_string() : FieldTraits<double>::to_string(as_float());
}

Scalar Scalar::parse(Mode mode, const std::string& text) {
  if (mode == Mode::Exact) return QSqrt2::parse(text);
  char* end = nullptr;
  const double x = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw PreconditionError("not a float literal: '" + text + "'");
  }
  return x;
}

Scalar Scalar::inverse() const {
  if (is_exact()) return as_exact().inverse();
  return 1.0 / as_float();
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  require_same_mode(x, y, "add");
  if (x.is_exact()) return x.as_exact() + y.as_exact();
  return x.as_float() + y.as_float();
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  require_same_mode(x, y, "mul");
  if (x.is_exact()) return x.as_exact() * y.as_exact();
  return x.as_float() * y.as_float();
}

Scalar operator-(const Scalar& x) {
  if (x.is_exact()) return -x.as_exact();
  return -x.as_float();
}

bool operator==(const Scalar& x, const Scalar& y) {
  require_same_mode(x, y, "eq");
  if (x.is_exact()) return x.as_exact() == y.as_exact();
  return x.as_float() == y.as_float();
}

}  // namespace quadric
