#pragma once

#include <compare>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace quadric {

/// An element a + b·√2 of the real quadratic field ℚ(√2).
///
/// Both components are arbitrary-precision rationals, so every field
/// operation is exact. Ordering is the real ordering of the embedded value.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(mpq_class a, mpq_class b = 0);

  static QSqrt2 sqrt2() { return {0, 1}; }
  /// p/q + 0·√2; q must be nonzero.
  static QSqrt2 ratio(long p, long q);
  /// Inverse of to_string(): "a + b*sqrt2" with a, b in "p" or "p/q" form.
  /// A bare rational "p/q" is accepted as b = 0.
  static QSqrt2 parse(std::string_view text);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& surd_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  /// Exact sign of the real number a + b√2.
  int sign() const;
  QSqrt2 conjugate() const { return {a_, -b_}; }
  /// Field norm a² − 2b²; zero only for the zero element.
  mpq_class norm() const { return a_ * a_ - 2 * b_ * b_; }
  /// Throws DivisionByZero for the zero element.
  QSqrt2 inverse() const;
  double to_double() const;
  std::string to_string() const;

  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o);

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  friend QSqrt2 operator-(const QSqrt2& x) { return {-x.a_, -x.b_}; }

  friend bool operator==(const QSqrt2& x, const QSqrt2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const QSqrt2& x);

 private:
  mpq_class a_{0};
  mpq_class b_{0};
};

/// Parses "p", "-p/q", "0.125" or "1e-3" into an exact rational.
mpq_class parse_rational(std::string_view text);
std::string rational_to_string(const mpq_class& q);

}  // namespace quadric
