#include "quadric/field/qsqrt2.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "quadric/field/error.hpp"

namespace quadric {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw PreconditionError("not an integer: '" + std::string(s) + "'");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw PreconditionError("empty rational");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class p = parse_integer(trim(s.substr(0, slash)));
    mpz_class q = parse_integer(trim(s.substr(slash + 1)));
    if (q == 0) throw DivisionByZero("rational with zero denominator: '" + std::string(s) + "'");
    mpq_class r(p, q);
    r.canonicalize();
    return r;
  }

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exponent = parse_integer(s.substr(e + 1)).get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw PreconditionError("not a rational: '" + std::string(text) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) throw PreconditionError("not a rational: '" + std::string(text) + "'");
    digits = std::string(s);
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpq_class r;
  if (exponent >= 0) {
    r = mpq_class(mantissa * pow10(static_cast<unsigned long>(exponent)));
  } else {
    r = mpq_class(mantissa, pow10(static_cast<unsigned long>(-exponent)));
  }
  r.canonicalize();
  return r;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(10); }

QSqrt2::QSqrt2(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

QSqrt2 QSqrt2::ratio(long p, long q) {
  if (q == 0) throw DivisionByZero("QSqrt2::ratio with zero denominator");
  mpq_class r(p, q);
  r.canonicalize();
  return {r, 0};
}

QSqrt2 QSqrt2::parse(std::string_view text) {
  std::string_view s = trim(text);
  constexpr std::string_view kSurd = "*sqrt2";
  auto plus = s.find(" + ");
  if (plus == std::string_view::npos) {
    if (s.size() > kSurd.size() && s.substr(s.size() - kSurd.size()) == kSurd) {
      return {0, parse_rational(s.substr(0, s.size() - kSurd.size()))};
    }
    return {parse_rational(s), 0};
  }
  std::string_view head = trim(s.substr(0, plus));
  std::string_view tail = trim(s.substr(plus + 3));
  if (tail.size() <= kSurd.size() || tail.substr(tail.size() - kSurd.size()) != kSurd) {
    throw PreconditionError("malformed Q(sqrt2) literal: '" + std::string(text) + "'");
  }
  return {parse_rational(head), parse_rational(tail.substr(0, tail.size() - kSurd.size()))};
}

int QSqrt2::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sa >= 0 && sb >= 0) return (sa | sb) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite signs: compare a² with 2b².
  const int cmp_sq = cmp(a_ * a_, 2 * b_ * b_);
  return sa > 0 ? cmp_sq : -cmp_sq;
}

QSqrt2 QSqrt2::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt2)");
  const mpq_class n = norm();
  return {a_ / n, -b_ / n};
}

double QSqrt2::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

std::string QSqrt2::to_string() const {
  return rational_to_string(a_) + " + " + rational_to_string(b_) + "*sqrt2";
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  mpq_class a = a_ * o.a_ + 2 * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

std::ostream& operator<<(std::ostream& os, const QSqrt2& x) { return os << x.to_string(); }

}  // namespace quadric
