#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace racg {

/**
 * Exact element a + b*sqrt(2) of the real quadratic field Q(sqrt 2), with
 * a and b arbitrary-precision rationals. Zero tests and ordering are exact.
 */
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(int a) : a_(a) {}
  QSqrt2(long a) : a_(a) {}
  QSqrt2(mpq_class a, mpq_class b = 0) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static QSqrt2 sqrt2() { return QSqrt2(0, 1); }
  static QSqrt2 fraction(long num, long den) { return QSqrt2(mpq_class(num, den)); }

  // Accepts "a", "b*sqrt2", "sqrt2", "a+b*sqrt2", "a-b*sqrt2" with rational a, b
  // written as integers or fractions. Throws std::invalid_argument otherwise.
  static QSqrt2 parse(std::string_view text);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& radical_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  int sign() const;

  QSqrt2 conjugate() const { return QSqrt2(a_, -b_); }
  // Field norm a^2 - 2 b^2.
  mpq_class norm() const { return a_ * a_ - 2 * b_ * b_; }
  QSqrt2 inverse() const;

  double to_double() const;
  // Canonical "a+b*sqrt2" form, always with both parts.
  std::string str() const;

  QSqrt2& operator+=(const QSqrt2& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QSqrt2& operator-=(const QSqrt2& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }

  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const QSqrt2& x) { return os << x.str(); }

 private:
  mpq_class a_{0};
  mpq_class b_{0};
};

inline QSqrt2 abs(const QSqrt2& x) { return x.sign() < 0 ? -x : x; }

// Square root inside Q(sqrt 2) when it exists there.
std::optional<QSqrt2> exact_sqrt(const QSqrt2& x);

}  // namespace racg

namespace Eigen {

template <>
struct NumTraits<racg::QSqrt2> : GenericNumTraits<racg::QSqrt2> {
  typedef racg::QSqrt2 Real;
  typedef racg::QSqrt2 NonInteger;
  typedef racg::QSqrt2 Literal;
  typedef racg::QSqrt2 Nested;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 20,
    MulCost = 60
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
