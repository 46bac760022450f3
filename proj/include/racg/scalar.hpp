#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <type_traits>

#include "racg/errors.hpp"
#include "racg/qsqrt2.hpp"

namespace racg {

template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using VecX = Vec<double>;
using MatX = Mat<double>;
using ExactVec = Vec<QSqrt2>;
using ExactMat = Mat<QSqrt2>;

template <class S>
inline constexpr bool is_exact_v = std::is_same_v<S, QSqrt2>;

inline double abs(double x) { return std::abs(x); }

inline double to_double(double x) { return x; }
inline double to_double(const QSqrt2& x) { return x.to_double(); }

inline int sign_of(double x, double tol = 0.0) { return x > tol ? 1 : (x < -tol ? -1 : 0); }
inline int sign_of(const QSqrt2& x, const QSqrt2& tol = QSqrt2(0)) {
  if (abs(x) <= tol) return 0;
  return x.sign();
}

inline bool near_zero(double x, double tol) { return std::abs(x) <= tol; }
inline bool near_zero(const QSqrt2& x, const QSqrt2& tol) { return abs(x) <= tol; }

// Square root in the scalar's own field; exact values must stay in Q(sqrt 2).
inline double scalar_sqrt(double x) { return std::sqrt(x); }
inline QSqrt2 scalar_sqrt(const QSqrt2& x) {
  auto r = exact_sqrt(x);
  if (!r) throw NotRepresentable("square root of " + x.str() + " is not in Q(sqrt2)");
  return *r;
}

template <class S>
S sqrt2_value() {
  if constexpr (is_exact_v<S>) {
    return QSqrt2::sqrt2();
  } else {
    return std::sqrt(2.0);
  }
}

template <class S>
VecX to_double(const Vec<S>& v) {
  VecX out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = to_double(v(i));
  return out;
}

template <class S>
MatX to_double(const Mat<S>& m) {
  MatX out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

template <class S>
Vec<S> make_vec(std::initializer_list<S> values) {
  Vec<S> v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& x : values) v(i++) = x;
  return v;
}

template <class Derived>
bool is_exactly_zero(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == S(0))) return false;
  return true;
}

// Largest absolute entry, as a double, for defect reporting.
template <class Derived>
double max_abs_entry(const Eigen::MatrixBase<Derived>& m) {
  double out = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out = std::max(out, std::abs(to_double(m(i, j))));
  return out;
}

}  // namespace racg
