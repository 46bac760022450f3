#pragma once

#include <string>
#include <vector>

#include "racg/scalar.hpp"

namespace racg {

/** Diagonal quadratic form on R^dim; signature entries are -1, 0 or +1. */
struct QuadraticSpace {
  int dim = 0;
  std::vector<int> signature;

  QuadraticSpace() = default;
  explicit QuadraticSpace(std::vector<int> sig);

  // Form (-1, +1, ..., +1) on R^{n+1}, the ambient space of H^n.
  static QuadraticSpace hyperbolic(int n);
  // Form (-1, +1, ..., +1, -1) on R^{n+1}, the ambient space of AdS^n.
  static QuadraticSpace anti_de_sitter(int n);
  // Degenerate form (-1, +1, ..., +1, 0) on R^{n+1}, the ambient space of HP^n.
  static QuadraticSpace half_pipe(int n);
  // Minkowski space R^{1,dim-1}.
  static QuadraticSpace minkowski(int dim);

  template <class S>
  Mat<S> gram() const {
    Mat<S> g = Mat<S>::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) g(i, i) = S(signature[i]);
    return g;
  }

  friend bool operator==(const QuadraticSpace&, const QuadraticSpace&) = default;
};

enum class PairClassHyp { Intersecting, TangentAtInfinity, Disjoint };

enum class PairClassAdS {
  Intersecting,
  TangentAtInfinity,
  Disjoint,
  SpacelikeIntersection,
  LightlikeIntersection,
  TimelikeIntersection
};

enum class HyperplaneType { Spacelike, Timelike, Lightlike };

std::string to_string(PairClassHyp c);
std::string to_string(PairClassAdS c);
std::string to_string(HyperplaneType c);

template <class S>
void check_dimension(const QuadraticSpace& space, const Vec<S>& x) {
  if (x.size() != space.dim) {
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) + " in space of dimension " +
                            std::to_string(space.dim));
  }
}

template <class S>
S eval_bilinear(const QuadraticSpace& space, const Vec<S>& x, const Vec<S>& y) {
  check_dimension(space, x);
  check_dimension(space, y);
  S sum(0);
  for (int i = 0; i < space.dim; ++i) {
    if (space.signature[i] == 0) continue;
    S term = x(i) * y(i);
    if (space.signature[i] < 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

template <class S>
S eval_form(const QuadraticSpace& space, const Vec<S>& x) {
  return eval_bilinear(space, x, x);
}

// Largest absolute coordinate difference.
template <class S>
S max_coordinate_distance(const Vec<S>& x, const Vec<S>& y) {
  S out(0);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    S d = abs(x(i) - y(i));
    if (d > out) out = d;
  }
  return out;
}

template <class S>
bool equal_up_to_sign(const Vec<S>& x, const Vec<S>& y, const S& tol) {
  if (x.size() != y.size()) return false;
  return max_coordinate_distance<S>(x, y) <= tol || max_coordinate_distance<S>(x, Vec<S>(-y)) <= tol;
}

/** Matrix of v -> v - 2 b(X,v)/q(X) X. */
template <class S>
Mat<S> reflection_matrix(const QuadraticSpace& space, const Vec<S>& normal, const S& tol = S(0)) {
  check_dimension(space, normal);
  S qx = eval_form(space, normal);
  if (abs(qx) <= tol) throw DegenerateNormal("normal vector has q(X) = 0");
  Mat<S> m = Mat<S>::Identity(space.dim, space.dim);
  S scale = S(2) / qx;
  for (int j = 0; j < space.dim; ++j) {
    if (space.signature[j] == 0) continue;
    S coeff = scale * S(space.signature[j]) * normal(j);
    for (int i = 0; i < space.dim; ++i) m(i, j) -= coeff * normal(i);
  }
  return m;
}

template <class S>
bool preserves_form(const QuadraticSpace& space, const Mat<S>& m, const S& tol = S(0)) {
  Mat<S> g = space.gram<S>();
  Mat<S> defect = m.transpose() * g * m - g;
  if constexpr (is_exact_v<S>) {
    if (tol == S(0)) return is_exactly_zero(defect);
  }
  return max_abs_entry(defect) <= to_double(tol);
}

template <class S>
PairClassHyp classify_pair_hyp(const Vec<S>& x, const Vec<S>& y, const S& tol) {
  QuadraticSpace space = QuadraticSpace::hyperbolic(static_cast<int>(x.size()) - 1);
  check_dimension(space, y);
  if (abs(eval_form(space, x) - S(1)) > tol || abs(eval_form(space, y) - S(1)) > tol) {
    throw NotUnitSpacelike("classify_pair_hyp expects q(X) = q(Y) = 1");
  }
  if (equal_up_to_sign(x, y, tol)) throw CoincidentHyperplanes("X = +-Y");
  S b = abs(eval_bilinear(space, x, y));
  if (b < S(1) - tol) return PairClassHyp::Intersecting;
  if (b > S(1) + tol) return PairClassHyp::Disjoint;
  return PairClassHyp::TangentAtInfinity;
}

template <class S>
HyperplaneType hyperplane_type_ads(const Vec<S>& x, const S& tol) {
  QuadraticSpace space = QuadraticSpace::anti_de_sitter(static_cast<int>(x.size()) - 1);
  S q = eval_form(space, x);
  if (q < -tol) return HyperplaneType::Spacelike;
  if (q > tol) return HyperplaneType::Timelike;
  return HyperplaneType::Lightlike;
}

template <class S>
PairClassAdS classify_pair_ads(const Vec<S>& x, const Vec<S>& y, const S& tol) {
  QuadraticSpace space = QuadraticSpace::anti_de_sitter(static_cast<int>(x.size()) - 1);
  check_dimension(space, y);
  S qx = eval_form(space, x), qy = eval_form(space, y);
  if (abs(abs(qx) - S(1)) > tol || abs(abs(qy) - S(1)) > tol) {
    throw NotUnitNormal("classify_pair_ads expects q(X), q(Y) in {-1, +1}");
  }
  if ((qx < S(0)) != (qy < S(0))) throw MixedTypePair("one spacelike and one timelike normal");
  if (equal_up_to_sign(x, y, tol)) throw CoincidentHyperplanes("X = +-Y");
  S b = abs(eval_bilinear(space, x, y));
  bool spacelike_pair = qx < S(0);
  if (b > S(1) + tol) {
    return spacelike_pair ? PairClassAdS::Intersecting : PairClassAdS::SpacelikeIntersection;
  }
  if (b < S(1) - tol) {
    return spacelike_pair ? PairClassAdS::Disjoint : PairClassAdS::TimelikeIntersection;
  }
  return spacelike_pair ? PairClassAdS::TangentAtInfinity : PairClassAdS::LightlikeIntersection;
}

template <class S>
bool commute_test(const QuadraticSpace& space, const Vec<S>& x, const Vec<S>& y, const S& tol) {
  if (abs(eval_form(space, x)) <= tol || abs(eval_form(space, y)) <= tol) {
    throw DegenerateNormal("commute_test needs non-null normals");
  }
  if (equal_up_to_sign(x, y, tol)) return true;
  return abs(eval_bilinear(space, x, y)) <= tol;
}

}  // namespace racg
