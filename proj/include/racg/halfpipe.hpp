#pragma once

#include <optional>
#include <string>
#include <vector>

#include "racg/coxeter.hpp"
#include "racg/geometry.hpp"

namespace racg {

/** Affine isometry x -> A x + v of Minkowski space R^{1,n-1}. */
template <class S>
struct MinkowskiIsometry {
  Mat<S> linear;
  Vec<S> translation;

  static MinkowskiIsometry identity(int dim) {
    return {Mat<S>::Identity(dim, dim), Vec<S>::Zero(dim)};
  }
  int dim() const { return static_cast<int>(linear.rows()); }

  // (A1, v1) o (A2, v2) = (A1 A2, A1 v2 + v1)
  MinkowskiIsometry compose(const MinkowskiIsometry& other) const {
    return {Mat<S>(linear * other.linear), Vec<S>(linear * other.translation + translation)};
  }
  Vec<S> apply(const Vec<S>& x) const { return linear * x + translation; }
};

template <class S>
bool isometries_equal(const MinkowskiIsometry<S>& a, const MinkowskiIsometry<S>& b, const S& tol) {
  if constexpr (is_exact_v<S>) {
    if (tol == S(0)) return is_exactly_zero(a.linear - b.linear) && is_exactly_zero(a.translation - b.translation);
  }
  double t = to_double(tol);
  return max_abs_entry(a.linear - b.linear) <= t && max_abs_entry(a.translation - b.translation) <= t;
}

/**
 * Projective matrix [[A, 0], [-v^T J A, 1]] acting on R^{n+1} with the
 * degenerate form (-1, +1, ..., +1, 0). Group homomorphism from the affine model.
 */
template <class S>
Mat<S> phi_to_projective(const MinkowskiIsometry<S>& g, const S& tol = S(0)) {
  const int n = g.dim();
  QuadraticSpace mink = QuadraticSpace::minkowski(n);
  if (g.translation.size() != n) throw DimensionMismatch("translation length");
  if (!preserves_form(mink, g.linear, tol)) throw NotFormPreserving("linear part does not preserve b1");
  Mat<S> out = Mat<S>::Zero(n + 1, n + 1);
  out.topLeftCorner(n, n) = g.linear;
  Mat<S> j = mink.gram<S>();
  out.bottomLeftCorner(1, n) = -(g.translation.transpose() * j * g.linear);
  out(n, n) = S(1);
  return out;
}

enum class HPReflectionKind { NonDegenerate, Degenerate };

/**
 * Reflection of half-pipe space: either dual to a point p of Minkowski space,
 * realized as (-id, 2p), or degenerate, realized as (r_X, v) with q(X) = 1 and v
 * parallel to X.
 */
template <class S>
struct HPReflection {
  HPReflectionKind kind = HPReflectionKind::NonDegenerate;
  Vec<S> point;        // non-degenerate: the dual point p
  Vec<S> normal;       // degenerate: unit spacelike X
  Vec<S> translation;  // degenerate: v in span(X)

  static HPReflection nondegenerate(const Vec<S>& p) {
    HPReflection r;
    r.kind = HPReflectionKind::NonDegenerate;
    r.point = p;
    return r;
  }

  static HPReflection degenerate(const Vec<S>& x, const Vec<S>& v, const S& tol = S(0)) {
    QuadraticSpace mink = QuadraticSpace::minkowski(static_cast<int>(x.size()));
    if (abs(eval_form(mink, x) - S(1)) > tol) throw NotUnitSpacelike("degenerate reflection needs q(X) = 1");
    // v must be parallel to X: v - b(X, v) X = 0.
    Vec<S> rest = v - eval_bilinear(mink, x, v) * x;
    bool parallel;
    if constexpr (is_exact_v<S>) {
      parallel = tol == S(0) ? is_exactly_zero(rest) : max_abs_entry(rest) <= to_double(tol);
    } else {
      parallel = max_abs_entry(rest) <= tol;
    }
    if (!parallel) throw PatternViolation("translation not parallel to X");
    HPReflection r;
    r.kind = HPReflectionKind::Degenerate;
    r.normal = x;
    r.translation = v;
    return r;
  }

  MinkowskiIsometry<S> isometry() const {
    if (kind == HPReflectionKind::NonDegenerate) {
      const int n = static_cast<int>(point.size());
      return {Mat<S>(-Mat<S>::Identity(n, n)), Vec<S>(S(2) * point)};
    }
    QuadraticSpace mink = QuadraticSpace::minkowski(static_cast<int>(normal.size()));
    return {reflection_matrix(mink, normal), translation};
  }

  // Linear functional whose kernel is the fixed hyperplane in projective coordinates.
  Vec<S> dual_functional() const {
    const int n = static_cast<int>(kind == HPReflectionKind::NonDegenerate ? point.size() : normal.size());
    Mat<S> j = QuadraticSpace::minkowski(n).gram<S>();
    Vec<S> out(n + 1);
    if (kind == HPReflectionKind::NonDegenerate) {
      out.head(n) = j * point;
      out(n) = S(1);
    } else {
      out.head(n) = j * normal;
      out(n) = S(0);
    }
    return out;
  }
};

template <class S>
bool hp_commute(const MinkowskiIsometry<S>& a, const MinkowskiIsometry<S>& b, const S& tol) {
  return isometries_equal(a.compose(b), b.compose(a), tol);
}

// Closed-form test for (r_X, v) against (-id, w): (id - r_X) w = 2 v.
template <class S>
bool hp_commute_closed_form(const Vec<S>& x, const Vec<S>& v, const Vec<S>& w, const S& tol) {
  QuadraticSpace mink = QuadraticSpace::minkowski(static_cast<int>(x.size()));
  Mat<S> r = reflection_matrix(mink, x);
  Vec<S> lhs = (Mat<S>::Identity(x.size(), x.size()) - r) * w - S(2) * v;
  if constexpr (is_exact_v<S>) {
    if (tol == S(0)) return is_exactly_zero(lhs);
  }
  return max_abs_entry(lhs) <= to_double(tol);
}

enum class DualPointClass { Intersect, BoundaryTangent, Disjoint };
std::string to_string(DualPointClass c);

/** Position of the hyperplanes dual to p and q: sign of q1(p - q). */
template <class S>
DualPointClass classify_hp_dual_points(const Vec<S>& p, const Vec<S>& q, const S& tol) {
  if (p.size() != q.size()) throw DimensionMismatch("dual points of different dimension");
  QuadraticSpace mink = QuadraticSpace::minkowski(static_cast<int>(p.size()));
  S value = eval_form(mink, Vec<S>(p - q));
  if (value > tol) return DualPointClass::Intersect;
  if (value < -tol) return DualPointClass::Disjoint;
  return DualPointClass::BoundaryTangent;
}

/** Linear part and translation part of a representation into the Minkowski affine group. */
template <class S>
struct HPRepresentation {
  std::vector<Mat<S>> linear;
  std::vector<Vec<S>> translation;

  int size() const { return static_cast<int>(linear.size()); }
  MinkowskiIsometry<S> isometry(int g) const { return {linear[g], translation[g]}; }
  std::vector<MinkowskiIsometry<S>> isometries() const {
    std::vector<MinkowskiIsometry<S>> out;
    for (int g = 0; g < size(); ++g) out.push_back(isometry(g));
    return out;
  }
  std::vector<Mat<S>> projective() const {
    std::vector<Mat<S>> out;
    for (int g = 0; g < size(); ++g) {
      if constexpr (is_exact_v<S>) {
        out.push_back(phi_to_projective(isometry(g)));
      } else {
        out.push_back(phi_to_projective(isometry(g), S(1e-12)));
      }
    }
    return out;
  }
  // Translation part stacked generator by generator.
  Vec<S> stacked_translation() const {
    const int d = size() ? static_cast<int>(translation.front().size()) : 0;
    Vec<S> out(size() * d);
    for (int g = 0; g < size(); ++g) out.segment(g * d, d) = translation[g];
    return out;
  }
  HPReflection<S> reflection(int g) const;
};

template <class S>
HPReflection<S> HPRepresentation<S>::reflection(int g) const {
  const Mat<S>& a = linear[g];
  const int n = static_cast<int>(a.rows());
  Mat<S> plus_id = a + Mat<S>::Identity(n, n);
  bool minus_identity = is_exact_v<S> ? is_exactly_zero(plus_id) : max_abs_entry(plus_id) < 1e-12;
  if (minus_identity) {
    return HPReflection<S>::nondegenerate(Vec<S>(translation[g] / S(2)));
  }
  // A = id - 2 X X^T J: recover X from a nonzero column of id - A.
  QuadraticSpace mink = QuadraticSpace::minkowski(n);
  Mat<S> p = Mat<S>::Identity(n, n) - a;
  Eigen::Index best = 0;
  double best_norm = -1.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    double v = max_abs_entry(p.col(c));
    if (v > best_norm) {
      best_norm = v;
      best = c;
    }
  }
  Vec<S> col = p.col(best);
  // col = 2 X (X^T J e_c); rescale to q = 1.
  S q = eval_form(mink, col);
  Vec<S> x = col / scalar_sqrt(q);
  if constexpr (is_exact_v<S>) {
    return HPReflection<S>::degenerate(x, translation[g]);
  } else {
    return HPReflection<S>::degenerate(x, translation[g], 1e-9);
  }
}

/** Linear part of the collapsed representation: -id on i+, r_{v_i} on i-, r_{v_X} on letters. */
template <class S>
std::vector<Mat<S>> collapsed_linear_part() {
  auto v = cuboctahedron_vectors<S>();
  QuadraticSpace mink = QuadraticSpace::minkowski(4);
  std::vector<Mat<S>> out(kGamma22Size);
  for (int i = 0; i < 8; ++i) {
    out[positive_index(i)] = -Mat<S>::Identity(4, 4);
    out[negative_index(i)] = reflection_matrix(mink, v[i]);
  }
  for (int l = 0; l < 6; ++l) out[kLetterOffset + l] = reflection_matrix(mink, v[8 + l]);
  return out;
}

/** Translation cocycle: (-1)^i lambda v_i on i+ and i-, zero on letters. */
template <class S>
std::vector<Vec<S>> vertical_translation(const S& lambda) {
  auto v = cuboctahedron_vectors<S>();
  std::vector<Vec<S>> out(kGamma22Size, Vec<S>::Zero(4));
  for (int i = 0; i < 8; ++i) {
    Vec<S> t = (i % 2 == 0 ? lambda : S(-lambda)) * v[i];
    out[positive_index(i)] = t;
    out[negative_index(i)] = t;
  }
  return out;
}

template <class S>
HPRepresentation<S> rho_lambda(const S& lambda) {
  return {collapsed_linear_part<S>(), vertical_translation<S>(lambda)};
}

struct HPPairReport {
  enum class Case { BothDegenerate, BothNonDegenerate, Mixed };
  Case kind = Case::Mixed;
  std::optional<PairClassHyp> projected;  // degenerate pair: position of the projections in H^{n-1}
  std::optional<DualPointClass> dual;     // non-degenerate pair: position from the dual points
  bool commuting = false;
  std::string describe() const;
};

template <class S>
HPPairReport classify_hp_reflection_pair(const HPReflection<S>& a, const HPReflection<S>& b, const S& tol) {
  HPPairReport rep;
  rep.commuting = hp_commute(a.isometry(), b.isometry(), tol);
  if (a.kind == HPReflectionKind::Degenerate && b.kind == HPReflectionKind::Degenerate) {
    rep.kind = HPPairReport::Case::BothDegenerate;
    rep.projected = classify_pair_hyp(a.normal, b.normal, tol);
  } else if (a.kind == HPReflectionKind::NonDegenerate && b.kind == HPReflectionKind::NonDegenerate) {
    rep.kind = HPPairReport::Case::BothNonDegenerate;
    rep.dual = classify_hp_dual_points(a.point, b.point, tol);
  } else {
    rep.kind = HPPairReport::Case::Mixed;
  }
  return rep;
}

}  // namespace racg
