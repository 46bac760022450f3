#pragma once

#include <optional>
#include <string>
#include <vector>

#include "racg/coxeter.hpp"
#include "racg/geometry.hpp"

namespace racg {

enum class Geometry { Hyperbolic, AntiDeSitter, HalfPipe };

std::string to_string(Geometry g);
// Accepts "hyp", "ads", "hp".
Geometry parse_geometry(const std::string& text);

/** One normal vector per generator, each with a prescribed value of the form. */
template <class S>
struct Lift {
  QuadraticSpace space;
  std::vector<std::string> names;
  std::vector<Vec<S>> vectors;
  std::vector<int> norm_targets;

  int size() const { return static_cast<int>(vectors.size()); }
  int unknowns() const { return size() * space.dim; }
};

using LiftD = Lift<double>;

template <class S>
LiftD to_double(const Lift<S>& lift) {
  LiftD out{lift.space, lift.names, {}, lift.norm_targets};
  for (const auto& v : lift.vectors) out.vectors.push_back(to_double(v));
  return out;
}

VecX flatten(const LiftD& lift);
LiftD unflatten(const LiftD& shape, const VecX& coords);

// Reflection matrix of every normal vector.
template <class S>
std::vector<Mat<S>> reflection_images(const Lift<S>& lift) {
  std::vector<Mat<S>> out;
  for (const auto& v : lift.vectors) out.push_back(reflection_matrix(lift.space, v));
  return out;
}

// Restriction of a lift to a subset of generators, in the given order.
template <class S>
Lift<S> restrict_lift(const Lift<S>& lift, const std::vector<int>& subset) {
  Lift<S> out{lift.space, {}, {}, {}};
  for (int g : subset) {
    if (g < 0 || g >= lift.size()) throw IndexOutOfRange("generator index");
    out.names.push_back(lift.names[g]);
    out.vectors.push_back(lift.vectors[g]);
    out.norm_targets.push_back(lift.norm_targets[g]);
  }
  return out;
}

namespace detail {
// Un-normalized table rows of the deformation path; sign flips the last entry of i-.
template <class S>
std::pair<Vec<S>, Vec<S>> path_rows(int i, const S& t, int minus_last_sign) {
  const S r2 = sqrt2_value<S>();
  Vec<S> plus(5), minus(5);
  plus(0) = r2 * t;
  minus(0) = r2;
  for (int k = 1; k <= 3; ++k) {
    plus(k) = S(gamma22_sign(i, k)) * t;
    minus(k) = S(gamma22_sign(i, k));
  }
  plus(4) = S(gamma22_sign(i, 4));
  minus(4) = S(minus_last_sign * gamma22_sign(i, 4)) * t;
  return {plus, minus};
}

template <class S>
Lift<S> standard_lift(const S& t, bool anti_de_sitter) {
  S norm_sq = anti_de_sitter ? S(1) - t * t : S(1) + t * t;
  if (anti_de_sitter && !(norm_sq > S(0))) throw ParameterOutOfRange("AdS path needs |t| < 1");
  const S inv = S(1) / scalar_sqrt(norm_sq);
  Lift<S> lift;
  lift.space = anti_de_sitter ? QuadraticSpace::anti_de_sitter(4) : QuadraticSpace::hyperbolic(4);
  lift.names = gamma22_names();
  lift.vectors.resize(kGamma22Size);
  lift.norm_targets.assign(kGamma22Size, 1);
  for (int i = 0; i < 8; ++i) {
    auto [plus, minus] = path_rows<S>(i, t, anti_de_sitter ? 1 : -1);
    lift.vectors[positive_index(i)] = plus * inv;
    lift.vectors[negative_index(i)] = minus * inv;
    if (anti_de_sitter) lift.norm_targets[positive_index(i)] = -1;
  }
  auto table = gamma22_table_vectors<S>();
  for (int l = 0; l < 6; ++l) lift.vectors[kLetterOffset + l] = table[kLetterOffset + l];
  return lift;
}
}  // namespace detail

/** Hyperbolic deformation path of the 22 walls; t = 1 recovers the 24-cell walls. */
template <class S>
Lift<S> standard_lift_hyp(const S& t) {
  return detail::standard_lift<S>(t, false);
}

/** Anti-de Sitter deformation path; requires |t| < 1. */
template <class S>
Lift<S> standard_lift_ads(const S& t) {
  return detail::standard_lift<S>(t, true);
}

template <class S>
Lift<S> standard_lift(Geometry g, const S& t) {
  if (g == Geometry::HalfPipe) throw ParameterOutOfRange("no vector lift for half-pipe geometry");
  return detail::standard_lift<S>(t, g == Geometry::AntiDeSitter);
}

enum class ConstraintKind { Norm, Orthogonality, Tangency };

struct Constraint {
  ConstraintKind kind = ConstraintKind::Norm;
  int first = 0;
  int second = -1;
  int target = 0;
};

struct TangencyPair {
  int first = 0;
  int second = 0;
  int sign = 1;
  friend bool operator==(const TangencyPair&, const TangencyPair&) = default;
};

struct ConstraintSystem {
  QuadraticSpace space;
  int num_generators = 0;
  std::vector<Constraint> constraints;

  int size() const { return static_cast<int>(constraints.size()); }
  int unknowns() const { return num_generators * space.dim; }
};

/**
 * Norm condition per generator, orthogonality per commuting pair, and optional
 * signed tangency conditions b(f(s1), f(s2)) = sign.
 */
ConstraintSystem build_constraints(const RACG& group, const QuadraticSpace& space,
                                   const std::vector<int>& norm_targets,
                                   const std::vector<TangencyPair>& tangency_pairs = {});

/** Pairs with |b| = 1 within tol, with the sign of b. */
template <class S>
std::vector<TangencyPair> find_tangency_pairs(const Lift<S>& lift, const S& tol) {
  std::vector<TangencyPair> out;
  for (int i = 0; i < lift.size(); ++i) {
    for (int j = i + 1; j < lift.size(); ++j) {
      S b = eval_bilinear(lift.space, lift.vectors[i], lift.vectors[j]);
      S gap = abs(abs(b) - S(1));
      if (gap <= tol) {
        out.push_back({i, j, b < S(0) ? -1 : 1});
      } else if (gap <= S(10) * tol) {
        throw AmbiguousNearThreshold(lift.names[i] + "," + lift.names[j] + " has |b| close to 1");
      }
    }
  }
  return out;
}

/**
 * Signed tangency pairs of the deformation path, read off at t = 0.5 where no
 * two normals coincide. Along the path these 36 values stay at +-1.
 */
std::vector<TangencyPair> standard_tangency_pairs(Geometry geometry);

// The 102-equation system (norms and commutation) or, with tangency, the 138-equation one.
ConstraintSystem standard_system(Geometry geometry, bool with_tangency);

template <class S>
Vec<S> residual(const ConstraintSystem& system, const Lift<S>& lift) {
  if (lift.size() != system.num_generators || !(lift.space == system.space)) {
    throw DimensionMismatch("lift does not match constraint system");
  }
  Vec<S> r(system.size());
  for (int c = 0; c < system.size(); ++c) {
    const Constraint& k = system.constraints[c];
    switch (k.kind) {
      case ConstraintKind::Norm:
        r(c) = eval_form(system.space, lift.vectors[k.first]) - S(k.target);
        break;
      case ConstraintKind::Orthogonality:
        r(c) = eval_bilinear(system.space, lift.vectors[k.first], lift.vectors[k.second]);
        break;
      case ConstraintKind::Tangency:
        r(c) = eval_bilinear(system.space, lift.vectors[k.first], lift.vectors[k.second]) - S(k.target);
        break;
    }
  }
  return r;
}

double residual_max(const ConstraintSystem& system, const LiftD& lift);

/** Analytic Jacobian; columns are the coordinates of f(s), generator-major. */
MatX jacobian(const ConstraintSystem& system, const LiftD& lift);

struct RankReport {
  VecX singular_values;  // descending, padded with zeros to the number of unknowns
  int numeric_rank = 0;
  int kernel_dim = 0;
  MatX kernel_basis;  // orthonormal columns
  double tolerance_used = 0.0;
  double gap_ratio = 0.0;  // sigma_rank / sigma_{rank+1}; infinite when the latter is zero
  double residual_max = 0.0;
};

struct RankOptions {
  double relative_tol = 1e-9;
  double min_gap = 1e3;
  bool throw_if_ill_conditioned = true;
};

RankReport rank_report(const MatX& matrix, const RankOptions& opts = {});
RankReport kernel_report(const ConstraintSystem& system, const LiftD& lift, const RankOptions& opts = {});

struct OrbitTangent {
  MatX candidates;  // one column per basis element of the form-preserving Lie algebra
  MatX basis;       // independent subset of the candidates
  int dim = 0;
};

// Basis of the Lie algebra of O(q): Q_jj E_ij - Q_ii E_ji for i < j.
template <class S>
std::vector<Mat<S>> orthogonal_lie_algebra_basis(const QuadraticSpace& space) {
  std::vector<Mat<S>> out;
  for (int i = 0; i < space.dim; ++i) {
    for (int j = i + 1; j < space.dim; ++j) {
      Mat<S> m = Mat<S>::Zero(space.dim, space.dim);
      m(i, j) = S(space.signature[j]);
      m(j, i) = -S(space.signature[i]);
      out.push_back(m);
    }
  }
  return out;
}

OrbitTangent orbit_tangent(const LiftD& lift, double relative_tol = 1e-9);

/** Exact derivative of the standard path at t, letters fixed. */
VecX known_tangent(double t, Geometry geometry);

struct ProjectionOptions {
  int max_iter = 50;
  double tol_res = 1e-12;
};

struct ProjectionResult {
  LiftD lift;
  int iterations = 0;
  double residual = 0.0;
};

// Least-squares solution of minimum norm; singular values below 1e-10 relative are dropped.
VecX min_norm_solve(const MatX& a, const VecX& b);

/** Gauss-Newton with minimum-norm steps onto the zero set of the system. */
ProjectionResult project_to_variety(const ConstraintSystem& system, const LiftD& start,
                                    const ProjectionOptions& opts = {});

struct TraceOptions {
  std::vector<int> gauge;                 // generators whose vectors stay frozen
  std::optional<VecX> initial_direction;  // orients the first tangent
  ProjectionOptions corrector;
};

/** Pseudo-arclength predictor-corrector along a one-dimensional slice of the zero set. */
std::vector<LiftD> trace_path(const ConstraintSystem& system, const LiftD& start, int steps, double step_size,
                              const TraceOptions& opts);

// Gauge pinning the letters A, B, C, D of the 22-generator group.
std::vector<int> letter_gauge();

MatX gram_matrix(const LiftD& lift);

struct GramMatch {
  double t = 0.0;
  double error = 0.0;  // max entry difference of Gram matrices
};

/** Parameter of the standard lift whose Gram matrix is closest to that of the given lift. */
GramMatch match_standard_lift(Geometry geometry, const LiftD& lift);

/**
 * Six-generator subsets whose commutation graph in the group is the cube graph
 * (three disjoint non-commuting pairs) and whose non-commuting pairs have |b| = 1.
 */
std::vector<std::vector<int>> find_cusp_subgroups(const RACG& group, const LiftD& lift, double tol);

}  // namespace racg
