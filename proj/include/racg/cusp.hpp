#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "racg/coxeter.hpp"
#include "racg/halfpipe.hpp"
#include "racg/repvar.hpp"

namespace racg {

enum class CuspKind { Cusp, Collapsed, RectSplit, AdSRectTimelikeMeet, AdSRectSpacelikeMeet, Unclassified };

std::string to_string(CuspKind k);

/** Outcome of classifying a rectangle or cube configuration of reflections. */
struct CuspClass {
  CuspKind kind = CuspKind::Unclassified;
  std::pair<int, int> pair{-1, -1};           // Collapsed: the coinciding pair; RectSplit: the intersecting pair
  std::pair<int, int> disjoint_pair{-1, -1};  // RectSplit only
  std::string reason;                         // Unclassified only

  static CuspClass cusp() { return {CuspKind::Cusp, {-1, -1}, {-1, -1}, {}}; }
  static CuspClass collapsed(std::pair<int, int> p) { return {CuspKind::Collapsed, p, {-1, -1}, {}}; }
  static CuspClass rect_split(std::pair<int, int> meet, std::pair<int, int> apart) {
    return {CuspKind::RectSplit, meet, apart, {}};
  }
  static CuspClass unclassified(std::string why) { return {CuspKind::Unclassified, {-1, -1}, {-1, -1}, std::move(why)}; }

  // Kind with its data, e.g. "Collapsed(0-2)".
  std::string label() const;
};

using HPReflectionD = HPReflection<double>;

// Normal vectors for hyperbolic and AdS geometry, half-pipe reflections otherwise.
using ReflectionData = std::variant<LiftD, std::vector<HPReflectionD>>;

// Rectangle data is ordered s1, t1, s2, t2 (opposite pairs (0,2) and (1,3)).
CuspClass classify_rect(const LiftD& lift, double tol);
CuspClass classify_rect_hp(const std::vector<HPReflectionD>& refl, double tol);
CuspClass classify_rect(Geometry geometry, const ReflectionData& data, double tol);

// Cube data is ordered x1, x2, y1, y2, z1, z2 (opposite pairs (0,1), (2,3), (4,5)).
CuspClass classify_cube(const LiftD& lift, double tol);
CuspClass classify_cube_hp(const std::vector<HPReflectionD>& refl, double tol);
CuspClass classify_cube(Geometry geometry, const ReflectionData& data, double tol);

struct CommonNullReport {
  VecX singular_values;  // of the row-normalized functional matrix
  int kernel_dim = 0;
  VecX direction;        // unit kernel vector when kernel_dim == 1
  double form_value = 0.0;
};

/** Common kernel of the functionals x -> b(X, x) (or the half-pipe dual functionals). */
CommonNullReport common_null_direction(const MatX& functionals, const QuadraticSpace& ideal_form, double tol);

/** Unknowns: p for a non-degenerate reflection; X and c (translation c X) for a degenerate one. */
VecX hp_flatten(const std::vector<HPReflectionD>& refl);
std::vector<HPReflectionD> hp_unflatten(const std::vector<HPReflectionD>& shape, const VecX& coords);

// q(X) = 1 for degenerate reflections and the commutation condition for every commuting pair.
VecX hp_residual(const RACG& group, const std::vector<HPReflectionD>& refl);
MatX hp_jacobian(const RACG& group, const std::vector<HPReflectionD>& refl);

struct HPProjectionResult {
  std::vector<HPReflectionD> reflections;
  int iterations = 0;
  double residual = 0.0;
};

HPProjectionResult hp_project(const RACG& group, const std::vector<HPReflectionD>& start,
                              const ProjectionOptions& opts = {});

enum class CuspGroupKind { Rect, Cube };
std::string to_string(CuspGroupKind k);
// Accepts "rect3" and "cube4".
CuspGroupKind parse_cusp_group(const std::string& text);

RACG cusp_group(CuspGroupKind kind);

/**
 * Base configurations: the rectangle cusp groups of dimension three, and the
 * cube subgroups of the 22-generator deformation (t = 0.4 for hyperbolic and AdS,
 * lambda = 1 for half-pipe).
 */
ReflectionData base_configuration(Geometry geometry, CuspGroupKind kind);

/**
 * Cube subgroup number `subset` (in the order of find_cusp_subgroups) of the
 * deformation at parameter t; for half-pipe geometry t is lambda.
 */
ReflectionData cube_configuration(Geometry geometry, double t, int subset = 0);

struct TrialRecord {
  int trial = 0;
  std::string label;  // class label, or "NoConvergence"
  CuspKind kind = CuspKind::Unclassified;
  bool converged = true;
  double residual = 0.0;
  int iterations = 0;
};

struct ExperimentOptions {
  int trials = 1000;
  double noise = 1e-3;
  std::uint64_t seed = 1;
  double classify_tol = 1e-7;
  ProjectionOptions projection;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;
  std::map<std::string, int> histogram;  // keyed by CuspKind name, plus "NoConvergence"
  int no_convergence = 0;
  int count(CuspKind k) const;
};

/**
 * Perturbs the base configuration by uniform noise per coordinate, projects back
 * onto the norm and commutation conditions, and classifies each trial.
 */
ExperimentResult rigidity_experiment(Geometry geometry, CuspGroupKind kind, const ExperimentOptions& opts);
ExperimentResult rigidity_experiment(Geometry geometry, CuspGroupKind kind, const ReflectionData& base,
                                     const ExperimentOptions& opts);

}  // namespace racg
