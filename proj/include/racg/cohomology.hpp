#pragma once

#include <optional>
#include <string>
#include <vector>

#include "racg/coxeter.hpp"
#include "racg/exact_linalg.hpp"
#include "racg/geometry.hpp"

namespace racg {

/** Exact linear representation of a right-angled Coxeter group, one matrix per generator. */
struct LinearRep {
  int dimV = 0;
  std::vector<ExactMat> images;

  // Checks invertibility, s^2 = 1 and the commutation relations exactly.
  static LinearRep validated(const RACG& group, std::vector<ExactMat> images);
};

/**
 * A cocycle is stored as one vector per generator, stacked generator by
 * generator into a vector of length |S| * dimV.
 */
struct CohomologyReport {
  int dimV = 0;
  int dimZ1 = 0;
  int dimB1 = 0;
  int dimH1 = 0;
  ExactMat z1_basis;            // columns are cocycles
  ExactMat b1_basis;            // columns are coboundaries
  ExactMat h1_representatives;  // columns complete b1_basis to a basis of Z1
};

ExactMat cocycle_space(const RACG& group, const LinearRep& rep);
ExactMat coboundary_space(const RACG& group, const LinearRep& rep);
// Coboundary of v: s -> rep(s) v - v.
ExactVec coboundary_of(const LinearRep& rep, const ExactVec& v);
bool is_cocycle(const RACG& group, const LinearRep& rep, const ExactVec& tau);
CohomologyReport compute_cohomology(const RACG& group, const LinearRep& rep);
int h1_dim(const RACG& group, const LinearRep& rep);

/** Matrices of X -> g X g^-1 in the given Lie algebra basis, one per generator. */
LinearRep adjoint_rep(const RACG& group, const std::vector<ExactMat>& generator_matrices,
                      const std::vector<ExactMat>& lie_algebra_basis);

/**
 * Basis of the Lie algebra of O(q) in 5 dimensions ordered so that the first six
 * elements act on coordinates 0..3 and the last four pair coordinate i with 4.
 */
std::vector<ExactMat> adapted_orthogonal_basis(const QuadraticSpace& space);

// Lie algebra of O(1,3) on R^{1,3}.
std::vector<ExactMat> lorentz_algebra_basis();

/**
 * Lie algebra of the Minkowski isometry group in the affine 5x5 model
 * [[a, w], [0, 0]]: the six Lorentz elements, then the four translations.
 */
std::vector<ExactMat> minkowski_isometry_algebra_basis();

// Linear part of the collapsed representation of the 22-generator group on R^{1,3}.
std::vector<ExactMat> collapsed_rep_matrices();

// The collapsed representation in O(1,4) or O(2,3): diag(1,1,1,1,-1) on i+, the
// block reflection of the cuboctahedron vector otherwise.
std::vector<ExactMat> collapsed_rep_matrices_5d();

// The collapsed linear part in the affine model, [[A, 0], [0, 1]].
std::vector<ExactMat> collapsed_rep_matrices_affine();

struct SplitDims {
  int horizontal = 0;
  int vertical = 0;
};

/**
 * Dimensions of the projections of H^1 to the first horizontal_dim basis
 * coordinates and to the rest. Requires every image to be block diagonal.
 */
SplitDims split_h1(const RACG& group, const LinearRep& rep, const CohomologyReport& report, int horizontal_dim = 6);

// Coordinates of the cocycle restricted to the last dimV - horizontal_dim basis elements.
ExactVec vertical_part(const ExactVec& tau, int dimV, int horizontal_dim);
// Embeds a cocycle with values in the vertical block into the full module.
ExactVec embed_vertical(const ExactVec& tau, int vertical_dim, int dimV, int horizontal_dim);

/**
 * Subtracts the unique coboundary that makes the cocycle vanish on the pinned
 * generators. Throws SingularNormalization if that coboundary is not unique.
 */
ExactVec reduce_mod_coboundary(const LinearRep& rep, const ExactVec& tau, const std::vector<int>& pinned);

// Pins the letters A, B, C, D of the 22-generator group.
ExactVec reduce_mod_coboundary(const LinearRep& rep, const ExactVec& tau);

// The translation cocycle (-1)^i lambda v_i on i+ and i-, zero on letters.
ExactVec vertical_cocycle(const QSqrt2& lambda);

// If tau is a multiple of the vertical cocycle, the multiple.
std::optional<QSqrt2> vertical_cocycle_multiple(const ExactVec& tau);

struct NamedCohomology {
  std::string group;
  std::string rep_name;
  CohomologyReport report;
  std::optional<SplitDims> split;
};

// Named computations: "r13", "so13", "full-hyp", "full-ads", "full-hp".
NamedCohomology named_cohomology(const std::string& name);
std::vector<std::string> named_cohomology_choices();

}  // namespace racg
