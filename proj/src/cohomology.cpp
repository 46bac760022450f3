#include "racg/cohomology.hpp"

#include "racg/halfpipe.hpp"
#include "racg/repvar.hpp"

namespace racg {

namespace {

ExactMat identity(Eigen::Index n) { return ExactMat::Identity(n, n); }

ExactVec flatten_matrix(const ExactMat& m) {
  ExactVec out(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i * m.cols() + j) = m(i, j);
  return out;
}

ExactMat block_diag(const ExactMat& a, const QSqrt2& corner) {
  const Eigen::Index n = a.rows();
  ExactMat out = ExactMat::Zero(n + 1, n + 1);
  out.topLeftCorner(n, n) = a;
  out(n, n) = corner;
  return out;
}

// Rows of the stacked vector belonging to the first or last block of every generator.
ExactMat project_rows(const ExactMat& stacked, int generators, int dimV, int begin, int end) {
  const int w = end - begin;
  ExactMat out(static_cast<Eigen::Index>(generators) * w, stacked.cols());
  for (int s = 0; s < generators; ++s)
    out.middleRows(static_cast<Eigen::Index>(s) * w, w) = stacked.middleRows(static_cast<Eigen::Index>(s) * dimV + begin, w);
  return out;
}

}  // namespace

LinearRep LinearRep::validated(const RACG& group, std::vector<ExactMat> images) {
  if (static_cast<int>(images.size()) != group.size()) throw DimensionMismatch("one image per generator required");
  if (images.empty()) throw InvalidRepresentation("empty representation");
  const Eigen::Index d = images.front().rows();
  for (const auto& m : images) {
    if (m.rows() != d || m.cols() != d) throw DimensionMismatch("images of different size");
    if (exact_rank(m) != d) throw InvalidRepresentation("image not invertible");
  }
  RelationReport report = verify_representation<QSqrt2>(group, images, 0.0);
  for (const auto& f : report.failing) {
    // Linear representations may identify commuting generators.
    if (f.relation.ends_with(" distinct")) continue;
    throw InvalidRepresentation("relation " + f.relation + " fails");
  }
  return {static_cast<int>(d), std::move(images)};
}

ExactMat cocycle_space(const RACG& group, const LinearRep& rep) {
  const int n = group.size(), d = rep.dimV;
  // tau(s) ranges over ker(id + rep(s)); parametrize it by a kernel basis.
  std::vector<ExactMat> kernels(n);
  std::vector<int> offset(n + 1, 0);
  for (int s = 0; s < n; ++s) {
    kernels[s] = exact_kernel(ExactMat(identity(d) + rep.images[s]));
    offset[s + 1] = offset[s] + static_cast<int>(kernels[s].cols());
  }
  const auto& pairs = group.commuting_pairs();
  ExactMat system = ExactMat::Zero(static_cast<Eigen::Index>(pairs.size()) * d, offset[n]);
  for (size_t k = 0; k < pairs.size(); ++k) {
    auto [i, j] = pairs[k];
    const Eigen::Index row = static_cast<Eigen::Index>(k) * d;
    // (id - rep(i)) tau(j) - (id - rep(j)) tau(i) = 0
    system.block(row, offset[j], d, kernels[j].cols()) = (identity(d) - rep.images[i]) * kernels[j];
    system.block(row, offset[i], d, kernels[i].cols()) = -((identity(d) - rep.images[j]) * kernels[i]);
  }
  ExactMat coeffs = exact_kernel(system);
  ExactMat basis = ExactMat::Zero(static_cast<Eigen::Index>(n) * d, coeffs.cols());
  for (int s = 0; s < n; ++s) {
    if (kernels[s].cols() == 0) continue;
    basis.middleRows(static_cast<Eigen::Index>(s) * d, d) =
        kernels[s] * coeffs.middleRows(offset[s], kernels[s].cols());
  }
  return basis;
}

ExactVec coboundary_of(const LinearRep& rep, const ExactVec& v) {
  const int n = static_cast<int>(rep.images.size()), d = rep.dimV;
  if (v.size() != d) throw DimensionMismatch("vector length");
  ExactVec out(static_cast<Eigen::Index>(n) * d);
  for (int s = 0; s < n; ++s) out.segment(static_cast<Eigen::Index>(s) * d, d) = rep.images[s] * v - v;
  return out;
}

ExactMat coboundary_space(const RACG& group, const LinearRep& rep) {
  const int n = group.size(), d = rep.dimV;
  ExactMat map(static_cast<Eigen::Index>(n) * d, d);
  for (int s = 0; s < n; ++s) map.middleRows(static_cast<Eigen::Index>(s) * d, d) = rep.images[s] - identity(d);
  return column_space_basis(map);
}

bool is_cocycle(const RACG& group, const LinearRep& rep, const ExactVec& tau) {
  const int d = rep.dimV;
  if (tau.size() != static_cast<Eigen::Index>(group.size()) * d) throw DimensionMismatch("cocycle length");
  auto value = [&](int s) { return ExactVec(tau.segment(static_cast<Eigen::Index>(s) * d, d)); };
  for (int s = 0; s < group.size(); ++s)
    if (!is_exactly_zero(ExactVec((identity(d) + rep.images[s]) * value(s)))) return false;
  for (auto [i, j] : group.commuting_pairs()) {
    ExactVec lhs = (identity(d) - rep.images[i]) * value(j) - (identity(d) - rep.images[j]) * value(i);
    if (!is_exactly_zero(lhs)) return false;
  }
  return true;
}

CohomologyReport compute_cohomology(const RACG& group, const LinearRep& rep) {
  CohomologyReport out;
  out.dimV = rep.dimV;
  out.z1_basis = cocycle_space(group, rep);
  out.b1_basis = coboundary_space(group, rep);
  out.dimZ1 = static_cast<int>(out.z1_basis.cols());
  out.dimB1 = static_cast<int>(out.b1_basis.cols());
  out.dimH1 = out.dimZ1 - out.dimB1;
  ExactMat both(out.z1_basis.rows(), out.dimB1 + out.dimZ1);
  both.leftCols(out.dimB1) = out.b1_basis;
  both.rightCols(out.dimZ1) = out.z1_basis;
  std::vector<int> cols = independent_columns(both);
  std::vector<int> reps;
  for (int c : cols)
    if (c >= out.dimB1) reps.push_back(c);
  if (static_cast<int>(cols.size()) != out.dimZ1 || static_cast<int>(reps.size()) != out.dimH1) {
    throw InvalidRepresentation("coboundaries not contained in cocycles");
  }
  out.h1_representatives = ExactMat(both.rows(), static_cast<Eigen::Index>(reps.size()));
  for (size_t k = 0; k < reps.size(); ++k) out.h1_representatives.col(static_cast<Eigen::Index>(k)) = both.col(reps[k]);
  return out;
}

int h1_dim(const RACG& group, const LinearRep& rep) { return compute_cohomology(group, rep).dimH1; }

LinearRep adjoint_rep(const RACG& group, const std::vector<ExactMat>& generator_matrices,
                      const std::vector<ExactMat>& lie_algebra_basis) {
  if (lie_algebra_basis.empty()) throw InvalidRepresentation("empty Lie algebra basis");
  const Eigen::Index m = static_cast<Eigen::Index>(lie_algebra_basis.size());
  const Eigen::Index n = lie_algebra_basis.front().rows();
  ExactMat flat(n * n, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    if (lie_algebra_basis[k].rows() != n || lie_algebra_basis[k].cols() != n)
      throw DimensionMismatch("basis matrices of different size");
    flat.col(k) = flatten_matrix(lie_algebra_basis[k]);
  }
  if (exact_rank(flat) != m) throw InvalidRepresentation("Lie algebra basis is not independent");
  std::vector<ExactMat> images;
  for (const auto& g : generator_matrices) {
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("generator matrix size");
    ExactMat inv = exact_inverse(g);
    ExactMat image(m, m);
    for (Eigen::Index k = 0; k < m; ++k) {
      auto coords = exact_solve(flat, flatten_matrix(ExactMat(g * lie_algebra_basis[k] * inv)));
      if (!coords) throw BasisNotClosed("conjugate of basis element " + std::to_string(k) + " leaves the span");
      image.col(k) = *coords;
    }
    images.push_back(image);
  }
  return LinearRep::validated(group, std::move(images));
}

std::vector<ExactMat> adapted_orthogonal_basis(const QuadraticSpace& space) {
  if (space.dim != 5) throw DimensionMismatch("adapted basis needs a 5-dimensional space");
  std::vector<std::pair<int, int>> order;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) order.emplace_back(i, j);
  for (int i = 0; i < 4; ++i) order.emplace_back(i, 4);
  std::vector<ExactMat> out;
  for (auto [i, j] : order) {
    ExactMat m = ExactMat::Zero(5, 5);
    m(i, j) = QSqrt2(space.signature[j]);
    m(j, i) = -QSqrt2(space.signature[i]);
    out.push_back(m);
  }
  return out;
}

std::vector<ExactMat> lorentz_algebra_basis() {
  return orthogonal_lie_algebra_basis<QSqrt2>(QuadraticSpace::minkowski(4));
}

std::vector<ExactMat> minkowski_isometry_algebra_basis() {
  std::vector<ExactMat> out;
  for (const auto& a : lorentz_algebra_basis()) out.push_back(block_diag(a, QSqrt2(0)));
  for (int i = 0; i < 4; ++i) {
    ExactMat m = ExactMat::Zero(5, 5);
    m(i, 4) = QSqrt2(1);
    out.push_back(m);
  }
  return out;
}

std::vector<ExactMat> collapsed_rep_matrices() { return collapsed_linear_part<QSqrt2>(); }

std::vector<ExactMat> collapsed_rep_matrices_5d() {
  std::vector<ExactMat> out;
  for (const auto& a : collapsed_rep_matrices()) {
    if (is_exactly_zero(ExactMat(a + identity(4)))) {
      ExactMat r = identity(5);
      r(4, 4) = QSqrt2(-1);
      out.push_back(r);
    } else {
      out.push_back(block_diag(a, QSqrt2(1)));
    }
  }
  return out;
}

std::vector<ExactMat> collapsed_rep_matrices_affine() {
  std::vector<ExactMat> out;
  for (const auto& a : collapsed_rep_matrices()) out.push_back(block_diag(a, QSqrt2(1)));
  return out;
}

SplitDims split_h1(const RACG& group, const LinearRep& rep, const CohomologyReport& report, int horizontal_dim) {
  const int d = rep.dimV, h = horizontal_dim;
  if (h <= 0 || h >= d) throw BasisNotAdapted("horizontal block size out of range");
  for (size_t s = 0; s < rep.images.size(); ++s) {
    const ExactMat& m = rep.images[s];
    if (!is_exactly_zero(m.topRightCorner(h, d - h)) || !is_exactly_zero(m.bottomLeftCorner(d - h, h))) {
      throw BasisNotAdapted("image of " + group.generators()[s] + " mixes the two blocks");
    }
  }
  const int n = group.size();
  SplitDims out;
  out.horizontal = exact_rank(project_rows(report.z1_basis, n, d, 0, h)) -
                   exact_rank(project_rows(report.b1_basis, n, d, 0, h));
  out.vertical = exact_rank(project_rows(report.z1_basis, n, d, h, d)) -
                 exact_rank(project_rows(report.b1_basis, n, d, h, d));
  return out;
}

ExactVec vertical_part(const ExactVec& tau, int dimV, int horizontal_dim) {
  const int n = static_cast<int>(tau.size()) / dimV, w = dimV - horizontal_dim;
  ExactVec out(static_cast<Eigen::Index>(n) * w);
  for (int s = 0; s < n; ++s)
    out.segment(static_cast<Eigen::Index>(s) * w, w) = tau.segment(static_cast<Eigen::Index>(s) * dimV + horizontal_dim, w);
  return out;
}

ExactVec embed_vertical(const ExactVec& tau, int vertical_dim, int dimV, int horizontal_dim) {
  if (vertical_dim != dimV - horizontal_dim) throw DimensionMismatch("block sizes");
  const int n = static_cast<int>(tau.size()) / vertical_dim;
  ExactVec out = ExactVec::Zero(static_cast<Eigen::Index>(n) * dimV);
  for (int s = 0; s < n; ++s)
    out.segment(static_cast<Eigen::Index>(s) * dimV + horizontal_dim, vertical_dim) =
        tau.segment(static_cast<Eigen::Index>(s) * vertical_dim, vertical_dim);
  return out;
}

ExactVec reduce_mod_coboundary(const LinearRep& rep, const ExactVec& tau, const std::vector<int>& pinned) {
  const int d = rep.dimV;
  if (tau.size() != static_cast<Eigen::Index>(rep.images.size()) * d) throw DimensionMismatch("cocycle length");
  const Eigen::Index rows = static_cast<Eigen::Index>(pinned.size()) * d;
  ExactMat map(rows, d);
  ExactVec rhs(rows);
  for (size_t k = 0; k < pinned.size(); ++k) {
    const int s = pinned[k];
    if (s < 0 || s >= static_cast<int>(rep.images.size())) throw IndexOutOfRange("pinned generator");
    map.middleRows(static_cast<Eigen::Index>(k) * d, d) = rep.images[s] - identity(d);
    rhs.segment(static_cast<Eigen::Index>(k) * d, d) = tau.segment(static_cast<Eigen::Index>(s) * d, d);
  }
  if (exact_rank(map) != d) throw SingularNormalization("pinned generators do not determine the coboundary");
  auto v = exact_solve(map, rhs);
  if (!v) throw SingularNormalization("no coboundary matches the cocycle on the pinned generators");
  return tau - coboundary_of(rep, *v);
}

ExactVec reduce_mod_coboundary(const LinearRep& rep, const ExactVec& tau) {
  return reduce_mod_coboundary(rep, tau, {letter_index('A'), letter_index('B'), letter_index('C'), letter_index('D')});
}

ExactVec vertical_cocycle(const QSqrt2& lambda) {
  auto parts = vertical_translation<QSqrt2>(lambda);
  ExactVec out(static_cast<Eigen::Index>(parts.size()) * 4);
  for (size_t s = 0; s < parts.size(); ++s) out.segment(static_cast<Eigen::Index>(s) * 4, 4) = parts[s];
  return out;
}

std::optional<QSqrt2> vertical_cocycle_multiple(const ExactVec& tau) {
  ExactVec base = vertical_cocycle(QSqrt2(1));
  if (tau.size() != base.size()) throw DimensionMismatch("cocycle length");
  Eigen::Index k = 0;
  while (base(k).is_zero()) ++k;
  QSqrt2 lambda = tau(k) / base(k);
  if (!is_exactly_zero(ExactVec(tau - lambda * base))) return std::nullopt;
  return lambda;
}

std::vector<std::string> named_cohomology_choices() { return {"r13", "so13", "full-hyp", "full-ads", "full-hp"}; }

NamedCohomology named_cohomology(const std::string& name) {
  RACG group = gamma22();
  NamedCohomology out;
  out.group = "gamma22";
  LinearRep rep;
  bool split = false;
  if (name == "r13") {
    out.rep_name = "collapsed rep on R^{1,3}";
    rep = LinearRep::validated(group, collapsed_rep_matrices());
  } else if (name == "so13") {
    out.rep_name = "adjoint of collapsed rep on so(1,3)";
    rep = adjoint_rep(group, collapsed_rep_matrices(), lorentz_algebra_basis());
  } else if (name == "full-hyp") {
    out.rep_name = "adjoint of collapsed rep on so(1,4)";
    rep = adjoint_rep(group, collapsed_rep_matrices_5d(), adapted_orthogonal_basis(QuadraticSpace::hyperbolic(4)));
    split = true;
  } else if (name == "full-ads") {
    out.rep_name = "adjoint of collapsed rep on so(2,3)";
    rep = adjoint_rep(group, collapsed_rep_matrices_5d(), adapted_orthogonal_basis(QuadraticSpace::anti_de_sitter(4)));
    split = true;
  } else if (name == "full-hp") {
    out.rep_name = "adjoint of collapsed rep on isom(R^{1,3})";
    rep = adjoint_rep(group, collapsed_rep_matrices_affine(), minkowski_isometry_algebra_basis());
    split = true;
  } else {
    throw ParameterOutOfRange("unknown cohomology target " + name);
  }
  out.report = compute_cohomology(group, rep);
  if (split) out.split = split_h1(group, rep, out.report);
  return out;
}

}  // namespace racg
