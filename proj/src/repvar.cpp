#include "racg/repvar.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <set>

namespace racg {

std::string to_string(Geometry g) {
  switch (g) {
    case Geometry::Hyperbolic: return "hyp";
    case Geometry::AntiDeSitter: return "ads";
    case Geometry::HalfPipe: return "hp";
  }
  return "?";
}

Geometry parse_geometry(const std::string& text) {
  if (text == "hyp") return Geometry::Hyperbolic;
  if (text == "ads") return Geometry::AntiDeSitter;
  if (text == "hp") return Geometry::HalfPipe;
  throw ParameterOutOfRange("unknown geometry '" + text + "' (expected hyp, ads or hp)");
}

VecX flatten(const LiftD& lift) {
  const int d = lift.space.dim;
  VecX x(lift.unknowns());
  for (int s = 0; s < lift.size(); ++s) x.segment(s * d, d) = lift.vectors[s];
  return x;
}

LiftD unflatten(const LiftD& shape, const VecX& coords) {
  if (coords.size() != shape.unknowns()) throw DimensionMismatch("coordinate vector length");
  LiftD out = shape;
  const int d = shape.space.dim;
  for (int s = 0; s < shape.size(); ++s) out.vectors[s] = coords.segment(s * d, d);
  return out;
}

ConstraintSystem build_constraints(const RACG& group, const QuadraticSpace& space,
                                   const std::vector<int>& norm_targets,
                                   const std::vector<TangencyPair>& tangency_pairs) {
  if (static_cast<int>(norm_targets.size()) != group.size()) {
    throw DimensionMismatch("one norm target per generator required");
  }
  ConstraintSystem sys;
  sys.space = space;
  sys.num_generators = group.size();
  for (int s = 0; s < group.size(); ++s) {
    if (norm_targets[s] != 1 && norm_targets[s] != -1) throw ParameterOutOfRange("norm targets must be +-1");
    sys.constraints.push_back({ConstraintKind::Norm, s, -1, norm_targets[s]});
  }
  for (auto [a, b] : group.commuting_pairs()) sys.constraints.push_back({ConstraintKind::Orthogonality, a, b, 0});
  std::set<std::pair<int, int>> seen;
  for (const auto& tp : tangency_pairs) {
    int a = std::min(tp.first, tp.second), b = std::max(tp.first, tp.second);
    if (a < 0 || b >= group.size() || a == b) throw IndexOutOfRange("tangency pair index");
    if (group.commutes(a, b)) {
      throw OverlappingConstraint("pair (" + group.generators()[a] + "," + group.generators()[b] +
                                  ") is also a commuting pair");
    }
    if (!seen.insert({a, b}).second) throw OverlappingConstraint("duplicate tangency pair");
    if (tp.sign != 1 && tp.sign != -1) throw ParameterOutOfRange("tangency sign must be +-1");
    sys.constraints.push_back({ConstraintKind::Tangency, a, b, tp.sign});
  }
  return sys;
}

std::vector<TangencyPair> standard_tangency_pairs(Geometry geometry) {
  RACG group = gamma22();
  std::vector<TangencyPair> out;
  for (const auto& tp : find_tangency_pairs(standard_lift<double>(geometry, 0.5), 1e-9))
    if (!group.commutes(tp.first, tp.second)) out.push_back(tp);
  return out;
}

ConstraintSystem standard_system(Geometry geometry, bool with_tangency) {
  LiftD ref = standard_lift<double>(geometry, 0.5);
  return build_constraints(gamma22(), ref.space, ref.norm_targets,
                           with_tangency ? standard_tangency_pairs(geometry) : std::vector<TangencyPair>{});
}

double residual_max(const ConstraintSystem& system, const LiftD& lift) {
  VecX r = residual(system, lift);
  return r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff();
}

MatX jacobian(const ConstraintSystem& system, const LiftD& lift) {
  const int d = system.space.dim;
  MatX j = MatX::Zero(system.size(), system.unknowns());
  VecX q(d);
  for (int k = 0; k < d; ++k) q(k) = system.space.signature[k];
  for (int c = 0; c < system.size(); ++c) {
    const Constraint& k = system.constraints[c];
    if (k.kind == ConstraintKind::Norm) {
      j.block(c, k.first * d, 1, d) = (2.0 * q.cwiseProduct(lift.vectors[k.first])).transpose();
    } else {
      j.block(c, k.first * d, 1, d) = q.cwiseProduct(lift.vectors[k.second]).transpose();
      j.block(c, k.second * d, 1, d) = q.cwiseProduct(lift.vectors[k.first]).transpose();
    }
  }
  return j;
}

RankReport rank_report(const MatX& matrix, const RankOptions& opts) {
  RankReport rep;
  const Eigen::Index n = matrix.cols();
  Eigen::JacobiSVD<MatX> svd(matrix, Eigen::ComputeFullV);
  VecX sv = svd.singularValues();
  rep.singular_values = VecX::Zero(n);
  rep.singular_values.head(sv.size()) = sv;
  const double smax = n > 0 ? rep.singular_values(0) : 0.0;
  rep.tolerance_used = opts.relative_tol * smax;
  int rank = 0;
  while (rank < n && rep.singular_values(rank) > rep.tolerance_used) ++rank;
  rep.numeric_rank = rank;
  rep.kernel_dim = static_cast<int>(n) - rank;
  if (rank == 0) {
    rep.gap_ratio = std::numeric_limits<double>::infinity();
  } else if (rank == n || rep.singular_values(rank) == 0.0) {
    rep.gap_ratio = std::numeric_limits<double>::infinity();
  } else {
    rep.gap_ratio = rep.singular_values(rank - 1) / rep.singular_values(rank);
  }
  rep.kernel_basis = svd.matrixV().rightCols(rep.kernel_dim);
  if (opts.throw_if_ill_conditioned && rep.gap_ratio < opts.min_gap) {
    throw IllConditioned("spectral gap " + std::to_string(rep.gap_ratio) + " at rank " + std::to_string(rank));
  }
  return rep;
}

RankReport kernel_report(const ConstraintSystem& system, const LiftD& lift, const RankOptions& opts) {
  RankReport rep = rank_report(jacobian(system, lift), opts);
  rep.residual_max = residual_max(system, lift);
  return rep;
}

OrbitTangent orbit_tangent(const LiftD& lift, double relative_tol) {
  auto algebra = orthogonal_lie_algebra_basis<double>(lift.space);
  OrbitTangent out;
  const int d = lift.space.dim;
  out.candidates = MatX::Zero(lift.unknowns(), static_cast<Eigen::Index>(algebra.size()));
  for (size_t a = 0; a < algebra.size(); ++a)
    for (int s = 0; s < lift.size(); ++s)
      out.candidates.block(s * d, static_cast<Eigen::Index>(a), d, 1) = algebra[a] * lift.vectors[s];
  Eigen::ColPivHouseholderQR<MatX> qr(out.candidates);
  const double scale = out.candidates.cwiseAbs().maxCoeff();
  qr.setThreshold(relative_tol * std::max(scale, 1.0));
  out.dim = static_cast<int>(qr.rank());
  out.basis = MatX(out.candidates.rows(), out.dim);
  for (int k = 0; k < out.dim; ++k) out.basis.col(k) = out.candidates.col(qr.colsPermutation().indices()(k));
  return out;
}

VecX known_tangent(double t, Geometry geometry) {
  if (geometry == Geometry::HalfPipe) throw ParameterOutOfRange("known tangent is defined for hyp and ads");
  const bool ads = geometry == Geometry::AntiDeSitter;
  if (ads && std::abs(t) >= 1.0) throw ParameterOutOfRange("AdS path needs |t| < 1");
  const double lambda = std::pow(ads ? 1.0 - t * t : 1.0 + t * t, -1.5);
  VecX out = VecX::Zero(5 * kGamma22Size);
  for (int i = 0; i < 8; ++i) {
    auto [plus, minus] = detail::path_rows<double>(i, t, ads ? 1 : -1);
    out.segment(5 * positive_index(i), 5) = lambda * minus;
    out.segment(5 * negative_index(i), 5) = (ads ? lambda : -lambda) * plus;
  }
  return out;
}

VecX min_norm_solve(const MatX& a, const VecX& b) {
  Eigen::JacobiSVD<MatX> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-10);
  return svd.solve(b);
}

ProjectionResult project_to_variety(const ConstraintSystem& system, const LiftD& start,
                                    const ProjectionOptions& opts) {
  ProjectionResult res;
  VecX x = flatten(start);
  LiftD current = start;
  for (int it = 1; it <= opts.max_iter; ++it) {
    VecX r = residual(system, current);
    res.residual = r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
    res.iterations = it;
    if (!std::isfinite(res.residual)) break;
    if (res.residual <= opts.tol_res) {
      res.lift = current;
      return res;
    }
    x += min_norm_solve(jacobian(system, current), -r);
    current = unflatten(start, x);
  }
  throw NoConvergence("residual " + std::to_string(res.residual) + " after " + std::to_string(opts.max_iter) +
                      " iterations");
}

std::vector<int> letter_gauge() {
  return {letter_index('A'), letter_index('B'), letter_index('C'), letter_index('D')};
}

std::vector<LiftD> trace_path(const ConstraintSystem& system, const LiftD& start, int steps, double step_size,
                              const TraceOptions& opts) {
  const int d = system.space.dim;
  std::vector<char> frozen(system.num_generators, 0);
  for (int g : opts.gauge) {
    if (g < 0 || g >= system.num_generators) throw IndexOutOfRange("gauge generator");
    frozen[g] = 1;
  }
  std::vector<int> free_cols;
  for (int s = 0; s < system.num_generators; ++s)
    if (!frozen[s])
      for (int k = 0; k < d; ++k) free_cols.push_back(s * d + k);
  const Eigen::Index nf = static_cast<Eigen::Index>(free_cols.size());

  auto restrict_cols = [&](const MatX& j) {
    MatX out(j.rows(), nf);
    for (Eigen::Index c = 0; c < nf; ++c) out.col(c) = j.col(free_cols[c]);
    return out;
  };
  auto restrict_vec = [&](const VecX& v) {
    VecX out(nf);
    for (Eigen::Index c = 0; c < nf; ++c) out(c) = v(free_cols[c]);
    return out;
  };
  auto tangent_at = [&](const LiftD& lift) {
    RankOptions ro;
    ro.throw_if_ill_conditioned = false;
    RankReport rep = rank_report(restrict_cols(jacobian(system, lift)), ro);
    if (rep.kernel_dim != 1 || rep.gap_ratio < ro.min_gap) {
      throw SliceDegenerate("gauge slice has kernel dimension " + std::to_string(rep.kernel_dim));
    }
    return VecX(rep.kernel_basis.col(0));
  };

  std::vector<LiftD> out{start};
  if (steps <= 0) return out;

  VecX x = flatten(start);
  VecX tangent = tangent_at(start);
  if (opts.initial_direction) {
    if (opts.initial_direction->size() != x.size()) throw DimensionMismatch("initial direction length");
    if (tangent.dot(restrict_vec(*opts.initial_direction)) < 0) tangent = -tangent;
  } else {
    Eigen::Index k;
    tangent.cwiseAbs().maxCoeff(&k);
    if (tangent(k) < 0) tangent = -tangent;
  }

  for (int step = 0; step < steps; ++step) {
    VecX predicted = x;
    for (Eigen::Index c = 0; c < nf; ++c) predicted(free_cols[c]) += step_size * tangent(c);
    VecX y = predicted;
    LiftD current = unflatten(start, y);
    bool converged = false;
    double res = 0.0;
    for (int it = 0; it < opts.corrector.max_iter; ++it) {
      VecX r = residual(system, current);
      double arc = tangent.dot(restrict_vec(VecX(y - predicted)));
      res = std::max(r.size() ? r.cwiseAbs().maxCoeff() : 0.0, std::abs(arc));
      if (res <= opts.corrector.tol_res) {
        converged = true;
        break;
      }
      MatX a(system.size() + 1, nf);
      a.topRows(system.size()) = restrict_cols(jacobian(system, current));
      a.bottomRows(1) = tangent.transpose();
      VecX rhs(system.size() + 1);
      rhs.head(system.size()) = -r;
      rhs(system.size()) = -arc;
      VecX delta = min_norm_solve(a, rhs);
      for (Eigen::Index c = 0; c < nf; ++c) y(free_cols[c]) += delta(c);
      current = unflatten(start, y);
    }
    if (!converged) {
      throw NoConvergence("corrector stalled at step " + std::to_string(step + 1) + ", residual " +
                          std::to_string(res));
    }
    VecX next_tangent = tangent_at(current);
    if (next_tangent.dot(tangent) < 0) next_tangent = -next_tangent;
    tangent = next_tangent;
    x = y;
    out.push_back(current);
  }
  return out;
}

MatX gram_matrix(const LiftD& lift) {
  const int n = lift.size();
  MatX g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) g(i, j) = g(j, i) = eval_bilinear(lift.space, lift.vectors[i], lift.vectors[j]);
  return g;
}

GramMatch match_standard_lift(Geometry geometry, const LiftD& lift) {
  const MatX target = gram_matrix(lift);
  auto error_at = [&](double t) {
    return (gram_matrix(standard_lift<double>(geometry, t)) - target).cwiseAbs().maxCoeff();
  };
  const double lo = -0.999, hi = 0.999;
  const int samples = 400;
  double best_t = lo, best_err = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= samples; ++k) {
    double t = lo + (hi - lo) * k / samples;
    double e = error_at(t);
    if (e < best_err) {
      best_err = e;
      best_t = t;
    }
  }
  const double h = (hi - lo) / samples;
  auto [t, err] = boost::math::tools::brent_find_minima(error_at, std::max(lo, best_t - h),
                                                        std::min(hi, best_t + h), 52);
  if (err > best_err) return {best_t, best_err};
  return {t, err};
}

std::vector<std::vector<int>> find_cusp_subgroups(const RACG& group, const LiftD& lift, double tol) {
  if (group.size() != lift.size()) throw DimensionMismatch("group and lift sizes differ");
  std::vector<std::pair<int, int>> opposite;
  for (auto [a, b] : group.non_commuting_pairs()) {
    double v = eval_bilinear(lift.space, lift.vectors[a], lift.vectors[b]);
    if (std::abs(std::abs(v) - 1.0) <= tol) opposite.emplace_back(a, b);
  }
  std::set<std::vector<int>> found;
  const size_t m = opposite.size();
  for (size_t x = 0; x < m; ++x) {
    for (size_t y = x + 1; y < m; ++y) {
      for (size_t z = y + 1; z < m; ++z) {
        std::vector<int> members = {opposite[x].first, opposite[x].second, opposite[y].first,
                                    opposite[y].second, opposite[z].first, opposite[z].second};
        std::vector<int> sorted = members;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        int non_commuting = 0;
        for (int a = 0; a < 6; ++a)
          for (int b = a + 1; b < 6; ++b)
            if (!group.commutes(sorted[a], sorted[b])) ++non_commuting;
        if (non_commuting != 3) continue;
        // Ordered as three opposite pairs.
        found.insert(members);
      }
    }
  }
  // The same subset may appear with its pairs listed in another order; keep one.
  std::set<std::vector<int>> by_members;
  std::vector<std::vector<int>> out;
  for (const auto& s : found) {
    std::vector<int> key = s;
    std::sort(key.begin(), key.end());
    if (by_members.insert(key).second) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> ka = a, kb = b;
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka < kb;
  });
  return out;
}

}  // namespace racg
