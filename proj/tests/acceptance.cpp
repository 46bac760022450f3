// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <Eigen/SVD>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "racg/cohomology.hpp"
#include "racg/coxeter.hpp"
#include "racg/cusp.hpp"
#include "racg/exact_linalg.hpp"
#include "racg/halfpipe.hpp"
#include "racg/repvar.hpp"

using namespace racg;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << what;
      pass = false;
    }
  }
};

std::vector<double> path_grid() {
  std::vector<double> out;
  for (int k = -9; k <= 9; ++k) out.push_back(k / 10.0);
  return out;
}

const Geometry kVectorGeometries[] = {Geometry::Hyperbolic, Geometry::AntiDeSitter};

int numeric_rank(const MatX& m, double relative_tol = 1e-9) {
  Eigen::JacobiSVD<MatX> svd(m);
  const VecX& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > relative_tol * s(0)) ++r;
  return r;
}

MatX normalize_columns(MatX m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) m.col(c).normalize();
  return m;
}

// ---- criteria ----

void wall_normals(Outcome& o) {
  auto unit = gamma22_unit_normals<QSqrt2>();
  QuadraticSpace h = QuadraticSpace::hyperbolic(4);
  for (const auto& v : unit) o.require(eval_form(h, v) == QSqrt2(1), "q != 1 ");
  RACG from_normals = orthogonality_group(gamma22_names(), unit, h);
  o.require(from_normals.commuting_pairs().size() == 80, "orthogonal pair count ");
  o.require(from_normals.commuting_pairs() == gamma22().commuting_pairs(), "pairs differ from the group ");
  RACG co = gamma_co();
  o.require(co.size() == 14, "cuboctahedron group size ");
  RACG co_from_normals =
      orthogonality_group(cuboctahedron_names(), cuboctahedron_vectors<QSqrt2>(), QuadraticSpace::minkowski(4));
  o.require(co_from_normals.commuting_pairs() == co.commuting_pairs(), "cuboctahedron pairs ");
  o.detail << (o.pass ? "22 normals with q = 1, 80 orthogonal pairs, 14 cuboctahedron generators" : "");
}

void path_residuals(Outcome& o) {
  double worst = 0.0;
  for (Geometry g : kVectorGeometries) {
    ConstraintSystem sys = standard_system(g, true);
    o.require(sys.size() == 138, "system size ");
    for (double t : path_grid()) worst = std::max(worst, residual_max(sys, standard_lift<double>(g, t)));
  }
  o.require(worst < 1e-12, "residual ");
  o.detail << " max residual " << worst;
}

void kernel_dimensions(Outcome& o) {
  RankOptions opts;
  opts.relative_tol = 1e-9;
  opts.throw_if_ill_conditioned = false;
  double min_gap = 1e300;
  for (Geometry g : kVectorGeometries) {
    ConstraintSystem with_tangency = standard_system(g, true);
    ConstraintSystem plain = standard_system(g, false);
    for (double t : path_grid()) {
      LiftD lift = standard_lift<double>(g, t);
      RankReport r0 = kernel_report(with_tangency, lift, opts);
      o.require(r0.kernel_dim == 11, "g0 kernel at t=" + std::to_string(t) + " ");
      min_gap = std::min(min_gap, r0.gap_ratio);
      if (t != 0.0) {
        RankReport r = kernel_report(plain, lift, opts);
        o.require(r.kernel_dim == 11, "g kernel at t=" + std::to_string(t) + " ");
        min_gap = std::min(min_gap, r.gap_ratio);
      }
    }
  }
  o.require(min_gap >= 1e3, "spectral gap ");
  o.detail << " kernel 11 on 19 points x 2 geometries, min gap " << min_gap;
}

// Cocycle of a tangent vector: s -> (d r_s) r_s in the adapted basis of so(1,4).
MatX tangent_to_cocycle(const LiftD& lift, const MatX& tangents, const std::vector<ExactMat>& lie_basis) {
  const int dim = lift.space.dim;
  MatX j = lift.space.gram<double>();
  MatX basis(dim * dim, static_cast<Eigen::Index>(lie_basis.size()));
  for (size_t k = 0; k < lie_basis.size(); ++k) {
    MatX m = to_double(lie_basis[k]);
    basis.col(k) = Eigen::Map<const VecX>(m.data(), dim * dim);
  }
  Eigen::JacobiSVD<MatX> solver(basis, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::Index nb = basis.cols();
  MatX out(lift.size() * nb, tangents.cols());
  for (Eigen::Index c = 0; c < tangents.cols(); ++c) {
    for (int s = 0; s < lift.size(); ++s) {
      const VecX& v = lift.vectors[s];
      VecX w = tangents.col(c).segment(s * dim, dim);
      MatX dr = -2.0 * (w * v.transpose() * j + v * w.transpose() * j);
      MatX u = dr * reflection_matrix(lift.space, v);
      VecX flat = Eigen::Map<const VecX>(u.data(), dim * dim);
      out.col(c).segment(s * nb, nb) = solver.solve(flat);
    }
  }
  return out;
}

void collapse_kernel(Outcome& o) {
  LiftD lift = standard_lift_hyp<double>(0.0);
  RankOptions opts;
  opts.throw_if_ill_conditioned = false;
  RankReport r = kernel_report(standard_system(Geometry::Hyperbolic, false), lift, opts);
  NamedCohomology full = named_cohomology("full-hyp");
  o.require(r.kernel_dim == 23, "kernel dim ");
  o.require(full.report.dimZ1 == 23, "Z1 dim ");
  MatX image = normalize_columns(
      tangent_to_cocycle(lift, r.kernel_basis, adapted_orthogonal_basis(QuadraticSpace::hyperbolic(4))));
  MatX z1 = normalize_columns(to_double(full.report.z1_basis));
  MatX both(image.rows(), image.cols() + z1.cols());
  both << image, z1;
  int image_rank = numeric_rank(image), joint_rank = numeric_rank(both);
  o.require(image_rank == 23 && joint_rank == 23, "tangent cocycles do not span Z1 ");
  o.detail << " kernel " << r.kernel_dim << ", Z1 " << full.report.dimZ1 << ", rank of image " << image_rank
           << ", joint rank " << joint_rank;
}

void cohomology_dimensions(Outcome& o) {
  std::map<std::string, int> want{{"r13", 1}, {"so13", 12}, {"full-hyp", 13}, {"full-ads", 13}, {"full-hp", 13}};
  for (const auto& [name, h1] : want) {
    NamedCohomology c = named_cohomology(name);
    o.require(c.report.dimH1 == h1, name + " H1 ");
    if (name.rfind("full", 0) == 0)
      o.require(c.split && c.split->horizontal == 12 && c.split->vertical == 1, name + " split ");
    o.detail << " " << name << "=" << c.report.dimH1;
  }
}

void half_pipe_cocycle(Outcome& o) {
  RACG group = gamma22();
  auto rep = rho_lambda<QSqrt2>(QSqrt2(1));
  RelationReport rel = verify_representation<QSqrt2>(group, rep.projective(), 0.0);
  o.require(rel.ok(), "relations of rho_1 ");
  LinearRep r13 = LinearRep::validated(group, collapsed_rep_matrices());
  ExactVec tau = vertical_cocycle(QSqrt2(1));
  o.require(is_cocycle(group, r13, tau), "tau_1 not a cocycle ");
  o.require(!in_column_span(coboundary_space(group, r13), tau), "tau_1 is a coboundary ");
  CohomologyReport report = compute_cohomology(group, r13);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  ExactVec c(report.z1_basis.cols());
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = QSqrt2(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
  ExactVec reduced = reduce_mod_coboundary(r13, ExactVec(report.z1_basis * c));
  auto multiple = vertical_cocycle_multiple(reduced);
  o.require(multiple.has_value(), "reduction is not a multiple of tau ");
  o.detail << " relations exact, tau_1 in Z1 \\ B1";
  if (multiple) o.detail << ", random cocycle reduces to " << multiple->str() << " tau_1";
}

void known_tangent_check(Outcome& o) {
  double worst = 0.0;
  int points = 0;
  for (Geometry g : kVectorGeometries) {
    ConstraintSystem sys = standard_system(g, true);
    for (int k = 0; k < 10; ++k) {
      double t = -0.9 + 0.2 * k;
      LiftD lift = standard_lift<double>(g, t);
      VecX v = known_tangent(t, g);
      MatX jac = jacobian(sys, lift);
      worst = std::max(worst, (jac * v).cwiseAbs().maxCoeff());
      OrbitTangent orbit = orbit_tangent(lift);
      MatX aug(orbit.basis.rows(), orbit.basis.cols() + 1);
      aug << orbit.basis, v;
      int rank = numeric_rank(aug);
      o.require(rank == 11, "augmented rank at t=" + std::to_string(t) + " ");
      ++points;
    }
  }
  o.require(worst < 1e-10, "J v ");
  o.detail << " " << points << " points, max |J v| " << worst << ", augmented rank 11";
}

void cusp_census(Outcome& o) {
  RACG group = gamma22();
  const double tol = 1e-7;
  for (Geometry g : kVectorGeometries) {
    for (double t : {-0.6, -0.2, 0.0, 0.3, 0.7}) {
      auto subsets = find_cusp_subgroups(group, standard_lift<double>(g, t), 1e-9);
      o.require(subsets.size() == 12, to_string(g) + " subset count at t=" + std::to_string(t) + " ");
      for (int k = 0; k < 12; ++k) {
        CuspClass c = classify_cube(g, cube_configuration(g, t, k), tol);
        CuspKind want = t == 0.0 ? CuspKind::Collapsed : CuspKind::Cusp;
        o.require(c.kind == want, to_string(g) + " class at t=" + std::to_string(t) + " ");
      }
    }
  }
  for (double lambda : {-1.0, -0.3, 0.0, 0.5, 1.0}) {
    for (int k = 0; k < 12; ++k) {
      CuspClass c = classify_cube(Geometry::HalfPipe, cube_configuration(Geometry::HalfPipe, lambda, k), tol);
      CuspKind want = lambda == 0.0 ? CuspKind::Collapsed : CuspKind::Cusp;
      o.require(c.kind == want, "hp class at lambda=" + std::to_string(lambda) + " ");
    }
  }
  o.detail << " 12 subsets, Cusp off the collapse and Collapsed at 0 in hyp, ads, hp";
}

bool valid_split_label(const std::string& label) {
  // RectSplit(meet a-b; apart c-d) with {a-b, c-d} the two opposite pairs.
  if (label == "RectSplit(meet 0-2; apart 1-3)" || label == "RectSplit(meet 1-3; apart 0-2)") return true;
  return false;
}

void rigidity(Outcome& o) {
  ExperimentOptions opts;
  opts.trials = 1000;
  opts.noise = 1e-3;
  opts.seed = 1;
  int unclassified = 0;
  for (Geometry g : {Geometry::Hyperbolic, Geometry::AntiDeSitter, Geometry::HalfPipe}) {
    ExperimentResult res = rigidity_experiment(g, CuspGroupKind::Cube, opts);
    int non_cusp = static_cast<int>(res.records.size()) - res.count(CuspKind::Cusp);
    o.require(res.records.size() == 1000u && non_cusp == 0, to_string(g) + " cube non-cusp ");
    unclassified += res.count(CuspKind::Unclassified);
    o.detail << " cube " << to_string(g) << ": " << res.count(CuspKind::Cusp) << " Cusp;";
  }
  ExperimentResult rect = rigidity_experiment(Geometry::Hyperbolic, CuspGroupKind::Rect, opts);
  int splits = 0;
  for (const auto& r : rect.records) {
    if (r.kind == CuspKind::RectSplit) {
      ++splits;
      o.require(valid_split_label(r.label), "split label " + r.label + " ");
    } else {
      o.require(r.converged && r.kind == CuspKind::Cusp, "rect class " + r.label + " ");
    }
  }
  unclassified += rect.count(CuspKind::Unclassified);
  o.require(unclassified == 0, "unclassified outcomes ");
  o.detail << " rect hyp: " << splits << " RectSplit, " << rect.count(CuspKind::Cusp) << " Cusp; unclassified "
           << unclassified;
}

void crossing_trace(Outcome& o) {
  ConstraintSystem sys = standard_system(Geometry::AntiDeSitter, true);
  LiftD start = standard_lift_ads<double>(0.2);
  TraceOptions opts;
  opts.gauge = letter_gauge();
  opts.initial_direction = VecX(-known_tangent(0.2, Geometry::AntiDeSitter));
  auto path = trace_path(sys, start, 10, 0.3, opts);
  o.require(path.size() == 11, "path length ");
  double worst = 0.0, last_t = 0.2;
  for (size_t k = 1; k < path.size(); ++k) {
    GramMatch m = match_standard_lift(Geometry::AntiDeSitter, path[k]);
    worst = std::max(worst, m.error);
    last_t = m.t;
  }
  o.require(worst < 1e-6, "Gram match error ");
  o.require(last_t < 0.0, "did not cross t = 0 ");
  o.detail << " 10 steps from t=0.2 to t=" << last_t << ", max Gram error " << worst;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const Criterion criteria[] = {
      {"wall normals and commutation graph", wall_normals},
      {"path satisfies all 138 equations", path_residuals},
      {"kernel dimension 11 along the path", kernel_dimensions},
      {"kernel at the collapse equals the cocycle space", collapse_kernel},
      {"first cohomology dimensions and split", cohomology_dimensions},
      {"half-pipe representation and its cocycle", half_pipe_cocycle},
      {"known tangent lies in the kernel", known_tangent_check},
      {"cusp subgroup census", cusp_census},
      {"cusp rigidity under perturbation", rigidity},
      {"path tracing through the collapse", crossing_trace},
  };
  int failures = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    std::printf("%s [%d] %s:%s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
