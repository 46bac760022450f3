#include "racg/cusp.hpp"

#include <optional>
#include <random>

#include "racg/parallel.hpp"

namespace racg {

std::string to_string(CuspKind k) {
  switch (k) {
    case CuspKind::Cusp: return "Cusp";
    case CuspKind::Collapsed: return "Collapsed";
    case CuspKind::RectSplit: return "RectSplit";
    case CuspKind::AdSRectTimelikeMeet: return "AdSRectTimelikeMeet";
    case CuspKind::AdSRectSpacelikeMeet: return "AdSRectSpacelikeMeet";
    case CuspKind::Unclassified: return "Unclassified";
  }
  return "?";
}

std::string CuspClass::label() const {
  auto p = [](std::pair<int, int> x) { return std::to_string(x.first) + "-" + std::to_string(x.second); };
  switch (kind) {
    case CuspKind::Collapsed: return "Collapsed(" + p(pair) + ")";
    case CuspKind::RectSplit: return "RectSplit(meet " + p(pair) + "; apart " + p(disjoint_pair) + ")";
    case CuspKind::Unclassified: return "Unclassified(" + reason + ")";
    default: return to_string(kind);
  }
}

namespace {

const std::vector<std::pair<int, int>> kCubeOpposite = {{0, 1}, {2, 3}, {4, 5}};

void check_orthogonal_pattern(const LiftD& lift, const RACG& group, double tol) {
  for (auto [a, b] : group.commuting_pairs()) {
    double v = eval_bilinear(lift.space, lift.vectors[a], lift.vectors[b]);
    if (std::abs(v) > tol) {
      throw PatternViolation("generators " + std::to_string(a) + "," + std::to_string(b) +
                             " should be orthogonal, b = " + std::to_string(v));
    }
  }
}

void check_hp_pattern(const std::vector<HPReflectionD>& refl, const RACG& group, double tol) {
  for (auto [a, b] : group.commuting_pairs()) {
    if (!hp_commute(refl[a].isometry(), refl[b].isometry(), tol)) {
      throw PatternViolation("generators " + std::to_string(a) + "," + std::to_string(b) + " should commute");
    }
  }
}

MatX functional_rows(const LiftD& lift) {
  MatX rows(lift.size(), lift.space.dim);
  MatX q = lift.space.gram<double>();
  for (int g = 0; g < lift.size(); ++g) rows.row(g) = (q * lift.vectors[g]).transpose();
  return rows;
}

CuspClass classify_by_null_direction(const MatX& rows, const QuadraticSpace& ideal_form, double tol) {
  CommonNullReport rep = common_null_direction(rows, ideal_form, tol);
  if (rep.kernel_dim == 0) {
    return CuspClass::unclassified("no common ideal point, smallest singular value " +
                                   std::to_string(rep.singular_values(rep.singular_values.size() - 1)));
  }
  if (rep.kernel_dim > 1) return CuspClass::unclassified("common kernel of dimension " + std::to_string(rep.kernel_dim));
  if (std::abs(rep.form_value) > tol) {
    return CuspClass::unclassified("common kernel is not null, q = " + std::to_string(rep.form_value));
  }
  return CuspClass::cusp();
}

}  // namespace

CommonNullReport common_null_direction(const MatX& functionals, const QuadraticSpace& ideal_form, double tol) {
  const Eigen::Index n = functionals.cols();
  if (n != ideal_form.dim) throw DimensionMismatch("functionals and form differ in dimension");
  MatX rows = functionals;
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    double norm = rows.row(r).norm();
    if (norm == 0.0) throw DegenerateNormal("zero functional");
    rows.row(r) /= norm;
  }
  Eigen::JacobiSVD<MatX> svd(rows, Eigen::ComputeFullV);
  CommonNullReport out;
  out.singular_values = VecX::Zero(n);
  out.singular_values.head(svd.singularValues().size()) = svd.singularValues();
  for (Eigen::Index k = 0; k < n; ++k)
    if (out.singular_values(k) <= tol) ++out.kernel_dim;
  if (out.kernel_dim == 1) {
    out.direction = svd.matrixV().col(n - 1);
    out.form_value = eval_form(ideal_form, out.direction);
  }
  return out;
}

CuspClass classify_rect(const LiftD& lift, double tol) {
  if (lift.size() != 4) throw DimensionMismatch("rectangle data needs four vectors");
  const bool hyp = lift.space == QuadraticSpace::hyperbolic(3);
  if (!hyp && !(lift.space == QuadraticSpace::anti_de_sitter(3))) {
    throw DimensionMismatch("rectangle data must live in R^{1,3} or R^{2,2}");
  }
  check_orthogonal_pattern(lift, gamma_rect(), tol);
  const auto& v = lift.vectors;
  for (auto [a, b] : {std::pair{0, 2}, std::pair{1, 3}})
    if (equal_up_to_sign(v[a], v[b], tol)) return CuspClass::collapsed({a, b});

  if (hyp) {
    PairClassHyp s = classify_pair_hyp(v[0], v[2], tol);
    PairClassHyp t = classify_pair_hyp(v[1], v[3], tol);
    if (s == PairClassHyp::TangentAtInfinity && t == PairClassHyp::TangentAtInfinity) return CuspClass::cusp();
    if (s == PairClassHyp::Intersecting && t == PairClassHyp::Disjoint) return CuspClass::rect_split({0, 2}, {1, 3});
    if (s == PairClassHyp::Disjoint && t == PairClassHyp::Intersecting) return CuspClass::rect_split({1, 3}, {0, 2});
    return CuspClass::unclassified("opposite pairs " + to_string(s) + " and " + to_string(t));
  }

  const double q0 = eval_form(lift.space, v[0]), q1 = eval_form(lift.space, v[1]);
  if ((q0 < 0) == (q1 < 0)) return CuspClass::unclassified("both opposite pairs have the same type");
  // The pair with timelike normals spans the spacelike planes.
  std::pair<int, int> sp = q0 < 0 ? std::pair{0, 2} : std::pair{1, 3};
  std::pair<int, int> tp = q0 < 0 ? std::pair{1, 3} : std::pair{0, 2};
  PairClassAdS s = classify_pair_ads(v[sp.first], v[sp.second], tol);
  PairClassAdS t = classify_pair_ads(v[tp.first], v[tp.second], tol);
  if (s == PairClassAdS::TangentAtInfinity && t == PairClassAdS::LightlikeIntersection) return CuspClass::cusp();
  if (s == PairClassAdS::Disjoint && t == PairClassAdS::TimelikeIntersection) {
    return {CuspKind::AdSRectTimelikeMeet, tp, sp, {}};
  }
  if (s == PairClassAdS::Intersecting && t == PairClassAdS::SpacelikeIntersection) {
    return {CuspKind::AdSRectSpacelikeMeet, sp, {-1, -1}, {}};
  }
  return CuspClass::unclassified("spacelike pair " + to_string(s) + ", timelike pair " + to_string(t));
}

CuspClass classify_rect_hp(const std::vector<HPReflectionD>& refl, double tol) {
  if (refl.size() != 4) throw DimensionMismatch("rectangle data needs four reflections");
  check_hp_pattern(refl, gamma_rect(), tol);
  auto kind = [&](int g) { return refl[g].kind; };
  if (kind(0) != kind(2) || kind(1) != kind(3)) throw MixedTypePair("opposite reflections of different kinds");
  if (kind(0) == kind(1)) return CuspClass::unclassified("all four reflections of the same kind");
  std::pair<int, int> nd = kind(0) == HPReflectionKind::NonDegenerate ? std::pair{0, 2} : std::pair{1, 3};
  std::pair<int, int> dg = kind(0) == HPReflectionKind::NonDegenerate ? std::pair{1, 3} : std::pair{0, 2};
  const VecX& p1 = refl[nd.first].point;
  const VecX& p2 = refl[nd.second].point;
  if (max_abs_entry(VecX(p2 - p1)) <= tol) return CuspClass::collapsed(nd);
  const HPReflectionD& x1 = refl[dg.first];
  const HPReflectionD& x2 = refl[dg.second];
  if (equal_up_to_sign(x1.normal, x2.normal, tol)) {
    if (isometries_equal(x1.isometry(), x2.isometry(), tol)) return CuspClass::collapsed(dg);
    return CuspClass::unclassified("degenerate planes coincide with different reflections");
  }
  PairClassHyp h = classify_pair_hyp(x1.normal, x2.normal, tol);
  DualPointClass d = classify_hp_dual_points(p1, p2, tol);
  if (h == PairClassHyp::TangentAtInfinity && d == DualPointClass::BoundaryTangent) return CuspClass::cusp();
  if (h == PairClassHyp::Intersecting && d == DualPointClass::Disjoint) return CuspClass::rect_split(dg, nd);
  if (h == PairClassHyp::Disjoint && d == DualPointClass::Intersect) return CuspClass::rect_split(nd, dg);
  return CuspClass::unclassified("degenerate pair " + to_string(h) + ", dual points " + to_string(d));
}

CuspClass classify_cube(const LiftD& lift, double tol) {
  if (lift.size() != 6) throw DimensionMismatch("cube data needs six vectors");
  if (lift.space.dim != 5) throw DimensionMismatch("cube data must live in a 5-dimensional space");
  for (const auto& x : lift.vectors) {
    if (std::abs(std::abs(eval_form(lift.space, x)) - 1.0) > tol) throw NotUnitNormal("cube normals need q = +-1");
  }
  check_orthogonal_pattern(lift, gamma_cube(), tol);
  for (auto [a, b] : kCubeOpposite)
    if (equal_up_to_sign(lift.vectors[a], lift.vectors[b], tol)) return CuspClass::collapsed({a, b});
  return classify_by_null_direction(functional_rows(lift), lift.space, tol);
}

CuspClass classify_cube_hp(const std::vector<HPReflectionD>& refl, double tol) {
  if (refl.size() != 6) throw DimensionMismatch("cube data needs six reflections");
  check_hp_pattern(refl, gamma_cube(), tol);
  for (auto [a, b] : kCubeOpposite)
    if (isometries_equal(refl[a].isometry(), refl[b].isometry(), tol)) return CuspClass::collapsed({a, b});
  const int n = refl.front().isometry().dim();
  MatX rows(6, n + 1);
  for (int g = 0; g < 6; ++g) rows.row(g) = refl[g].dual_functional().transpose();
  return classify_by_null_direction(rows, QuadraticSpace::half_pipe(n), tol);
}

CuspClass classify_rect(Geometry geometry, const ReflectionData& data, double tol) {
  if (geometry == Geometry::HalfPipe) {
    if (!std::holds_alternative<std::vector<HPReflectionD>>(data)) throw DimensionMismatch("half-pipe needs reflections");
    return classify_rect_hp(std::get<std::vector<HPReflectionD>>(data), tol);
  }
  if (!std::holds_alternative<LiftD>(data)) throw DimensionMismatch("expected normal vectors");
  const LiftD& lift = std::get<LiftD>(data);
  QuadraticSpace want = geometry == Geometry::Hyperbolic ? QuadraticSpace::hyperbolic(3) : QuadraticSpace::anti_de_sitter(3);
  if (!(lift.space == want)) throw DimensionMismatch("vectors do not match the geometry");
  return classify_rect(lift, tol);
}

CuspClass classify_cube(Geometry geometry, const ReflectionData& data, double tol) {
  if (geometry == Geometry::HalfPipe) {
    if (!std::holds_alternative<std::vector<HPReflectionD>>(data)) throw DimensionMismatch("half-pipe needs reflections");
    return classify_cube_hp(std::get<std::vector<HPReflectionD>>(data), tol);
  }
  if (!std::holds_alternative<LiftD>(data)) throw DimensionMismatch("expected normal vectors");
  const LiftD& lift = std::get<LiftD>(data);
  QuadraticSpace want = geometry == Geometry::Hyperbolic ? QuadraticSpace::hyperbolic(4) : QuadraticSpace::anti_de_sitter(4);
  if (!(lift.space == want)) throw DimensionMismatch("vectors do not match the geometry");
  return classify_cube(lift, tol);
}

// ---- half-pipe constraint system ----

namespace {

struct HPLayout {
  std::vector<int> offset;  // start of each generator's unknowns
  int total = 0;
  int n = 0;
};

HPLayout layout_of(const std::vector<HPReflectionD>& refl) {
  HPLayout l;
  l.n = refl.empty() ? 0 : refl.front().isometry().dim();
  for (const auto& r : refl) {
    l.offset.push_back(l.total);
    l.total += r.kind == HPReflectionKind::NonDegenerate ? l.n : l.n + 1;
  }
  return l;
}

int hp_rows(const RACG& group, const std::vector<HPReflectionD>& refl, int n) {
  int rows = 0;
  for (const auto& r : refl)
    if (r.kind == HPReflectionKind::Degenerate) ++rows;
  for (auto [a, b] : group.commuting_pairs()) {
    bool nd_a = refl[a].kind == HPReflectionKind::NonDegenerate, nd_b = refl[b].kind == HPReflectionKind::NonDegenerate;
    rows += (nd_a && nd_b) ? n : 1;
  }
  return rows;
}

double translation_coefficient(const HPReflectionD& r) {
  QuadraticSpace mink = QuadraticSpace::minkowski(static_cast<int>(r.normal.size()));
  return eval_bilinear(mink, r.normal, r.translation) / eval_form(mink, r.normal);
}

}  // namespace

VecX hp_flatten(const std::vector<HPReflectionD>& refl) {
  HPLayout l = layout_of(refl);
  VecX x(l.total);
  for (size_t g = 0; g < refl.size(); ++g) {
    if (refl[g].kind == HPReflectionKind::NonDegenerate) {
      x.segment(l.offset[g], l.n) = refl[g].point;
    } else {
      x.segment(l.offset[g], l.n) = refl[g].normal;
      x(l.offset[g] + l.n) = translation_coefficient(refl[g]);
    }
  }
  return x;
}

std::vector<HPReflectionD> hp_unflatten(const std::vector<HPReflectionD>& shape, const VecX& coords) {
  HPLayout l = layout_of(shape);
  if (coords.size() != l.total) throw DimensionMismatch("coordinate vector length");
  std::vector<HPReflectionD> out(shape.size());
  for (size_t g = 0; g < shape.size(); ++g) {
    out[g].kind = shape[g].kind;
    if (shape[g].kind == HPReflectionKind::NonDegenerate) {
      out[g].point = coords.segment(l.offset[g], l.n);
    } else {
      out[g].normal = coords.segment(l.offset[g], l.n);
      out[g].translation = coords(l.offset[g] + l.n) * out[g].normal;
    }
  }
  return out;
}

VecX hp_residual(const RACG& group, const std::vector<HPReflectionD>& refl) {
  if (static_cast<int>(refl.size()) != group.size()) throw DimensionMismatch("one reflection per generator required");
  HPLayout l = layout_of(refl);
  QuadraticSpace mink = QuadraticSpace::minkowski(l.n);
  VecX r(hp_rows(group, refl, l.n));
  int row = 0;
  for (const auto& x : refl)
    if (x.kind == HPReflectionKind::Degenerate) r(row++) = eval_form(mink, x.normal) - 1.0;
  for (auto [a, b] : group.commuting_pairs()) {
    const HPReflectionD& ra = refl[a];
    const HPReflectionD& rb = refl[b];
    const bool nd_a = ra.kind == HPReflectionKind::NonDegenerate, nd_b = rb.kind == HPReflectionKind::NonDegenerate;
    if (nd_a && nd_b) {
      r.segment(row, l.n) = ra.point - rb.point;
      row += l.n;
    } else if (!nd_a && !nd_b) {
      r(row++) = eval_bilinear(mink, ra.normal, rb.normal);
    } else {
      const HPReflectionD& deg = nd_a ? rb : ra;
      const HPReflectionD& nd = nd_a ? ra : rb;
      // (r_X, c X) commutes with (-id, 2p) iff c = 2 b(X, p).
      r(row++) = translation_coefficient(deg) - 2.0 * eval_bilinear(mink, deg.normal, nd.point);
    }
  }
  return r;
}

MatX hp_jacobian(const RACG& group, const std::vector<HPReflectionD>& refl) {
  HPLayout l = layout_of(refl);
  QuadraticSpace mink = QuadraticSpace::minkowski(l.n);
  MatX j_form = mink.gram<double>();
  MatX jac = MatX::Zero(hp_rows(group, refl, l.n), l.total);
  int row = 0;
  for (size_t g = 0; g < refl.size(); ++g) {
    if (refl[g].kind != HPReflectionKind::Degenerate) continue;
    jac.row(row++).segment(l.offset[g], l.n) = 2.0 * (j_form * refl[g].normal).transpose();
  }
  for (auto [a, b] : group.commuting_pairs()) {
    const bool nd_a = refl[a].kind == HPReflectionKind::NonDegenerate, nd_b = refl[b].kind == HPReflectionKind::NonDegenerate;
    if (nd_a && nd_b) {
      jac.block(row, l.offset[a], l.n, l.n) = MatX::Identity(l.n, l.n);
      jac.block(row, l.offset[b], l.n, l.n) = -MatX::Identity(l.n, l.n);
      row += l.n;
    } else if (!nd_a && !nd_b) {
      jac.row(row).segment(l.offset[a], l.n) = (j_form * refl[b].normal).transpose();
      jac.row(row).segment(l.offset[b], l.n) = (j_form * refl[a].normal).transpose();
      ++row;
    } else {
      const int deg = nd_a ? b : a;
      const int nd = nd_a ? a : b;
      jac(row, l.offset[deg] + l.n) = 1.0;
      jac.row(row).segment(l.offset[deg], l.n) = -2.0 * (j_form * refl[nd].point).transpose();
      jac.row(row).segment(l.offset[nd], l.n) = -2.0 * (j_form * refl[deg].normal).transpose();
      ++row;
    }
  }
  return jac;
}

HPProjectionResult hp_project(const RACG& group, const std::vector<HPReflectionD>& start, const ProjectionOptions& opts) {
  HPProjectionResult res;
  VecX x = hp_flatten(start);
  std::vector<HPReflectionD> current = hp_unflatten(start, x);
  for (int it = 1; it <= opts.max_iter; ++it) {
    VecX r = hp_residual(group, current);
    res.residual = r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
    res.iterations = it;
    if (!std::isfinite(res.residual)) break;
    if (res.residual <= opts.tol_res) {
      res.reflections = current;
      return res;
    }
    x += min_norm_solve(hp_jacobian(group, current), -r);
    current = hp_unflatten(start, x);
  }
  throw NoConvergence("residual " + std::to_string(res.residual) + " after " + std::to_string(opts.max_iter) +
                      " iterations");
}

// ---- experiments ----

std::string to_string(CuspGroupKind k) { return k == CuspGroupKind::Rect ? "rect3" : "cube4"; }

CuspGroupKind parse_cusp_group(const std::string& text) {
  if (text == "rect3") return CuspGroupKind::Rect;
  if (text == "cube4") return CuspGroupKind::Cube;
  throw ParameterOutOfRange("unknown cusp group " + text + " (expected rect3 or cube4)");
}

RACG cusp_group(CuspGroupKind kind) { return kind == CuspGroupKind::Rect ? gamma_rect() : gamma_cube(); }

namespace {

LiftD rect_lift(const QuadraticSpace& space, std::vector<VecX> vectors, std::vector<int> targets) {
  return {space, {"s1", "t1", "s2", "t2"}, std::move(vectors), std::move(targets)};
}


}  // namespace

ReflectionData base_configuration(Geometry geometry, CuspGroupKind kind) {
  if (kind == CuspGroupKind::Rect) {
    switch (geometry) {
      case Geometry::Hyperbolic:
        return rect_lift(QuadraticSpace::hyperbolic(3),
                         {make_vec<double>({0, 0, 1, 0}), make_vec<double>({0, 0, 0, 1}), make_vec<double>({1, 1, 1, 0}),
                          make_vec<double>({1, 1, 0, 1})},
                         {1, 1, 1, 1});
      case Geometry::AntiDeSitter:
        return rect_lift(QuadraticSpace::anti_de_sitter(3),
                         {make_vec<double>({0, 0, 0, 1}), make_vec<double>({0, 1, 0, 0}), make_vec<double>({1, 0, 1, 1}),
                          make_vec<double>({1, 1, 1, 0})},
                         {-1, 1, -1, 1});
      case Geometry::HalfPipe: {
        VecX w = make_vec<double>({1, 0, 1});
        return std::vector<HPReflectionD>{
            HPReflectionD::nondegenerate(VecX::Zero(3)),
            HPReflectionD::degenerate(make_vec<double>({0, 1, 0}), VecX::Zero(3), 1e-12),
            HPReflectionD::nondegenerate(VecX(w / 2.0)),
            HPReflectionD::degenerate(make_vec<double>({1, 1, 1}), VecX::Zero(3), 1e-12),
        };
      }
    }
  }
  return cube_configuration(geometry, geometry == Geometry::HalfPipe ? 1.0 : 0.4);
}

ReflectionData cube_configuration(Geometry geometry, double t, int subset) {
  // The half-pipe representation has the commutation graph of the hyperbolic path.
  LiftD lift = standard_lift<double>(geometry == Geometry::HalfPipe ? Geometry::Hyperbolic : geometry,
                                     geometry == Geometry::HalfPipe ? 0.4 : t);
  auto subsets = find_cusp_subgroups(gamma22(), lift, 1e-9);
  if (subset < 0 || subset >= static_cast<int>(subsets.size())) throw IndexOutOfRange("cusp subset index");
  const std::vector<int>& chosen = subsets[subset];
  if (geometry == Geometry::HalfPipe) {
    HPRepresentation<double> rep = rho_lambda<double>(t);
    std::vector<HPReflectionD> out;
    for (int g : chosen) out.push_back(rep.reflection(g));
    return out;
  }
  return restrict_lift(lift, chosen);
}

int ExperimentResult::count(CuspKind k) const {
  auto it = histogram.find(to_string(k));
  return it == histogram.end() ? 0 : it->second;
}

ExperimentResult rigidity_experiment(Geometry geometry, CuspGroupKind kind, const ExperimentOptions& opts) {
  return rigidity_experiment(geometry, kind, base_configuration(geometry, kind), opts);
}

ExperimentResult rigidity_experiment(Geometry geometry, CuspGroupKind kind, const ReflectionData& base,
                                     const ExperimentOptions& opts) {
  if (opts.trials < 0) throw ParameterOutOfRange("negative trial count");
  if (!(opts.noise >= 0.0)) throw ParameterOutOfRange("noise must be non-negative");
  RACG group = cusp_group(kind);
  auto classify = [&](const ReflectionData& data) {
    return kind == CuspGroupKind::Rect ? classify_rect(geometry, data, opts.classify_tol)
                                       : classify_cube(geometry, data, opts.classify_tol);
  };
  CuspClass base_class = classify(base);
  if (base_class.kind != CuspKind::Cusp && base_class.kind != CuspKind::Collapsed) {
    throw ParameterOutOfRange("base configuration is " + base_class.label() + ", expected a cusp group");
  }

  std::optional<ConstraintSystem> system;
  if (geometry != Geometry::HalfPipe) {
    const LiftD& lift = std::get<LiftD>(base);
    system = build_constraints(group, lift.space, lift.norm_targets);
  }

  ExperimentResult result;
  result.records.resize(opts.trials);
  parallel_for(static_cast<std::size_t>(opts.trials), [&](std::size_t i) {
    const int trial = static_cast<int>(i);
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> dist(-opts.noise, opts.noise);
    auto perturb = [&](VecX x) {
      if (opts.noise > 0.0)
        for (Eigen::Index k = 0; k < x.size(); ++k) x(k) += dist(rng);
      return x;
    };
    TrialRecord rec;
    rec.trial = trial;
    try {
      ReflectionData projected;
      if (system) {
        const LiftD& lift = std::get<LiftD>(base);
        ProjectionResult p = project_to_variety(*system, unflatten(lift, perturb(flatten(lift))), opts.projection);
        rec.residual = p.residual;
        rec.iterations = p.iterations;
        projected = p.lift;
      } else {
        const auto& refl = std::get<std::vector<HPReflectionD>>(base);
        HPProjectionResult p = hp_project(group, hp_unflatten(refl, perturb(hp_flatten(refl))), opts.projection);
        rec.residual = p.residual;
        rec.iterations = p.iterations;
        projected = p.reflections;
      }
      CuspClass c;
      try {
        c = classify(projected);
      } catch (const Error& e) {
        c = CuspClass::unclassified(e.what());
      }
      rec.kind = c.kind;
      rec.label = c.label();
    } catch (const NoConvergence&) {
      rec.converged = false;
      rec.label = "NoConvergence";
    }
    result.records[i] = rec;
  });
  for (const auto& rec : result.records) {
    if (!rec.converged) {
      ++result.no_convergence;
      ++result.histogram["NoConvergence"];
    } else {
      ++result.histogram[to_string(rec.kind)];
    }
  }
  return result;
}

}  // namespace racg
