#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "racg/coxeter.hpp"
#include "racg/repvar.hpp"

using namespace racg;

namespace {

// Central finite differences of the residual map.
MatX numeric_jacobian(const ConstraintSystem& system, const LiftD& lift, double h = 1e-6) {
  VecX x = flatten(lift);
  MatX out(system.size(), x.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    VecX plus = x, minus = x;
    plus(k) += h;
    minus(k) -= h;
    out.col(k) = (residual(system, unflatten(lift, plus)) - residual(system, unflatten(lift, minus))) / (2 * h);
  }
  return out;
}

std::set<std::pair<int, int>> pair_set(const std::vector<TangencyPair>& pairs) {
  std::set<std::pair<int, int>> out;
  for (const auto& p : pairs) out.insert({p.first, p.second});
  return out;
}

}  // namespace

TEST(StandardLift, HyperbolicExamples) {
  auto one = standard_lift_hyp<QSqrt2>(QSqrt2(1));
  auto table = gamma22_unit_normals<QSqrt2>();
  for (int s = 0; s < 22; ++s) EXPECT_EQ(one.vectors[s], table[s]) << one.names[s];

  auto zero = standard_lift_hyp<QSqrt2>(QSqrt2(0));
  EXPECT_EQ(zero.vectors[positive_index(0)], make_vec<QSqrt2>({0, 0, 0, 0, 1}));

  LiftD half = standard_lift_hyp<double>(0.5);
  EXPECT_NEAR(eval_form(half.space, half.vectors[negative_index(0)]), 1.0, 1e-15);
  for (int target : half.norm_targets) EXPECT_EQ(target, 1);
}

TEST(StandardLift, AntiDeSitterExamples) {
  auto ads0 = standard_lift_ads<QSqrt2>(QSqrt2(0));
  auto hyp0 = standard_lift_hyp<QSqrt2>(QSqrt2(0));
  for (int s = 0; s < 22; ++s) EXPECT_EQ(ads0.vectors[s], hyp0.vectors[s]);

  LiftD half = standard_lift_ads<double>(0.5);
  EXPECT_NEAR(eval_form(half.space, half.vectors[negative_index(1)]), 1.0, 1e-15);
  for (int i = 0; i < 8; ++i) {
    EXPECT_EQ(half.norm_targets[positive_index(i)], -1);
    EXPECT_EQ(half.norm_targets[negative_index(i)], 1);
  }
  EXPECT_NO_THROW(standard_lift_ads<double>(0.99));
  EXPECT_THROW(standard_lift_ads<double>(1.0), ParameterOutOfRange);
  EXPECT_THROW(standard_lift_ads<double>(-1.5), ParameterOutOfRange);
}

TEST(StandardLift, ExactLiftsSatisfyTheFullSystem) {
  auto hyp = standard_lift_hyp<QSqrt2>(QSqrt2::fraction(3, 4));
  EXPECT_TRUE(is_exactly_zero(residual(standard_system(Geometry::Hyperbolic, true), hyp)));
  auto ads = standard_lift_ads<QSqrt2>(QSqrt2::fraction(-3, 5));
  EXPECT_TRUE(is_exactly_zero(residual(standard_system(Geometry::AntiDeSitter, true), ads)));
}

TEST(Constraints, Counts) {
  RACG g = gamma22();
  std::vector<int> ones(22, 1);
  EXPECT_EQ(build_constraints(g, QuadraticSpace::hyperbolic(4), ones).size(), 102);
  EXPECT_EQ(standard_system(Geometry::Hyperbolic, false).size(), 102);
  EXPECT_EQ(standard_system(Geometry::Hyperbolic, true).size(), 138);
  EXPECT_EQ(standard_system(Geometry::AntiDeSitter, true).size(), 138);
  EXPECT_EQ(build_constraints(gamma_rect(), QuadraticSpace::hyperbolic(3), {1, 1, 1, 1}).size(), 8);
  // A tangency on a commuting pair is refused.
  auto [a, b] = g.commuting_pairs().front();
  EXPECT_THROW(build_constraints(g, QuadraticSpace::hyperbolic(4), ones, {{a, b, 1}}), OverlappingConstraint);
}

TEST(Tangency, StandardPairs) {
  auto pairs = find_tangency_pairs(standard_lift_hyp<double>(0.5), 1e-9);
  EXPECT_EQ(pairs.size(), 36u);
  bool found = false;
  for (const auto& p : pairs)
    if (p.first == letter_index('A') && p.second == letter_index('B')) {
      found = true;
      EXPECT_EQ(p.sign, -1);
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(pair_set(find_tangency_pairs(standard_lift_hyp<double>(0.3), 1e-9)),
            pair_set(find_tangency_pairs(standard_lift_hyp<double>(0.7), 1e-9)));
  for (double t : {-0.7, -0.2, 0.4, 0.8}) {
    for (Geometry geo : {Geometry::Hyperbolic, Geometry::AntiDeSitter}) {
      EXPECT_EQ(find_tangency_pairs(standard_lift<double>(geo, t), 1e-9), standard_tangency_pairs(geo));
    }
  }
}

TEST(Tangency, AmbiguousValueIsRefused) {
  LiftD lift = standard_lift_hyp<double>(0.5);
  // Push A slightly so that b(A, B) sits between tol and 10 tol away from -1.
  lift.vectors[letter_index('A')](2) += 3e-9 / std::sqrt(2.0);
  EXPECT_THROW(find_tangency_pairs(lift, 1e-9), AmbiguousNearThreshold);
}

TEST(Residual, StandardLifts) {
  EXPECT_LT(residual_max(standard_system(Geometry::Hyperbolic, true), standard_lift_hyp<double>(0.3)), 1e-12);
  EXPECT_LT(residual_max(standard_system(Geometry::AntiDeSitter, true), standard_lift_ads<double>(-0.6)), 1e-12);
  LiftD small{QuadraticSpace::hyperbolic(3), {"a"}, {VecX::Zero(4)}, {1}};
  EXPECT_THROW(residual(standard_system(Geometry::Hyperbolic, false), small), DimensionMismatch);
}

TEST(Residual, PerturbationIsLocal) {
  ConstraintSystem sys = standard_system(Geometry::Hyperbolic, true);
  LiftD lift = standard_lift_hyp<double>(0.3);
  VecX before = residual(sys, lift);
  const int g = negative_index(3);
  lift.vectors[g] += make_vec<double>({1e-3, -2e-3, 3e-3, 1.5e-3, -2.5e-3});
  VecX after = residual(sys, lift);
  for (int c = 0; c < sys.size(); ++c) {
    const Constraint& k = sys.constraints[c];
    bool names_g = k.first == g || k.second == g;
    if (!names_g) {
      EXPECT_EQ(after(c), before(c));
    } else {
      EXPECT_NE(after(c), before(c));
    }
  }
}

TEST(Jacobian, ShapeAndBlocks) {
  ConstraintSystem sys = standard_system(Geometry::AntiDeSitter, true);
  LiftD lift = standard_lift_ads<double>(0.0);
  MatX j = jacobian(sys, lift);
  EXPECT_EQ(j.rows(), 138);
  EXPECT_EQ(j.cols(), 110);
  for (int c = 0; c < sys.size(); ++c) {
    const Constraint& k = sys.constraints[c];
    if (k.kind != ConstraintKind::Norm || k.first != positive_index(0)) continue;
    for (int col = 0; col < 110; ++col) {
      if (col / 5 != positive_index(0)) EXPECT_EQ(j(c, col), 0.0);
    }
    EXPECT_GT(j.row(c).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(Jacobian, MatchesFiniteDifferences) {
  for (Geometry geo : {Geometry::Hyperbolic, Geometry::AntiDeSitter}) {
    ConstraintSystem sys = standard_system(geo, true);
    LiftD lift = standard_lift<double>(geo, 0.5);
    MatX a = jacobian(sys, lift), n = numeric_jacobian(sys, lift);
    EXPECT_LT((a - n).norm() / a.norm(), 1e-6);
  }
}

TEST(Jacobian, MatchesFiniteDifferencesAtRandomLifts) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> d;
  ConstraintSystem sys = standard_system(Geometry::Hyperbolic, true);
  LiftD shape = standard_lift_hyp<double>(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    VecX x(shape.unknowns());
    for (Eigen::Index k = 0; k < x.size(); ++k) x(k) = d(rng);
    LiftD lift = unflatten(shape, x);
    MatX a = jacobian(sys, lift), n = numeric_jacobian(sys, lift);
    EXPECT_LT((a - n).norm() / a.norm(), 1e-6);
  }
}

TEST(Kernel, Dimensions) {
  EXPECT_EQ(kernel_report(standard_system(Geometry::AntiDeSitter, true), standard_lift_ads<double>(0.0)).kernel_dim, 11);
  EXPECT_EQ(kernel_report(standard_system(Geometry::Hyperbolic, false), standard_lift_hyp<double>(0.5)).kernel_dim, 11);
  RankReport collapsed = kernel_report(standard_system(Geometry::Hyperbolic, false), standard_lift_hyp<double>(0.0));
  EXPECT_EQ(collapsed.kernel_dim, 23);
  EXPECT_GE(collapsed.gap_ratio, 1e3);
  EXPECT_EQ(collapsed.numeric_rank + collapsed.kernel_dim, 110);
}

TEST(Kernel, GridInBothGeometries) {
  for (int k = 0; k < 19; ++k) {
    double t = -0.9 + 0.1 * k;
    for (Geometry geo : {Geometry::Hyperbolic, Geometry::AntiDeSitter}) {
      LiftD lift = standard_lift<double>(geo, t);
      EXPECT_LT(residual_max(standard_system(geo, true), lift), 1e-12);
      RankReport with = kernel_report(standard_system(geo, true), lift);
      EXPECT_EQ(with.kernel_dim, 11) << to_string(geo) << " t = " << t;
      EXPECT_GE(with.gap_ratio, 1e3);
      if (k != 9) EXPECT_EQ(kernel_report(standard_system(geo, false), lift).kernel_dim, 11) << t;
    }
  }
}

TEST(Kernel, IllConditionedWithoutGap) {
  VecX sv(6);
  sv << 1, 1e-2, 1e-4, 1e-6, 1e-8, 1e-10;
  MatX m = sv.asDiagonal();
  EXPECT_THROW(rank_report(m), IllConditioned);
  RankOptions lenient;
  lenient.throw_if_ill_conditioned = false;
  EXPECT_NO_THROW(rank_report(m, lenient));
}

TEST(Orbit, DimensionAndKernel) {
  for (double t : {0.5, 0.0}) {
    LiftD lift = standard_lift_hyp<double>(t);
    OrbitTangent orbit = orbit_tangent(lift);
    EXPECT_EQ(orbit.dim, 10) << t;
    MatX j = jacobian(standard_system(Geometry::Hyperbolic, false), lift);
    EXPECT_LT((j * orbit.candidates).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(KnownTangent, AnnihilatesJacobianAndCompletesOrbit) {
  VecX at_zero = known_tangent(0.0, Geometry::AntiDeSitter);
  LiftD f0 = standard_lift_ads<double>(0.0);
  EXPECT_LT((at_zero.segment(5 * positive_index(0), 5) - f0.vectors[negative_index(0)]).norm(), 1e-15);
  EXPECT_THROW(known_tangent(1.0, Geometry::AntiDeSitter), ParameterOutOfRange);

  for (Geometry geo : {Geometry::Hyperbolic, Geometry::AntiDeSitter}) {
    for (double t : {-0.6, 0.0, 0.4}) {
      LiftD lift = standard_lift<double>(geo, t);
      VecX v = known_tangent(t, geo);
      MatX j = jacobian(standard_system(geo, true), lift);
      EXPECT_LT((j * v).cwiseAbs().maxCoeff(), 1e-10);
      OrbitTangent orbit = orbit_tangent(lift);
      MatX aug(v.size(), orbit.dim + 1);
      aug << orbit.basis, v;
      RankOptions ro;
      ro.throw_if_ill_conditioned = false;
      EXPECT_EQ(rank_report(aug.transpose(), ro).numeric_rank, 11);
    }
  }
}

TEST(KnownTangent, MatchesPathDerivative) {
  for (Geometry geo : {Geometry::Hyperbolic, Geometry::AntiDeSitter}) {
    const double t = 0.3, h = 1e-6;
    VecX fd = (flatten(standard_lift<double>(geo, t + h)) - flatten(standard_lift<double>(geo, t - h))) / (2 * h);
    EXPECT_LT((fd - known_tangent(t, geo)).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(Projection, ConvergesFromNoise) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> noise(-1e-4, 1e-4);
  ConstraintSystem sys = standard_system(Geometry::Hyperbolic, false);
  LiftD base = standard_lift_hyp<double>(0.5);
  VecX x = flatten(base);
  for (Eigen::Index k = 0; k < x.size(); ++k) x(k) += noise(rng);
  ProjectionResult r = project_to_variety(sys, unflatten(base, x));
  EXPECT_LT(r.residual, 1e-12);
  EXPECT_LE(r.iterations, 10);

  ProjectionResult same = project_to_variety(sys, base);
  EXPECT_EQ(same.iterations, 1);
  EXPECT_EQ(flatten(same.lift), flatten(base));
}

TEST(Projection, LargeNoiseMayFail) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> noise(-10.0, 10.0);
  ConstraintSystem sys = standard_system(Geometry::Hyperbolic, false);
  LiftD base = standard_lift_hyp<double>(0.5);
  VecX x = flatten(base);
  for (Eigen::Index k = 0; k < x.size(); ++k) x(k) += noise(rng);
  try {
    ProjectionResult r = project_to_variety(sys, unflatten(base, x));
    EXPECT_LE(r.residual, 1e-12);
  } catch (const NoConvergence&) {
    SUCCEED();
  }
}

TEST(Trace, ZeroStepsAndForwardSteps) {
  ConstraintSystem sys = standard_system(Geometry::AntiDeSitter, true);
  LiftD start = standard_lift_ads<double>(0.2);
  TraceOptions opts;
  opts.gauge = letter_gauge();
  opts.initial_direction = known_tangent(0.2, Geometry::AntiDeSitter);
  EXPECT_EQ(trace_path(sys, start, 0, 0.05, opts).size(), 1u);

  auto path = trace_path(sys, start, 10, 0.05, opts);
  ASSERT_EQ(path.size(), 11u);
  double previous = 0.2;
  for (size_t k = 1; k < path.size(); ++k) {
    EXPECT_LT(residual_max(sys, path[k]), 1e-10);
    GramMatch m = match_standard_lift(Geometry::AntiDeSitter, path[k]);
    EXPECT_LT(m.error, 1e-6);
    EXPECT_GT(m.t, previous);
    previous = m.t;
  }
}

TEST(Trace, CrossesTheCollapse) {
  ConstraintSystem sys = standard_system(Geometry::AntiDeSitter, true);
  LiftD start = standard_lift_ads<double>(0.2);
  TraceOptions opts;
  opts.gauge = letter_gauge();
  opts.initial_direction = VecX(-known_tangent(0.2, Geometry::AntiDeSitter));
  auto path = trace_path(sys, start, 10, 0.3, opts);
  double previous = 0.2;
  for (size_t k = 1; k < path.size(); ++k) {
    GramMatch m = match_standard_lift(Geometry::AntiDeSitter, path[k]);
    EXPECT_LT(m.error, 1e-6);
    EXPECT_LT(m.t, previous);
    previous = m.t;
  }
  EXPECT_LT(previous, 0.0);
}

TEST(CuspSubgroups, StandardLift) {
  RACG g = gamma22();
  auto subsets = find_cusp_subgroups(g, standard_lift_hyp<double>(0.5), 1e-9);
  ASSERT_EQ(subsets.size(), 12u);
  for (const auto& s : subsets) {
    ASSERT_EQ(s.size(), 6u);
    int letters = 0;
    for (int x : s)
      if (x >= kLetterOffset) ++letters;
    EXPECT_EQ(letters, 2);
  }
  EXPECT_EQ(find_cusp_subgroups(g, standard_lift_ads<double>(-0.3), 1e-9).size(), 12u);
}

TEST(Geometry, Parsing) {
  EXPECT_EQ(parse_geometry("hyp"), Geometry::Hyperbolic);
  EXPECT_EQ(parse_geometry("ads"), Geometry::AntiDeSitter);
  EXPECT_EQ(parse_geometry("hp"), Geometry::HalfPipe);
  EXPECT_THROW(parse_geometry("sphere"), ParameterOutOfRange);
}
