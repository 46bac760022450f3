#include "cli_commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "racg/cohomology.hpp"
#include "racg/cusp.hpp"
#include "racg/halfpipe.hpp"
#include "racg/parallel.hpp"

namespace racg::cli {

using nlohmann::json;

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  if (text.empty()) return out;
  auto number = [](const std::string& s) {
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw ParameterOutOfRange("bad number in grid: '" + s + "'");
    }
    if (used != s.size()) throw ParameterOutOfRange("bad number in grid: '" + s + "'");
    return v;
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw ParameterOutOfRange("grid range must be start:stop:count");
    double a = number(parts[0]), b = number(parts[1]);
    int n = 0;
    auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), n);
    if (ec != std::errc() || ptr != parts[2].data() + parts[2].size() || n < 0) {
      throw ParameterOutOfRange("grid count must be a non-negative integer");
    }
    for (int i = 0; i < n; ++i) out.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
    return out;
  }
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) out.push_back(number(p));
  return out;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

json number_or_string(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json matrix_json(const MatX& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json relation_json(const RelationReport& rep) {
  json failures = json::array();
  for (const auto& f : rep.failing) failures.push_back({{"relation", f.relation}, {"defect", f.defect}});
  return failures;
}

QSqrt2 parse_exact(const std::string& text) {
  try {
    return QSqrt2::parse(text);
  } catch (const std::exception&) {
    throw ParameterOutOfRange("not an exact number: '" + text + "' (use forms like 1/2 or 1-3/4*sqrt2)");
  }
}

double parse_real(const std::string& text) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == text.size() && used > 0) return v;
  return parse_exact(text).to_double();
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterOutOfRange("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParameterOutOfRange(path + ": " + e.what());
  }
}

RACG parse_group_json(const json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("commuting_pairs")) {
    throw InvalidGroup("group JSON needs 'generators' and 'commuting_pairs'");
  }
  std::vector<std::string> names;
  for (const auto& g : j.at("generators")) {
    if (!g.is_string()) throw InvalidGroup("generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  auto index = [&](const json& x) -> int {
    if (x.is_number_integer()) return x.get<int>();
    if (x.is_string()) {
      auto it = std::find(names.begin(), names.end(), x.get<std::string>());
      if (it == names.end()) throw InvalidGroup("unknown generator " + x.get<std::string>());
      return static_cast<int>(it - names.begin());
    }
    throw InvalidGroup("pair entries must be names or indices");
  };
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j.at("commuting_pairs")) {
    if (!p.is_array() || p.size() != 2) throw InvalidGroup("each commuting pair needs two entries");
    pairs.emplace_back(index(p[0]), index(p[1]));
  }
  return RACG(std::move(names), std::move(pairs));
}

ParsedLift parse_lift_json(const json& j, const std::vector<std::string>& generator_order) {
  if (!j.is_object() || !j.contains("signature") || !j.contains("vectors") || !j.contains("norm_targets")) {
    throw DimensionMismatch("lift JSON needs 'signature', 'norm_targets' and 'vectors'");
  }
  QuadraticSpace space(j.at("signature").get<std::vector<int>>());
  ParsedLift out;
  out.numeric.space = space;
  Lift<QSqrt2> exact{space, {}, {}, {}};
  bool all_exact = true;
  for (const auto& name : generator_order) {
    if (!j.at("vectors").contains(name)) throw DimensionMismatch("no vector for generator " + name);
    if (!j.at("norm_targets").contains(name)) throw DimensionMismatch("no norm target for generator " + name);
    const json& arr = j.at("vectors").at(name);
    if (!arr.is_array() || static_cast<int>(arr.size()) != space.dim) {
      throw DimensionMismatch("vector for " + name + " must have " + std::to_string(space.dim) + " entries");
    }
    VecX v(space.dim);
    ExactVec e(space.dim);
    for (int k = 0; k < space.dim; ++k) {
      const json& x = arr[k];
      if (x.is_number()) {
        v(k) = x.get<double>();
        all_exact = all_exact && x.is_number_integer();
        if (x.is_number_integer()) e(k) = QSqrt2(x.get<long>());
      } else if (x.is_string()) {
        const std::string s = x.get<std::string>();
        try {
          e(k) = QSqrt2::parse(s);
          v(k) = e(k).to_double();
        } catch (const std::exception&) {
          all_exact = false;
          v(k) = parse_real(s);
        }
      } else {
        throw DimensionMismatch("vector entries must be numbers or strings");
      }
    }
    int target = j.at("norm_targets").at(name).get<int>();
    out.numeric.names.push_back(name);
    out.numeric.vectors.push_back(v);
    out.numeric.norm_targets.push_back(target);
    exact.names.push_back(name);
    exact.vectors.push_back(e);
    exact.norm_targets.push_back(target);
  }
  if (all_exact) out.exact = std::move(exact);
  return out;
}

namespace {

struct Loaded {
  RACG group;
  ParsedLift lift;
};

Loaded load_user_lift(const std::string& group_file, const std::string& lift_file) {
  if (group_file.empty() || lift_file.empty()) throw ParameterOutOfRange("--group-file and --lift-file go together");
  Loaded l;
  l.group = parse_group_json(read_json_file(group_file));
  l.lift = parse_lift_json(read_json_file(lift_file), l.group.generators());
  return l;
}

// ---- verify ----

struct VerifyArgs {
  std::string geometry = "hyp";
  std::string t = "0";
  bool exact = false;
  double tol = 1e-12;
  std::string group_file, lift_file;
};

template <class S>
json verify_lift(const ConstraintSystem& system, const RACG& group, const Lift<S>& lift, double tol, bool& ok) {
  json j;
  Vec<S> r = residual(system, lift);
  j["constraints"] = system.size();
  j["residual_max"] = r.size() ? to_double(Vec<S>(r.cwiseAbs())).maxCoeff() : 0.0;
  RelationReport rel = verify_representation<S>(group, reflection_images(lift), std::max(tol, 1e-10));
  bool residual_ok;
  if constexpr (is_exact_v<S>) {
    residual_ok = is_exactly_zero(r);
    int nonzero = 0;
    for (Eigen::Index k = 0; k < r.size(); ++k) nonzero += !r(k).is_zero();
    j["residual_nonzero_entries"] = nonzero;
  } else {
    residual_ok = j["residual_max"].get<double>() < tol;
  }
  j["residual_ok"] = residual_ok;
  j["relations_ok"] = rel.ok();
  j["relation_max_defect"] = rel.max_defect;
  j["relation_failures"] = relation_json(rel);
  ok = residual_ok && rel.ok();
  return j;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  json j{{"schema_version", kSchemaVersion}, {"command", "verify"}, {"exact", a.exact}};
  bool ok = true;
  if (!a.lift_file.empty() || !a.group_file.empty()) {
    Loaded l = load_user_lift(a.group_file, a.lift_file);
    ConstraintSystem system = build_constraints(l.group, l.lift.numeric.space, l.lift.numeric.norm_targets);
    j["source"] = a.lift_file;
    if (a.exact && !l.lift.exact) throw NotRepresentable("lift has inexact entries");
    j.update(a.exact ? verify_lift(system, l.group, *l.lift.exact, a.tol, ok)
                     : verify_lift(system, l.group, l.lift.numeric, a.tol, ok));
  } else {
    Geometry g = parse_geometry(a.geometry);
    j["geometry"] = to_string(g);
    j["t"] = a.t;
    RACG group = gamma22();
    if (g == Geometry::HalfPipe) {
      bool rel_ok;
      if (a.exact) {
        auto rep = rho_lambda<QSqrt2>(parse_exact(a.t));
        RelationReport rel = verify_representation<QSqrt2>(group, rep.projective(), 0.0);
        rel_ok = rel.ok();
        j["relation_failures"] = relation_json(rel);
      } else {
        auto rep = rho_lambda<double>(parse_real(a.t));
        RelationReport rel = verify_representation<double>(group, rep.projective(), std::max(a.tol, 1e-10));
        rel_ok = rel.ok();
        j["relation_max_defect"] = rel.max_defect;
        j["relation_failures"] = relation_json(rel);
        std::vector<HPReflectionD> refl;
        for (int s = 0; s < rep.size(); ++s) refl.push_back(rep.reflection(s));
        VecX r = hp_residual(group, refl);
        j["constraints"] = r.size();
        j["residual_max"] = r.cwiseAbs().maxCoeff();
        rel_ok = rel_ok && r.cwiseAbs().maxCoeff() < a.tol;
      }
      j["relations_ok"] = rel_ok;
      ok = rel_ok;
    } else {
      ConstraintSystem system = standard_system(g, true);
      if (a.exact) {
        Lift<QSqrt2> lift = standard_lift<QSqrt2>(g, parse_exact(a.t));
        j.update(verify_lift(system, group, lift, 0.0, ok));
      } else {
        double t = parse_real(a.t);
        LiftD lift = standard_lift<double>(g, t);
        j.update(verify_lift(system, group, lift, a.tol, ok));
        if (g == Geometry::Hyperbolic && t == 1.0) {
          // At t = 1 the path reaches the 24-cell walls, scaled by 1/sqrt(2) on the i+- rows.
          auto table = gamma22_table_vectors<double>();
          double diff = 0.0;
          for (int s = 0; s < kGamma22Size; ++s) {
            VecX want = s < kLetterOffset ? VecX(table[s] / std::sqrt(2.0)) : table[s];
            diff = std::max(diff, max_abs_entry(VecX(lift.vectors[s] - want)));
          }
          j["table_max_difference"] = diff;
          j["table_match"] = diff < a.tol;
          ok = ok && diff < a.tol;
        }
      }
    }
  }
  j["ok"] = ok;
  out << j.dump(2) << "\n";
  return ok ? kOk : kVerificationFailed;
}

// ---- trace ----

struct TraceArgs {
  std::string geometry = "hyp";
  std::string grid = "-0.9:0.9:19";
  std::string system = "g0";
  std::string out_file;
  double relative_tol = 1e-9;
};

struct TraceRow {
  double t = 0;
  RankReport report;
};

int cmd_trace(const TraceArgs& a, std::ostream& out) {
  Geometry g = parse_geometry(a.geometry);
  if (g == Geometry::HalfPipe) throw ParameterOutOfRange("trace needs hyp or ads geometry");
  if (a.system != "g" && a.system != "g0") throw ParameterOutOfRange("system must be g or g0");
  std::vector<double> grid = parse_grid(a.grid);
  ConstraintSystem system = standard_system(g, a.system == "g0");
  RankOptions opts;
  opts.relative_tol = a.relative_tol;
  opts.throw_if_ill_conditioned = false;
  std::vector<TraceRow> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    rows[i].t = grid[i];
    rows[i].report = kernel_report(system, standard_lift<double>(g, grid[i]), opts);
  });
  std::ofstream file;
  if (!a.out_file.empty()) {
    file.open(a.out_file);
    if (!file) throw ParameterOutOfRange("cannot write " + a.out_file);
  }
  std::ostream& o = a.out_file.empty() ? out : file;
  o << "# racg trace schema_version=" << kSchemaVersion << "\n";
  o << "t,geometry,system,residual_max,rank,kernel_dim,gap_ratio\n";
  for (const auto& r : rows) {
    o << format_double(r.t) << "," << to_string(g) << "," << a.system << "," << format_double(r.report.residual_max)
      << "," << r.report.numeric_rank << "," << r.report.kernel_dim << "," << format_double(r.report.gap_ratio) << "\n";
  }
  return kOk;
}

// ---- cohomology ----

struct CohomologyArgs {
  std::string target;
  bool all = false;
  bool representatives = false;
};

json cohomology_json(const NamedCohomology& c, bool representatives) {
  json j{{"schema_version", kSchemaVersion},
         {"group", c.group},
         {"rep_name", c.rep_name},
         {"dimV", c.report.dimV},
         {"dimZ1", c.report.dimZ1},
         {"dimB1", c.report.dimB1},
         {"dimH1", c.report.dimH1}};
  j["split"] = c.split ? json::array({c.split->horizontal, c.split->vertical}) : json(nullptr);
  if (representatives) {
    json reps = json::array();
    const ExactMat& m = c.report.h1_representatives;
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
      json v = json::array();
      for (Eigen::Index k = 0; k < m.rows(); ++k) v.push_back(m(k, col).str());
      reps.push_back(v);
    }
    j["h1_representatives"] = reps;
  }
  return j;
}

int cmd_cohomology(const CohomologyArgs& a, std::ostream& out) {
  std::vector<std::string> targets;
  if (a.all) {
    targets = named_cohomology_choices();
  } else if (!a.target.empty()) {
    targets = {a.target};
  } else {
    throw ParameterOutOfRange("give --target or --all");
  }
  std::vector<NamedCohomology> results(targets.size());
  parallel_for(targets.size(), [&](std::size_t i) { results[i] = named_cohomology(targets[i]); });
  if (!a.all) {
    out << cohomology_json(results.front(), a.representatives).dump(2) << "\n";
  } else {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(cohomology_json(r, a.representatives));
    out << arr.dump(2) << "\n";
  }
  return kOk;
}

// ---- cusp ----

struct CuspArgs {
  std::string geometry = "hyp";
  std::string group = "cube4";
  std::optional<double> t;
  int subset = 0;
  int trials = 0;
  double noise = 1e-3;
  std::uint64_t seed = 1;
  double tol = 1e-7;
  std::string csv_file;
};

int cmd_cusp(const CuspArgs& a, std::ostream& out) {
  Geometry g = parse_geometry(a.geometry);
  CuspGroupKind kind = parse_cusp_group(a.group);
  ReflectionData base;
  if (kind == CuspGroupKind::Cube) {
    double t = a.t.value_or(g == Geometry::HalfPipe ? 1.0 : 0.4);
    base = cube_configuration(g, t, a.subset);
  } else {
    if (a.t) throw ParameterOutOfRange("--t applies to cube4 only");
    base = base_configuration(g, kind);
  }
  CuspClass base_class =
      kind == CuspGroupKind::Rect ? classify_rect(g, base, a.tol) : classify_cube(g, base, a.tol);
  json j{{"schema_version", kSchemaVersion},
         {"command", "cusp"},
         {"geometry", to_string(g)},
         {"group", to_string(kind)},
         {"base_class", base_class.label()},
         {"trials", a.trials},
         {"noise", a.noise},
         {"seed", a.seed},
         {"tol", a.tol}};
  if (kind == CuspGroupKind::Cube) {
    j["t"] = a.t.value_or(g == Geometry::HalfPipe ? 1.0 : 0.4);
    j["subset"] = a.subset;
  }
  if (a.trials > 0) {
    ExperimentOptions opts;
    opts.trials = a.trials;
    opts.noise = a.noise;
    opts.seed = a.seed;
    opts.classify_tol = a.tol;
    ExperimentResult res = rigidity_experiment(g, kind, base, opts);
    j["histogram"] = res.histogram;
    std::map<std::string, int> labels;
    for (const auto& r : res.records) ++labels[r.label];
    j["labels"] = labels;
    j["no_convergence"] = res.no_convergence;
    if (!a.csv_file.empty()) {
      std::ofstream f(a.csv_file);
      if (!f) throw ParameterOutOfRange("cannot write " + a.csv_file);
      f << "# racg cusp experiment schema_version=" << kSchemaVersion << " geometry=" << to_string(g)
        << " group=" << to_string(kind) << " seed=" << a.seed << "\n";
      f << "trial,class,residual,iterations\n";
      for (const auto& r : res.records) {
        f << r.trial << "," << csv_field(r.label) << "," << format_double(r.residual) << "," << r.iterations << "\n";
      }
    }
  }
  out << j.dump(2) << "\n";
  return kOk;
}

// ---- gram ----

struct GramArgs {
  std::string geometry = "hyp";
  double t = 0.5;
  double tol = 1e-9;
  std::string group_file, lift_file;
};

std::string pair_class(const QuadraticSpace& space, const VecX& x, const VecX& y, double tol) {
  if (std::abs(eval_bilinear(space, x, y)) <= tol) return "orthogonal";
  if (equal_up_to_sign(x, y, tol)) return "coincident";
  try {
    if (space == QuadraticSpace::hyperbolic(space.dim - 1)) return to_string(classify_pair_hyp(x, y, tol));
    if (space == QuadraticSpace::anti_de_sitter(space.dim - 1)) return to_string(classify_pair_ads(x, y, tol));
  } catch (const MixedTypePair&) {
    return "mixed";
  }
  return "unclassified";
}

int cmd_gram(const GramArgs& a, std::ostream& out) {
  RACG group;
  LiftD lift;
  std::vector<TangencyPair> tangency;
  json j{{"schema_version", kSchemaVersion}, {"command", "gram"}};
  if (!a.lift_file.empty() || !a.group_file.empty()) {
    Loaded l = load_user_lift(a.group_file, a.lift_file);
    group = l.group;
    lift = l.lift.numeric;
    for (const auto& tp : find_tangency_pairs(lift, a.tol))
      if (!group.commutes(tp.first, tp.second)) tangency.push_back(tp);
    j["source"] = a.lift_file;
  } else {
    Geometry g = parse_geometry(a.geometry);
    group = gamma22();
    lift = standard_lift<double>(g, a.t);
    tangency = standard_tangency_pairs(g);
    j["geometry"] = to_string(g);
    j["t"] = a.t;
  }
  MatX gram = gram_matrix(lift);
  std::set<std::pair<int, int>> tangent_set;
  for (const auto& tp : tangency) tangent_set.insert({std::min(tp.first, tp.second), std::max(tp.first, tp.second)});
  json pairs = json::array();
  int orthogonal_entries = 0, unit_entries = 0, commuting_ok = 0, tangency_ok = 0;
  for (int i = 0; i < lift.size(); ++i) {
    for (int k = i + 1; k < lift.size(); ++k) {
      double b = gram(i, k);
      std::string role = group.commutes(i, k) ? "commuting" : (tangent_set.count({i, k}) ? "tangency" : "free");
      if (std::abs(b) <= a.tol) ++orthogonal_entries;
      if (std::abs(std::abs(b) - 1.0) <= a.tol) ++unit_entries;
      if (role == "commuting" && std::abs(b) <= a.tol) ++commuting_ok;
      if (role == "tangency" && std::abs(std::abs(b) - 1.0) <= a.tol) ++tangency_ok;
      pairs.push_back({{"first", lift.names[i]},
                       {"second", lift.names[k]},
                       {"b", number_or_string(b)},
                       {"role", role},
                       {"class", pair_class(lift.space, lift.vectors[i], lift.vectors[k], a.tol)}});
    }
  }
  j["names"] = lift.names;
  j["gram"] = matrix_json(gram);
  j["pairs"] = pairs;
  j["summary"] = {{"commuting_pairs", group.commuting_pairs().size()},
                  {"commuting_pairs_orthogonal", commuting_ok},
                  {"tangency_pairs", tangency.size()},
                  {"tangency_pairs_satisfied", tangency_ok},
                  {"orthogonal_entries", orthogonal_entries},
                  {"unit_entries", unit_entries},
                  {"symmetric", (gram - gram.transpose()).cwiseAbs().maxCoeff() == 0.0}};
  out << j.dump(2) << "\n";
  return kOk;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::BadInput: return kBadInput;
    case ErrorKind::Numerical: return kNumericalFailure;
    case ErrorKind::Verification: return kVerificationFailed;
  }
  return kNumericalFailure;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reflection representations of right-angled Coxeter groups"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check the deformation path (or a user lift) against all relations");
  verify->add_option("--geometry", va.geometry, "hyp, ads or hp")->capture_default_str();
  verify->add_option("--t", va.t, "Path parameter (lambda for hp)")->capture_default_str();
  verify->add_flag("--exact", va.exact, "Use exact arithmetic over Q(sqrt2)");
  verify->add_option("--tol", va.tol, "Residual tolerance")->capture_default_str();
  verify->add_option("--group-file", va.group_file, "Group JSON");
  verify->add_option("--lift-file", va.lift_file, "Lift JSON");

  TraceArgs ta;
  auto* trace = app.add_subcommand("trace", "Rank and kernel dimension of the constraint Jacobian along the path");
  trace->add_option("--geometry", ta.geometry, "hyp or ads")->capture_default_str();
  trace->add_option("--grid", ta.grid, "start:stop:count or a comma-separated list")->capture_default_str();
  trace->add_option("--system", ta.system, "g (102 equations) or g0 (138 equations)")->capture_default_str();
  trace->add_option("--out", ta.out_file, "CSV output file (default stdout)");
  trace->add_option("--rank-tol", ta.relative_tol, "Relative singular value cutoff")->capture_default_str();

  CohomologyArgs ca;
  auto* coh = app.add_subcommand("cohomology", "Exact first cohomology of the collapsed representation");
  coh->add_option("--target", ca.target, "r13, so13, full-hyp, full-ads or full-hp");
  coh->add_flag("--all", ca.all, "Compute every target");
  coh->add_flag("--representatives", ca.representatives, "Include H1 representatives as exact strings");

  CuspArgs cu;
  auto* cusp = app.add_subcommand("cusp", "Classify cusp configurations and run perturbation experiments");
  cusp->add_option("--geometry", cu.geometry, "hyp, ads or hp")->capture_default_str();
  cusp->add_option("--group", cu.group, "rect3 or cube4")->capture_default_str();
  cusp->add_option("--t", cu.t, "Path parameter of the cube4 base (lambda for hp)");
  cusp->add_option("--subset", cu.subset, "Index of the cube subgroup")->capture_default_str();
  cusp->add_option("--trials", cu.trials, "Perturbation trials (0: classify the base only)")->capture_default_str();
  cusp->add_option("--noise", cu.noise, "Uniform noise radius per coordinate")->capture_default_str();
  cusp->add_option("--seed", cu.seed, "Random seed")->capture_default_str();
  cusp->add_option("--tol", cu.tol, "Classification tolerance")->capture_default_str();
  cusp->add_option("--csv", cu.csv_file, "Write per-trial CSV here");

  GramArgs ga;
  auto* gram = app.add_subcommand("gram", "Gram matrix of a lift with per-pair classification");
  gram->add_option("--geometry", ga.geometry, "hyp or ads")->capture_default_str();
  gram->add_option("--t", ga.t, "Path parameter")->capture_default_str();
  gram->add_option("--tol", ga.tol, "Tolerance for orthogonality and tangency")->capture_default_str();
  gram->add_option("--group-file", ga.group_file, "Group JSON");
  gram->add_option("--lift-file", ga.lift_file, "Lift JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*verify) return cmd_verify(va, out);
    if (*trace) return cmd_trace(ta, out);
    if (*coh) return cmd_cohomology(ca, out);
    if (*cusp) return cmd_cusp(cu, out);
    if (*gram) return cmd_gram(ga, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad JSON: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumericalFailure;
  }
  return kBadInput;
}

}  // namespace racg::cli
