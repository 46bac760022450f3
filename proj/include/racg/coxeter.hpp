#pragma once

#include <string>
#include <utility>
#include <vector>

#include "racg/geometry.hpp"

namespace racg {

/** Right-angled Coxeter group: involutive generators, some pairs commuting. */
class RACG {
 public:
  RACG() = default;
  RACG(std::vector<std::string> generators, std::vector<std::pair<int, int>> commuting_pairs);

  const std::vector<std::string>& generators() const { return generators_; }
  // Sorted, each pair stored with first < second.
  const std::vector<std::pair<int, int>>& commuting_pairs() const { return pairs_; }
  int size() const { return static_cast<int>(generators_.size()); }
  int index_of(const std::string& name) const;
  bool commutes(int i, int j) const;
  // Pairs of distinct generators that do not commute.
  std::vector<std::pair<int, int>> non_commuting_pairs() const;
  // Subgroup generated by the listed generators, with indices renumbered.
  RACG restrict_to(const std::vector<int>& subset) const;

 private:
  std::vector<std::string> generators_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<char>> adjacency_;
};

enum class LabelKind { Positive, Negative, Letter };

/** Generator label of the 22-generator group: i+, i- (i = 0..7) or a letter A..F. */
struct Gamma22Label {
  LabelKind kind = LabelKind::Positive;
  int index = 0;

  std::string name() const;
  // Position in the fixed generator order 0+..7+, 0-..7-, A..F.
  int position() const;
  static Gamma22Label from_position(int position);
  friend bool operator==(const Gamma22Label&, const Gamma22Label&) = default;
};

constexpr int kGamma22Size = 22;
constexpr int kLetterOffset = 16;

std::vector<Gamma22Label> gamma22_labels();
std::vector<std::string> gamma22_names();
inline int positive_index(int i) { return i; }
inline int negative_index(int i) { return 8 + i; }
inline int letter_index(char letter) { return kLetterOffset + (letter - 'A'); }

// Sign of coordinate k (1..4) of the positive generator i in the 24-cell table.
int gamma22_sign(int i, int k);

/**
 * Normals of the 22 walls exactly as tabulated: (sqrt2, +-1, +-1, +-1, +-1) for
 * i+ and i-, and (1, +-sqrt2 e_k) for the letters. The numbered vectors have
 * q = 2 and the letters q = 1.
 */
template <class S>
std::vector<Vec<S>> gamma22_table_vectors() {
  const S r2 = sqrt2_value<S>();
  std::vector<Vec<S>> out;
  for (int sheet = 0; sheet < 2; ++sheet) {
    for (int i = 0; i < 8; ++i) {
      Vec<S> v(5);
      v(0) = r2;
      for (int k = 1; k <= 4; ++k) v(k) = S(gamma22_sign(i, k));
      if (sheet == 1) v(4) = -v(4);
      out.push_back(v);
    }
  }
  const int axis[6] = {1, 2, 3, 3, 2, 1};
  const int sign[6] = {1, 1, 1, -1, -1, -1};
  for (int l = 0; l < 6; ++l) {
    Vec<S> v = Vec<S>::Zero(5);
    v(0) = S(1);
    v(axis[l]) = S(sign[l]) * r2;
    out.push_back(v);
  }
  return out;
}

// The same walls with every normal scaled to q = 1.
template <class S>
std::vector<Vec<S>> gamma22_unit_normals() {
  auto out = gamma22_table_vectors<S>();
  const S half_r2 = sqrt2_value<S>() / S(2);
  for (int i = 0; i < 16; ++i) out[i] *= half_r2;
  return out;
}

/** The 14 normals in R^{1,3} of the ideal right-angled cuboctahedron, order 0..7, A..F. */
template <class S>
std::vector<Vec<S>> cuboctahedron_vectors() {
  auto table = gamma22_table_vectors<S>();
  std::vector<Vec<S>> out;
  for (int i = 0; i < 8; ++i) out.push_back(table[i].head(4));
  for (int l = 0; l < 6; ++l) out.push_back(table[kLetterOffset + l].head(4));
  return out;
}

std::vector<std::string> cuboctahedron_names();

// Group whose commuting pairs are exactly the orthogonal pairs of the given normals.
template <class S>
RACG orthogonality_group(const std::vector<std::string>& names, const std::vector<Vec<S>>& normals,
                         const QuadraticSpace& space, const S& tol = S(0)) {
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < normals.size(); ++i)
    for (size_t j = i + 1; j < normals.size(); ++j)
      if (abs(eval_bilinear(space, normals[i], normals[j])) <= tol)
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return RACG(names, pairs);
}

RACG gamma22();
RACG gamma_rect();
RACG gamma_cube();
RACG gamma_co();

using Word = std::vector<int>;

template <class S>
Mat<S> evaluate_word(const std::vector<Mat<S>>& images, const Word& word) {
  if (images.empty()) throw IndexOutOfRange("empty assignment");
  const Eigen::Index n = images.front().rows();
  Mat<S> out = Mat<S>::Identity(n, n);
  for (int g : word) {
    if (g < 0 || g >= static_cast<int>(images.size())) {
      throw IndexOutOfRange("generator index " + std::to_string(g));
    }
    out = out * images[g];
  }
  return out;
}

struct RelationFailure {
  std::string relation;
  double defect = 0.0;
};

struct RelationReport {
  double max_defect = 0.0;
  std::vector<RelationFailure> failing;
  bool ok() const { return failing.empty(); }
};

namespace detail {
inline double spectral_norm(const MatX& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<MatX> svd(m);
  return svd.singularValues()(0);
}
}  // namespace detail

/**
 * Checks s^2 = 1 for every generator, [s1, s2] = 1 for every commuting pair, and
 * that commuting generators have distinct images. Exact scalars are compared
 * exactly; doubles use the operator 2-norm against tol.
 */
template <class S>
RelationReport verify_representation(const RACG& group, const std::vector<Mat<S>>& images, double tol) {
  if (static_cast<int>(images.size()) != group.size()) {
    throw DimensionMismatch("one image per generator required");
  }
  RelationReport report;
  auto record = [&](const std::string& name, const Mat<S>& deviation, bool must_vanish) {
    double defect = detail::spectral_norm(to_double(deviation));
    bool fails;
    if constexpr (is_exact_v<S>) {
      bool zero = is_exactly_zero(deviation);
      fails = must_vanish ? !zero : zero;
    } else {
      fails = must_vanish ? defect > tol : defect <= tol;
    }
    if (must_vanish) report.max_defect = std::max(report.max_defect, defect);
    if (fails) report.failing.push_back({name, defect});
  };
  const auto& names = group.generators();
  for (int s = 0; s < group.size(); ++s) {
    const Mat<S>& m = images[s];
    record(names[s] + "^2", Mat<S>(m * m - Mat<S>::Identity(m.rows(), m.cols())), true);
  }
  for (auto [a, b] : group.commuting_pairs()) {
    const Mat<S>& x = images[a];
    const Mat<S>& y = images[b];
    std::string label = "[" + names[a] + "," + names[b] + "]";
    record(label, Mat<S>(x * y - y * x), true);
    record(label + " distinct", Mat<S>(x - y), false);
  }
  return report;
}

}  // namespace racg
