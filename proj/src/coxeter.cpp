#include "racg/coxeter.hpp"

#include <algorithm>
#include <set>

namespace racg {

RACG::RACG(std::vector<std::string> generators, std::vector<std::pair<int, int>> commuting_pairs)
    : generators_(std::move(generators)) {
  const int n = size();
  std::set<std::string> seen_names(generators_.begin(), generators_.end());
  if (static_cast<int>(seen_names.size()) != n) throw InvalidGroup("duplicate generator names");
  adjacency_.assign(n, std::vector<char>(n, 0));
  for (auto [a, b] : commuting_pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InvalidGroup("pair index out of range: (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (a == b) throw InvalidGroup("a generator cannot be paired with itself");
    if (a > b) std::swap(a, b);
    if (adjacency_[a][b]) {
      throw InvalidGroup("duplicate pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    adjacency_[a][b] = adjacency_[b][a] = 1;
    pairs_.emplace_back(a, b);
  }
  std::sort(pairs_.begin(), pairs_.end());
}

int RACG::index_of(const std::string& name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) throw IndexOutOfRange("unknown generator " + name);
  return static_cast<int>(it - generators_.begin());
}

bool RACG::commutes(int i, int j) const {
  if (i < 0 || j < 0 || i >= size() || j >= size()) throw IndexOutOfRange("generator index");
  return adjacency_[i][j] != 0;
}

std::vector<std::pair<int, int>> RACG::non_commuting_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (!adjacency_[i][j]) out.emplace_back(i, j);
  return out;
}

RACG RACG::restrict_to(const std::vector<int>& subset) const {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> pairs;
  for (int g : subset) {
    if (g < 0 || g >= size()) throw IndexOutOfRange("generator index");
    names.push_back(generators_[g]);
  }
  for (size_t a = 0; a < subset.size(); ++a)
    for (size_t b = a + 1; b < subset.size(); ++b)
      if (adjacency_[subset[a]][subset[b]]) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return RACG(names, pairs);
}

std::string Gamma22Label::name() const {
  switch (kind) {
    case LabelKind::Positive: return std::to_string(index) + "+";
    case LabelKind::Negative: return std::to_string(index) + "-";
    case LabelKind::Letter: return std::string(1, static_cast<char>('A' + index));
  }
  return "?";
}

int Gamma22Label::position() const {
  switch (kind) {
    case LabelKind::Positive: return index;
    case LabelKind::Negative: return 8 + index;
    case LabelKind::Letter: return kLetterOffset + index;
  }
  return -1;
}

Gamma22Label Gamma22Label::from_position(int position) {
  if (position < 0 || position >= kGamma22Size) throw IndexOutOfRange("label position");
  if (position < 8) return {LabelKind::Positive, position};
  if (position < 16) return {LabelKind::Negative, position - 8};
  return {LabelKind::Letter, position - kLetterOffset};
}

std::vector<Gamma22Label> gamma22_labels() {
  std::vector<Gamma22Label> out;
  for (int p = 0; p < kGamma22Size; ++p) out.push_back(Gamma22Label::from_position(p));
  return out;
}

std::vector<std::string> gamma22_names() {
  std::vector<std::string> out;
  for (const auto& l : gamma22_labels()) out.push_back(l.name());
  return out;
}

int gamma22_sign(int i, int k) {
  static const int signs[8][4] = {{1, 1, 1, 1},   {1, -1, 1, -1},  {1, -1, -1, 1},  {1, 1, -1, -1},
                                  {-1, 1, -1, 1}, {-1, 1, 1, -1}, {-1, -1, 1, 1}, {-1, -1, -1, -1}};
  if (i < 0 || i > 7 || k < 1 || k > 4) throw IndexOutOfRange("sign table index");
  return signs[i][k - 1];
}

std::vector<std::string> cuboctahedron_names() {
  std::vector<std::string> out;
  for (int i = 0; i < 8; ++i) out.push_back(std::to_string(i));
  for (char c = 'A'; c <= 'F'; ++c) out.push_back(std::string(1, c));
  return out;
}

RACG gamma22() {
  RACG g = orthogonality_group<QSqrt2>(gamma22_names(), gamma22_table_vectors<QSqrt2>(),
                                       QuadraticSpace::hyperbolic(4));
  if (g.commuting_pairs().size() != 80) {
    throw InvalidGroup("expected 80 orthogonal pairs, found " + std::to_string(g.commuting_pairs().size()));
  }
  return g;
}

RACG gamma_rect() { return RACG({"s1", "t1", "s2", "t2"}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

RACG gamma_cube() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (j != i + 1 || i % 2 == 1) pairs.emplace_back(i, j);
  return RACG({"x1", "x2", "y1", "y2", "z1", "z2"}, pairs);
}

RACG gamma_co() {
  RACG g = orthogonality_group<QSqrt2>(cuboctahedron_names(), cuboctahedron_vectors<QSqrt2>(),
                                       QuadraticSpace::minkowski(4));
  if (g.size() != 14 || g.commuting_pairs().size() != 24) {
    throw InvalidGroup("expected 24 orthogonal pairs, found " + std::to_string(g.commuting_pairs().size()));
  }
  return g;
}

}  // namespace racg
