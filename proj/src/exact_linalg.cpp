#include "racg/exact_linalg.hpp"

#include <utility>

namespace racg {

namespace {

using Row = std::vector<QSqrt2>;

std::vector<Row> to_rows(const ExactMat& m) {
  std::vector<Row> rows(m.rows(), Row(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

}  // namespace

EchelonForm bareiss_echelon(const ExactMat& m) {
  std::vector<Row> a = to_rows(m);
  const int nrows = static_cast<int>(m.rows()), ncols = static_cast<int>(m.cols());
  std::vector<int> origin(nrows);
  for (int i = 0; i < nrows; ++i) origin[i] = i;
  EchelonForm out;
  QSqrt2 prev_inv(1);
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int p = r;
    while (p < nrows && a[p][c].is_zero()) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[r]);
    std::swap(origin[p], origin[r]);
    const QSqrt2 pivot = a[r][c];
    for (int i = r + 1; i < nrows; ++i) {
      Row& row = a[i];
      const QSqrt2 lead = row[c];
      if (lead.is_zero()) {
        // row <- pivot * row / prev
        const QSqrt2 scale = pivot * prev_inv;
        for (int j = c + 1; j < ncols; ++j)
          if (!row[j].is_zero()) row[j] *= scale;
      } else {
        for (int j = c + 1; j < ncols; ++j) {
          const QSqrt2& top = a[r][j];
          if (top.is_zero()) {
            if (!row[j].is_zero()) row[j] = pivot * row[j] * prev_inv;
          } else {
            row[j] = (pivot * row[j] - lead * top) * prev_inv;
          }
        }
        row[c] = QSqrt2(0);
      }
    }
    prev_inv = pivot.inverse();
    out.pivot_columns.push_back(c);
    out.pivot_source_rows.push_back(origin[r]);
    ++r;
  }
  out.rows = ExactMat::Zero(nrows, ncols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < ncols; ++j) out.rows(i, j) = a[i][j];
  return out;
}

int exact_rank(const ExactMat& m) { return bareiss_echelon(m).rank(); }

namespace {

// Back substitution on an echelon form: solves for pivot variables given free ones.
ExactVec back_substitute(const EchelonForm& e, const ExactVec& rhs, const ExactVec& start) {
  ExactVec x = start;
  for (int k = e.rank() - 1; k >= 0; --k) {
    const int c = e.pivot_columns[k];
    QSqrt2 acc = rhs(k);
    for (Eigen::Index j = c + 1; j < e.rows.cols(); ++j)
      if (!e.rows(k, j).is_zero() && !x(j).is_zero()) acc -= e.rows(k, j) * x(j);
    x(c) = acc / e.rows(k, c);
  }
  return x;
}

}  // namespace

ExactMat exact_kernel(const ExactMat& m) {
  EchelonForm e = bareiss_echelon(m);
  const int n = static_cast<int>(m.cols());
  std::vector<char> is_pivot(n, 0);
  for (int c : e.pivot_columns) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  ExactMat basis(n, static_cast<Eigen::Index>(free_cols.size()));
  ExactVec zero_rhs = ExactVec::Zero(e.rank());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    ExactVec start = ExactVec::Zero(n);
    start(free_cols[k]) = QSqrt2(1);
    basis.col(static_cast<Eigen::Index>(k)) = back_substitute(e, zero_rhs, start);
  }
  return basis;
}

std::optional<ExactVec> exact_solve(const ExactMat& m, const ExactVec& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length");
  ExactMat aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  EchelonForm e = bareiss_echelon(aug);
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;
  EchelonForm coeffs;
  coeffs.rows = e.rows.leftCols(m.cols());
  coeffs.pivot_columns = e.pivot_columns;
  ExactVec rhs(e.rank());
  for (int k = 0; k < e.rank(); ++k) rhs(k) = e.rows(k, m.cols());
  return back_substitute(coeffs, rhs, ExactVec::Zero(m.cols()));
}

ExactMat exact_inverse(const ExactMat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  ExactMat inv(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    ExactVec e = ExactVec::Zero(n);
    e(c) = QSqrt2(1);
    auto x = exact_solve(m, e);
    if (!x) throw InvalidRepresentation("singular matrix");
    inv.col(c) = *x;
  }
  if (exact_rank(m) != n) throw InvalidRepresentation("singular matrix");
  return inv;
}

std::vector<int> independent_columns(const ExactMat& m) { return bareiss_echelon(m).pivot_columns; }

ExactMat column_space_basis(const ExactMat& m) {
  auto cols = independent_columns(m);
  ExactMat out(m.rows(), static_cast<Eigen::Index>(cols.size()));
  for (size_t k = 0; k < cols.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = m.col(cols[k]);
  return out;
}

bool in_column_span(const ExactMat& m, const ExactVec& v) {
  if (m.cols() == 0) return is_exactly_zero(v);
  return exact_solve(m, v).has_value();
}

}  // namespace racg
