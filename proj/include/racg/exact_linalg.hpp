#pragma once

#include <optional>
#include <vector>

#include "racg/scalar.hpp"

namespace racg {

/** Row echelon form produced by fraction-free (Bareiss) elimination. */
struct EchelonForm {
  ExactMat rows;                  // echelon rows, only the first rank are nonzero
  std::vector<int> pivot_columns;
  std::vector<int> pivot_source_rows;  // original row index of each pivot row
  int rank() const { return static_cast<int>(pivot_columns.size()); }
};

EchelonForm bareiss_echelon(const ExactMat& m);

int exact_rank(const ExactMat& m);

// Basis of the null space, one column per free variable.
ExactMat exact_kernel(const ExactMat& m);

// Some solution of m x = b, or nothing if the system is inconsistent.
std::optional<ExactVec> exact_solve(const ExactMat& m, const ExactVec& b);

ExactMat exact_inverse(const ExactMat& m);

// Indices of a maximal independent subset of columns, chosen greedily from the left.
std::vector<int> independent_columns(const ExactMat& m);

// Columns of m forming a basis of its column space.
ExactMat column_space_basis(const ExactMat& m);

// Whether v lies in the column span of m.
bool in_column_span(const ExactMat& m, const ExactVec& v);

}  // namespace racg
