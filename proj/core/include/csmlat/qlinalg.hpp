#pragma once

// Exact linear algebra over the rationals: incremental reduced-row-echelon
// maintenance, nullspace bases in canonical form, and row-space comparison.
// The reduced row echelon form of a row space is unique, so every result
// here is canonical regardless of insertion order.
//
// The integer routines (Hermite normal form, integer kernel) back the
// experimental integral-lattice mode only.

#include <cstddef>
#include <utility>
#include <vector>

#include "csmlat/rational.hpp"

namespace csmlat {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;
using SparseQVector = std::vector<std::pair<int, Rational>>;  // (column, value)

// Maintains the reduced row echelon form of the span of the inserted rows.
// Pivot selection is the first nonzero column, so the stored form is the
// canonical RREF of the row space at all times.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols);

  void insert(QVector row);
  void insert(const SparseQVector& row);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  // RREF rows, ordered by ascending pivot column.
  const QMatrix& rows() const { return rows_; }
  const std::vector<int>& pivot_columns() const { return pivots_; }

  // Canonical nullspace basis: one vector per free column in ascending
  // order, with a 1 in its free column and zeros in all other free columns.
  QMatrix nullspace_basis() const;

 private:
  std::size_t cols_;
  QMatrix rows_;
  std::vector<int> pivots_;  // ascending, parallel to rows_
};

struct RrefResult {
  QMatrix rows;
  std::vector<int> pivot_columns;
};

RrefResult rref(const QMatrix& rows, std::size_t cols);

// True iff the two sets of rows span the same subspace of Q^cols.
bool same_row_space(const QMatrix& a, const QMatrix& b, std::size_t cols);

using ZVector = std::vector<Integer>;
using ZMatrix = std::vector<ZVector>;

// Canonical row Hermite normal form of the lattice spanned by the rows:
// nonzero rows only, positive pivots, entries above each pivot reduced into
// [0, pivot). Two row sets span the same lattice iff their forms are equal.
ZMatrix hermite_normal_form(ZMatrix rows, std::size_t cols);

// Basis of the full integer kernel {x : A x = 0} as rows, obtained by
// unimodular column reduction; the result is a basis of the saturated
// kernel lattice.
ZMatrix integer_kernel_basis(const ZMatrix& rows, std::size_t cols);

}  // namespace csmlat
