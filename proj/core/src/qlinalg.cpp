#include "csmlat/qlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace csmlat {

RowReducer::RowReducer(std::size_t cols) : cols_(cols) {}

void RowReducer::insert(QVector row) {
  if (row.size() != cols_) {
    throw std::invalid_argument("row width does not match the reducer");
  }
  // Reduce against the stored pivots.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational& lead = row[pivots_[r]];
    if (sgn(lead) != 0) {
      const Rational factor = lead;
      const QVector& pivot_row = rows_[r];
      for (std::size_t j = pivots_[r]; j < cols_; ++j) {
        if (sgn(pivot_row[j]) != 0) row[j] -= factor * pivot_row[j];
      }
    }
  }
  // Find the new pivot, if any survives.
  std::size_t lead = cols_;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn(row[j]) != 0) {
      lead = j;
      break;
    }
  }
  if (lead == cols_) return;
  const Rational inv = row[lead];
  for (std::size_t j = lead; j < cols_; ++j) {
    if (sgn(row[j]) != 0) row[j] /= inv;
  }
  // Restore full reduction above the new pivot.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational& entry = rows_[r][lead];
    if (sgn(entry) != 0) {
      const Rational factor = entry;
      for (std::size_t j = lead; j < cols_; ++j) {
        if (sgn(row[j]) != 0) rows_[r][j] -= factor * row[j];
      }
    }
  }
  const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(),
                                    static_cast<int>(lead)) -
                   pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, static_cast<int>(lead));
  rows_.insert(rows_.begin() + pos, std::move(row));
}

void RowReducer::insert(const SparseQVector& row) {
  QVector dense(cols_, Rational(0));
  for (const auto& [col, value] : row) {
    if (col < 0 || static_cast<std::size_t>(col) >= cols_) {
      throw std::invalid_argument("sparse entry outside the column range");
    }
    dense[col] += value;
  }
  insert(std::move(dense));
}

QMatrix RowReducer::nullspace_basis() const {
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots_) is_pivot[p] = true;

  QMatrix basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols_, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (sgn(rows_[r][free]) != 0) {
        v[pivots_[r]] = -rows_[r][free];
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RrefResult rref(const QMatrix& rows, std::size_t cols) {
  RowReducer reducer(cols);
  for (const QVector& row : rows) reducer.insert(row);
  return {reducer.rows(), reducer.pivot_columns()};
}

bool same_row_space(const QMatrix& a, const QMatrix& b, std::size_t cols) {
  const RrefResult ra = rref(a, cols);
  const RrefResult rb = rref(b, cols);
  return ra.pivot_columns == rb.pivot_columns && ra.rows == rb.rows;
}

namespace {

// Negate a row in place.
void negate_row(ZVector& row) {
  for (Integer& x : row) x = -x;
}

}  // namespace

ZMatrix hermite_normal_form(ZMatrix rows, std::size_t cols) {
  for (const ZVector& row : rows) {
    if (row.size() != cols) {
      throw std::invalid_argument("HNF rows must share a width");
    }
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    // Euclid within the column until at most one nonzero at/below pivot_row.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (sgn(rows[r][col]) != 0 &&
            (best == rows.size() ||
             cmp(abs(rows[r][col]), abs(rows[best][col])) < 0)) {
          best = r;
        }
      }
      if (best == rows.size()) break;  // column is clear below
      std::swap(rows[pivot_row], rows[best]);
      bool reduced_all = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (sgn(rows[r][col]) == 0) continue;
        Integer q = rows[r][col] / rows[pivot_row][col];  // truncated
        if (q != 0) {
          for (std::size_t j = col; j < cols; ++j) {
            rows[r][j] -= q * rows[pivot_row][j];
          }
        }
        if (sgn(rows[r][col]) != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (sgn(rows[pivot_row][col]) == 0) continue;
    if (sgn(rows[pivot_row][col]) < 0) negate_row(rows[pivot_row]);
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(),
                 rows[pivot_row][col].get_mpz_t());
      if (q != 0) {
        for (std::size_t j = 0; j < cols; ++j) {
          rows[r][j] -= q * rows[pivot_row][j];
        }
      }
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

ZMatrix integer_kernel_basis(const ZMatrix& rows, std::size_t cols) {
  // Column-reduce A with unimodular operations, mirroring them on an
  // identity tracker; the tracker columns matching zeroed-out columns of A
  // form a kernel basis.
  ZMatrix a = rows;
  for (const ZVector& row : a) {
    if (row.size() != cols) {
      throw std::invalid_argument("kernel rows must share a width");
    }
  }
  ZMatrix tracker(cols, ZVector(cols, Integer(0)));
  for (std::size_t j = 0; j < cols; ++j) tracker[j][j] = 1;

  auto col_addmul = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (ZVector& row : a) row[dst] -= q * row[src];
    for (ZVector& row : tracker) row[dst] -= q * row[src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (ZVector& row : a) std::swap(row[x], row[y]);
    for (ZVector& row : tracker) std::swap(row[x], row[y]);
  };

  std::size_t lead = 0;
  for (std::size_t r = 0; r < a.size() && lead < cols; ++r) {
    while (true) {
      std::size_t best = cols;
      int nonzero = 0;
      for (std::size_t j = lead; j < cols; ++j) {
        if (sgn(a[r][j]) != 0) {
          ++nonzero;
          if (best == cols || cmp(abs(a[r][j]), abs(a[r][best])) < 0) {
            best = j;
          }
        }
      }
      if (nonzero == 0) break;  // row adds no pivot
      if (nonzero == 1) {
        if (best != lead) col_swap(lead, best);
        ++lead;
        break;
      }
      for (std::size_t j = lead; j < cols; ++j) {
        if (j == best || sgn(a[r][j]) == 0) continue;
        Integer q = a[r][j] / a[r][best];  // truncated
        if (q != 0) col_addmul(j, best, q);
      }
    }
  }

  ZMatrix kernel;
  for (std::size_t j = lead; j < cols; ++j) {
    ZVector v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = tracker[i][j];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace csmlat
