#include "csmlat/qlinalg.hpp"

#include <algorithm>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace csmlat;
using namespace csmlat::testing;

namespace {

QVector qvec(std::vector<long> values) {
  QVector out;
  for (long v : values) out.emplace_back(v);
  return out;
}

ZVector zvec(std::vector<long> values) {
  ZVector out;
  for (long v : values) out.emplace_back(v);
  return out;
}

Rational dot(const QVector& a, const QVector& b) {
  Rational total(0);
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

QMatrix random_matrix(RandomRational& rand, std::size_t rows,
                      std::size_t cols) {
  QMatrix out(rows, QVector(cols, Rational(0)));
  for (auto& row : out) {
    for (auto& entry : row) entry = Rational(rand.next_int(-4, 4));
  }
  return out;
}

}  // namespace

TEST_CASE("rref of small frozen matrices") {
  const RrefResult a = rref({qvec({1, 2}), qvec({2, 4})}, 2);
  CHECK(a.pivot_columns == std::vector<int>{0});
  CHECK(a.rows == QMatrix{qvec({1, 2})});

  const RrefResult b = rref({qvec({0, 1}), qvec({1, 0})}, 2);
  CHECK(b.pivot_columns == std::vector<int>{0, 1});
  CHECK(b.rows == QMatrix{qvec({1, 0}), qvec({0, 1})});

  const RrefResult c = rref({qvec({0, 0, 0})}, 3);
  CHECK(c.rows.empty());
}

TEST_CASE("nullspace basis of a single row") {
  RowReducer reducer(3);
  reducer.insert(qvec({1, 2, 3}));
  const QMatrix basis = reducer.nullspace_basis();
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == qvec({-2, 1, 0}));
  CHECK(basis[1] == qvec({-3, 0, 1}));
}

TEST_CASE("nullspace vectors annihilate random systems") {
  RandomRational rand(71);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rand.next_int(1, 8));
    const std::size_t cols = static_cast<std::size_t>(rand.next_int(1, 10));
    const QMatrix a = random_matrix(rand, rows, cols);
    RowReducer reducer(cols);
    for (const QVector& row : a) reducer.insert(row);
    const QMatrix basis = reducer.nullspace_basis();
    CHECK(reducer.rank() + basis.size() == cols);
    for (const QVector& v : basis) {
      for (const QVector& row : a) {
        CHECK(dot(row, v) == 0);
      }
    }
    // RREF is idempotent.
    const RrefResult again = rref(reducer.rows(), cols);
    CHECK(again.rows == reducer.rows());
    CHECK(again.pivot_columns == reducer.pivot_columns());
  }
}

TEST_CASE("rref is canonical under row mixing and reordering") {
  RandomRational rand(72);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rand.next_int(2, 6));
    const std::size_t cols = static_cast<std::size_t>(rand.next_int(2, 8));
    QMatrix a = random_matrix(rand, rows, cols);

    // Mix: add random multiples of other rows, then shuffle.
    QMatrix mixed = a;
    for (int mix = 0; mix < 6; ++mix) {
      const std::size_t i =
          static_cast<std::size_t>(rand.next_int(0, static_cast<long>(rows - 1)));
      const std::size_t j =
          static_cast<std::size_t>(rand.next_int(0, static_cast<long>(rows - 1)));
      if (i == j) continue;
      const Rational c = Rational(rand.next_int(-3, 3));
      for (std::size_t k = 0; k < cols; ++k) mixed[i][k] += c * mixed[j][k];
    }
    std::shuffle(mixed.begin(), mixed.end(), rand.rng());

    CHECK(same_row_space(a, mixed, cols));
    const RrefResult ra = rref(a, cols);
    const RrefResult rm = rref(mixed, cols);
    CHECK(ra.rows == rm.rows);

    // A genuinely different space is detected.
    QMatrix other = a;
    other.push_back(QVector(cols, Rational(0)));
    other.back()[cols - 1] = 1;
    if (!same_row_space(a, other, cols)) {
      CHECK(rref(other, cols).rows != ra.rows);
    }
  }
}

TEST_CASE("sparse insertion matches dense insertion") {
  RowReducer dense(4);
  dense.insert(qvec({0, 2, 0, -2}));
  RowReducer sparse(4);
  sparse.insert(SparseQVector{{1, Rational(2)}, {3, Rational(-2)}});
  CHECK(dense.rows() == sparse.rows());
  CHECK_THROWS_AS(sparse.insert(SparseQVector{{7, Rational(1)}}),
                  std::invalid_argument);
}

TEST_CASE("hermite normal form of frozen lattices") {
  const ZMatrix a = hermite_normal_form({zvec({2, 4}), zvec({1, 1})}, 2);
  CHECK(a == ZMatrix{zvec({1, 1}), zvec({0, 2})});

  const ZMatrix b = hermite_normal_form({zvec({2, 0}), zvec({0, 2})}, 2);
  CHECK(b == ZMatrix{zvec({2, 0}), zvec({0, 2})});

  // Unimodular row operations leave the form unchanged.
  const ZMatrix c =
      hermite_normal_form({zvec({1, 1}), zvec({3, 5})}, 2);
  const ZMatrix d =
      hermite_normal_form({zvec({4, 6}), zvec({3, 5})}, 2);
  CHECK(c == d);

  // Zero rows disappear.
  const ZMatrix e = hermite_normal_form({zvec({0, 0}), zvec({5, 10})}, 2);
  CHECK(e == ZMatrix{zvec({5, 10})});
}

TEST_CASE("integer kernel bases annihilate and saturate") {
  // 2x + 2y = 0 has the primitive solution (1, -1), not (2, -2).
  const ZMatrix k1 = integer_kernel_basis({zvec({2, 2})}, 2);
  REQUIRE(k1.size() == 1);
  CHECK((k1[0] == zvec({1, -1}) || k1[0] == zvec({-1, 1})));

  const ZMatrix k2 = integer_kernel_basis({zvec({1, 1, 1})}, 3);
  CHECK(k2.size() == 2);

  RandomRational rand(73);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rand.next_int(1, 5));
    const std::size_t cols = static_cast<std::size_t>(rand.next_int(1, 7));
    ZMatrix a(rows, ZVector(cols, Integer(0)));
    for (auto& row : a) {
      for (auto& x : row) x = Integer(rand.next_int(-5, 5));
    }
    const ZMatrix kernel = integer_kernel_basis(a, cols);
    for (const ZVector& v : kernel) {
      for (const ZVector& row : a) {
        Integer total(0);
        for (std::size_t i = 0; i < cols; ++i) total += row[i] * v[i];
        CHECK(total == 0);
      }
    }
    // Rank-nullity against the rational reducer.
    RowReducer reducer(cols);
    for (const ZVector& row : a) {
      QVector q(cols);
      for (std::size_t i = 0; i < cols; ++i) q[i] = Rational(row[i]);
      reducer.insert(std::move(q));
    }
    CHECK(kernel.size() + reducer.rank() == cols);
  }
}
