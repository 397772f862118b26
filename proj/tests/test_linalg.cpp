#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hv/linalg.hpp"

using namespace hv;

namespace {

QMatrix dense(std::vector<std::vector<RationalScalar>> rows) { return QMatrix::from_dense(rows); }

}  // namespace

TEST_CASE("rank of identity, zero and proportional matrices") {
  CHECK(rank_ff(QMatrix::identity(3)) == 3);
  CHECK(rank_mod(QMatrix::identity(3)) == 3);
  CHECK(rank_ff(QMatrix(4, 7)) == 0);
  CHECK(rank_mod(QMatrix(4, 7)) == 0);
  CHECK(rank_ff(dense({{1, 2}, {2, 4}})) == 1);
  CHECK(rank_mod(dense({{make_rational(1, 2), 1}, {1, 2}})) == 1);
}

TEST_CASE("modular rank agrees with fraction-free rank on random rational matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<QVector> rows(20, QVector(20));
    // Rows 15..19 repeat combinations of earlier rows, so the rank is below 20.
    for (int i = 0; i < 15; ++i)
      for (auto& x : rows[i]) x = make_rational(num(rng), den(rng));
    for (int i = 15; i < 20; ++i) rows[i] = add(rows[i - 15], scale(rows[i - 14], make_rational(num(rng), den(rng))));
    QMatrix m = QMatrix::from_dense(rows);
    CHECK(rank_ff(m) == rank_mod(m));
    CHECK(certified_rank(m) == 15);
  }
}

TEST_CASE("certified rank counts matrices without disagreement") {
  reset_linalg_stats();
  certified_rank(QMatrix::identity(4));
  certified_rank(dense({{1, 2}, {2, 4}}));
  auto s = linalg_stats();
  CHECK(s.certified_matrices == 2);
  CHECK(s.disagreements == 0);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(QMatrix::identity(3)).empty());
  auto k = kernel_basis(QMatrix(2, 3));
  CHECK(k.size() == 3);
  CHECK(span_rank(k, 3) == 3);
  QMatrix row = dense({{1, 1, 0}});
  auto kr = kernel_basis(row);
  REQUIRE(kr.size() == 2);
  CHECK(span_rank(kr, 3) == 2);
  for (const auto& v : kr) CHECK(is_zero(row.apply(v)));
}

TEST_CASE("solve") {
  QVector b = {3, make_rational(-2, 7), 5};
  auto x = solve(QMatrix::identity(3), b);
  REQUIRE(x);
  CHECK(*x == b);
  CHECK_FALSE(solve(QMatrix(2, 2), QVector{1, 0}));
  auto y = solve(dense({{2, 0}, {0, 3}}), QVector{1, 1});
  REQUIRE(y);
  CHECK(*y == QVector{make_rational(1, 2), make_rational(1, 3)});
}

TEST_CASE("rationals stay in lowest terms") {
  RationalScalar a = make_rational(6, -4);
  CHECK(a.get_num() == -3);
  CHECK(a.get_den() == 2);
  CHECK(RationalScalar(make_rational(1, 3) + make_rational(2, 3)) == 1);
}

TEST_CASE("sparse matrix arithmetic") {
  QMatrix a = dense({{1, 2}, {0, 1}});
  QMatrix b = dense({{0, 1}, {1, 0}});
  CHECK(a * b == dense({{2, 1}, {1, 0}}));
  CHECK((a - a).is_zero());
  CHECK(a.transpose().at(1, 0) == 2);
  QMatrixBuilder builder(2, 2);
  builder.add(0, 0, 1);
  builder.add(0, 0, -1);
  builder.add(1, 1, 5);
  QMatrix c = builder.build();
  CHECK(c.nnz() == 1);
}

TEST_CASE("orthogonal complement within a span") {
  std::vector<QVector> basis = {{1, 0, 0}, {0, 1, 0}};
  std::vector<QVector> other = {{1, 1, 0}};
  auto w = orthogonal_complement_within(basis, other, 3);
  REQUIRE(w.size() == 1);
  CHECK(dot(w[0], other[0]) == 0);
  CHECK(in_span(basis, w[0]));
}
