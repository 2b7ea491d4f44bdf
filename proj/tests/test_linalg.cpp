#include "doctest.h"

#include "superpres/sparse.hpp"

#include <algorithm>
#include <random>

using namespace superpres;

namespace {

SparseMatrix dense(std::vector<std::vector<int>> rows, std::size_t ncols) {
  std::vector<std::vector<Rational>> q;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (int x : r) row.emplace_back(x);
    q.push_back(row);
  }
  return SparseMatrix::from_dense(q, ncols);
}

SparseMatrix random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> dim(1, 7), val(-3, 3), zero(0, 2);
  const std::size_t rows = dim(rng), cols = dim(rng);
  SparseMatrix m(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<SparseVector::Entry> e;
    for (std::size_t j = 0; j < cols; ++j)
      if (zero(rng) == 0) e.emplace_back(j, make_rational(val(rng), 1 + zero(rng)));
    m.push_row(SparseVector(cols, e));
  }
  return m;
}

} // namespace

TEST_CASE("rational canonical form") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(0, 5)) == "0");
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(parse_rational("1/x"), std::invalid_argument);
}

TEST_CASE("sparse vector keeps no zeros") {
  SparseVector v(4, {{2, Rational(1)}, {0, Rational(3)}, {2, Rational(-1)}});
  CHECK(v.nnz() == 1);
  CHECK(v.at(0) == 3);
  v.axpy(Rational(-1), SparseVector::unit(4, 0).scaled(Rational(3)));
  CHECK(v.is_zero());
}

TEST_CASE("rref examples") {
  auto id = SparseMatrix::identity(3);
  auto r = rref(id);
  CHECK(r.rref == id);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

  SparseMatrix zero(3);
  zero.push_row(SparseVector(3));
  zero.push_row(SparseVector(3));
  CHECK(rref(zero).pivots.empty());

  CHECK(rank(dense({{1, 2}, {2, 4}}, 2)) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(SparseMatrix::identity(4)).empty());
  SparseMatrix z(3);
  z.push_row(SparseVector(3));
  z.push_row(SparseVector(3));
  CHECK(kernel_basis(z).size() == 3);
  auto m = dense({{1, 1, 0}}, 3);
  auto k = kernel_basis(m);
  CHECK(k.size() == 2);
  for (const auto& v : k) CHECK(m.apply(v).is_zero());
}

TEST_CASE("span_dim examples") {
  CHECK(span_dim({}) == 0);
  SparseVector v(3, {{0, Rational(1)}, {2, Rational(-2)}});
  std::vector<SparseVector> vs{v, v.scaled(Rational(2))};
  CHECK(span_dim(vs) == 1);
  std::vector<SparseVector> three{SparseVector(2, {{0, Rational(1)}, {1, Rational(2)}}),
                                  SparseVector(2, {{0, Rational(3)}, {1, Rational(-1)}}),
                                  SparseVector(2, {{0, Rational(5)}, {1, Rational(7)}})};
  CHECK(span_dim(three) == 2);
  std::vector<SparseVector> bad{SparseVector(2), SparseVector(3)};
  CHECK_THROWS_AS(span_dim(bad), std::invalid_argument);
}

TEST_CASE("solve and coordinates") {
  auto m = dense({{1, 2}, {3, 4}}, 2);
  auto x = solve(m, SparseVector(2, {{0, Rational(5)}, {1, Rational(6)}}));
  REQUIRE(x);
  CHECK(m.apply(*x) == SparseVector(2, {{0, Rational(5)}, {1, Rational(6)}}));
  auto singular = dense({{1, 1}, {1, 1}}, 2);
  CHECK_FALSE(solve(singular, SparseVector(2, {{0, Rational(1)}})));

  RowSpace space(3);
  space.insert(SparseVector(3, {{0, Rational(2)}, {1, Rational(2)}}));
  space.insert(SparseVector(3, {{1, Rational(1)}, {2, Rational(1)}}));
  auto basis = space.rref();
  SparseVector w(3, {{0, Rational(1)}, {1, Rational(3)}, {2, Rational(2)}});
  auto c = coordinates_in(basis, w);
  REQUIRE(c);
  CHECK(!coordinates_in(basis, SparseVector::unit(3, 2)));
}

TEST_CASE("rank-nullity, idempotence and span invariance on random matrices") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto m = random_matrix(rng);
    auto r = rref(m);
    CHECK(r.rank() + kernel_basis(m).size() == m.ncols());
    CHECK(rref(r.rref).rref == r.rref);
    for (const auto& v : kernel_basis(m)) CHECK(m.apply(v).is_zero());
    auto rows = m.rows();
    std::shuffle(rows.begin(), rows.end(), rng);
    for (auto& row : rows) row = row.scaled(make_rational(-2, 3));
    CHECK(span_dim(rows) == r.rank());
  }
}
