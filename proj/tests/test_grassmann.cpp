#include "doctest.h"

#include "superpres/grassmann.hpp"

#include <random>

using namespace superpres;

namespace {

GrassmannElement xi(int n, std::vector<int> idx) { return GrassmannElement::product(n, idx); }

GrassmannElement random_homogeneous(int n, int par, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  GrassmannElement x(n);
  for (Monomial m = 0; m < (Monomial(1) << n); ++m)
    if (parity(m) == par) x.add_term(m, Rational(coef(rng)));
  return x;
}

} // namespace

TEST_CASE("gr_mul examples") {
  CHECK(gr_mul(xi(3, {0}), xi(3, {1})) == GrassmannElement::monomial(3, 0b011));
  CHECK(gr_mul(xi(3, {1}), xi(3, {0})) == GrassmannElement::monomial(3, 0b011, Rational(-1)));
  CHECK(gr_mul(xi(3, {0}), xi(3, {0})).is_zero());
  CHECK_THROWS_AS(gr_mul(xi(3, {0}), xi(4, {0})), std::invalid_argument);
}

TEST_CASE("gr_mul is associative and supercommutative for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const Monomial top = Monomial(1) << n;
    for (Monomial a = 0; a < top; ++a)
      for (Monomial b = 0; b < top; ++b) {
        auto x = GrassmannElement::monomial(n, a);
        auto y = GrassmannElement::monomial(n, b);
        const int s = (parity(a) & parity(b)) ? -1 : 1;
        CHECK(gr_mul(x, y) == gr_mul(y, x).scaled(Rational(s)));
        for (Monomial c = 0; c < top; ++c) {
          auto z = GrassmannElement::monomial(n, c);
          CHECK(gr_mul(gr_mul(x, y), z) == gr_mul(x, gr_mul(y, z)));
        }
      }
  }
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto x = random_homogeneous(4, t & 1, rng), y = random_homogeneous(4, (t >> 1) & 1, rng);
    const int s = ((t & 1) && ((t >> 1) & 1)) ? -1 : 1;
    CHECK(gr_mul(x, y) == gr_mul(y, x).scaled(Rational(s)));
  }
}

TEST_CASE("contraction examples") {
  CHECK(contract(0, xi(3, {0, 1})) == xi(3, {1}));
  CHECK(contract(2, xi(3, {0, 1})).is_zero());
  CHECK(contract(1, xi(3, {0, 1})) == xi(3, {0}).scaled(Rational(-1)));
  CHECK(contract_right(0, xi(3, {0, 1})) == xi(3, {1}).scaled(Rational(-1)));
  for (int n = 1; n <= 4; ++n)
    for (int b = 0; b < n; ++b)
      for (Monomial m = 0; m < (Monomial(1) << n); ++m)
        CHECK(contract(b, contract(b, GrassmannElement::monomial(n, m))).is_zero());
}

TEST_CASE("k_op examples") {
  CHECK(k_op(3, {0}, 0).apply(xi(3, {0})) == xi(3, {0}));
  CHECK(k_op(3, {0, 1}, 2).apply(xi(3, {2})) == xi(3, {0, 1}));
  for (int a = 0; a < 3; ++a) CHECK(k_op(3, {}, a).apply(GrassmannElement::monomial(3, 0)).is_zero());
  CHECK(k_op(3, {1, 1}, 0).is_zero());
}

TEST_CASE("operator parities are consistent") {
  for (int n = 1; n <= 4; ++n)
    for (Monomial up = 0; up < (Monomial(1) << n); ++up)
      for (int b = 0; b < n; ++b) {
        auto op = k_op(n, indices_of(up), b);
        auto p = op.parity();
        REQUIRE(p);
        CHECK(*p == ((degree(up) + 1) & 1));
      }
  auto mixed = EndOp::identity(2) + k_op(2, {}, 0);
  CHECK_FALSE(mixed.parity());
  CHECK_THROWS_AS(end_supercommutator(mixed, EndOp::identity(2)), std::invalid_argument);
}

TEST_CASE("supercommutator examples") {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(end_supercommutator(k_op(3, {}, a), k_op(3, {}, b)).is_zero());
  CHECK(end_supercommutator(k_op(3, {}, 0), k_op(3, {0}, 1)) == k_op(3, {}, 1));
  auto L = EndOp::identity(3);
  for (Monomial up = 0; up < 8; ++up)
    for (int b = 0; b < 3; ++b) CHECK(end_supercommutator(L, k_op(3, indices_of(up), b)).is_zero());
}

TEST_CASE("left multiplication and composition") {
  auto x = xi(3, {0, 2});
  auto Lx = EndOp::left_mul(x);
  CHECK(Lx.apply(xi(3, {1})) == gr_mul(x, xi(3, {1})));
  CHECK(end_compose(k_op(3, {}, 0), Lx).apply(GrassmannElement::monomial(3, 0)) == xi(3, {2}));
}
