#include "doctest.h"

#include "superpres/en_realization.hpp"

#include <stdexcept>

using namespace superpres;

TEST_CASE("F_abc is alternating") {
  const int n = 5;
  const auto a = f_abc(0, 1, 2, n);
  const auto b = f_abc(1, 0, 2, n);
  REQUIRE(a.size() == b.size());
  for (const auto& [m, op] : a) CHECK(b.at(m) == op.scaled(Rational(-1)));
  CHECK(f_abc(1, 1, 2, n).empty());
}

TEST_CASE("level 2 and -2 brackets") {
  const int n = 6;
  const auto x = UElement::level1(GrassmannElement::product(n, {0, 1, 2}));
  const auto y = UElement::level1(GrassmannElement::product(n, {3, 4, 5}));
  const auto z = UElement::level1(GrassmannElement::product(n, {0, 4, 5}));
  CHECK(!vanishes(u_bracket(x, y)));
  CHECK(vanishes(u_bracket(x, y) + u_bracket(y, x)));
  CHECK(vanishes(u_bracket(x, z)));
  const auto F = UElement::level_minus1(n, f_abc(0, 1, 2, n));
  const auto G = UElement::level_minus1(n, f_abc(3, 4, 5, n));
  CHECK(!vanishes(u_bracket(F, G)));
  CHECK(vanishes(u_bracket(F, F)));
}

TEST_CASE("brackets beyond level 2 are rejected") {
  const int n = 4;
  const auto x = UElement::level1(GrassmannElement::product(n, {0, 1, 2}));
  const auto y = UElement::level1(GrassmannElement::product(n, {1, 2, 3}));
  CHECK_THROWS_AS(u_bracket(x, u_bracket(x, y)), std::invalid_argument);
}

TEST_CASE("E_n realization for n = 4..6") {
  for (int n = 4; n <= 6; ++n) {
    const Report r = verify_en_relations(n);
    CHECK(r.passed());
    CHECK(recovered_eigenvalue_matrix(n) == build_cartan(Series::E, n).entries);
  }
  CHECK_THROWS_AS(en_generator_images(3), std::invalid_argument);
}
