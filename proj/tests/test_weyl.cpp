#include "doctest.h"

#include "superpres/weyl.hpp"

#include <stdexcept>

using namespace superpres;

TEST_CASE("weyl automorphism domain") {
  CHECK_THROWS_AS(weyl_automorphism(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(weyl_automorphism(4, 4), std::invalid_argument);
  const auto w = weyl_automorphism(1, 4);
  CHECK(w.i == 1);
  CHECK(!w.image.empty());
}

TEST_CASE("transformed generators still satisfy the relations") {
  for (int n = 3; n <= 4; ++n) CHECK(verify_weyl_invariance(n).passed());
}

TEST_CASE("w_i fixes generators away from node i") {
  const int n = 4;
  const auto w = weyl_automorphism(2, n);
  const auto base = chevalley_assignment(n);
  const auto moved = transform_assignment(w, base);
  CHECK(moved.at(GeneratorSymbol::e(0)) == base.at(GeneratorSymbol::e(0)));
  CHECK(moved.at(GeneratorSymbol::h(2)) == -base.at(GeneratorSymbol::h(2)));
}
