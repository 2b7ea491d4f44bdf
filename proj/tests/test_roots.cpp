#include "doctest.h"

#include "superpres/roots.hpp"

#include <algorithm>

using namespace superpres;

TEST_CASE("W(3) root decomposition") {
  const auto roots = root_decomposition(AlgebraKind::W, 3);
  CHECK(roots.size() == 18);
  std::size_t total = 0;
  for (const auto& r : roots) total += static_cast<std::size_t>(r.multiplicity);
  CHECK(total + cartan_dimension(AlgebraKind::W, 3) == 24);
  const auto minus_a0 = std::find_if(roots.begin(), roots.end(),
                                     [](const RootEntry& r) { return r.root == RootVector{{-1, 0, 0}}; });
  REQUIRE(minus_a0 != roots.end());
  CHECK(minus_a0->multiplicity == 2);
  CHECK(minus_a0->level == -1);
}

TEST_CASE("mult(-alpha_0) = n - 1") {
  for (int n = 3; n <= 6; ++n) {
    const auto roots = root_decomposition(AlgebraKind::W, n);
    RootVector target{std::vector<int>(n, 0)};
    target.coeffs[0] = -1;
    const auto it = std::find_if(roots.begin(), roots.end(), [&](const RootEntry& r) { return r.root == target; });
    REQUIRE(it != roots.end());
    CHECK(it->multiplicity == n - 1);
  }
}

TEST_CASE("level-1 roots are null") {
  for (const auto& r : root_decomposition(AlgebraKind::W, 4))
    if (r.level == 1) CHECK(r.length_sq == 0);
}

TEST_CASE("root atlas reports") {
  for (int n = 3; n <= 5; ++n) {
    CHECK(check_root_lengths(n).passed());
    CHECK(verify_root_atlas(n).passed());
  }
}

TEST_CASE("S(n) has a smaller Cartan") {
  CHECK(cartan_dimension(AlgebraKind::S, 4) == 3);
  std::size_t total = 0;
  for (const auto& r : root_decomposition(AlgebraKind::S, 3)) total += static_cast<std::size_t>(r.multiplicity);
  // sum over levels of n C(n,p) - C(n,p-1), p = 0..n-1
  CHECK(total + cartan_dimension(AlgebraKind::S, 3) == 3 + 8 + 6);
}
