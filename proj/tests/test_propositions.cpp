#include "doctest.h"

#include "superpres/propositions.hpp"

using namespace superpres;

TEST_CASE("reduced positive roots of A_{n-2}") {
  for (int n = 3; n <= 6; ++n) {
    const auto roots = reduced_positive_roots(n);
    CHECK(roots.size() == static_cast<std::size_t>((n - 2) * (n - 1) / 2));
    for (const auto& r : roots) {
      CHECK(r.first >= 2);
      CHECK(r.height() >= 1);
      CHECK(!r.e.is_zero());
      CHECK(!r.f.is_zero());
    }
  }
}

TEST_CASE("f_0alpha is nonzero and homogeneous") {
  for (const auto& r : reduced_positive_roots(5)) {
    const WElement x = f0_of_root(5, r);
    CHECK(!x.is_zero());
    CHECK(x.level() == std::optional<int>(-1));
  }
}

TEST_CASE("propositions hold for n = 3..5") {
  for (int n = 3; n <= 5; ++n) CHECK(verify_propositions(n).passed());
}
