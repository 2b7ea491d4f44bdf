#include "superpres/prolongation.hpp"

#include "doctest.h"

using namespace superpres;

namespace {
long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}
} // namespace

TEST_CASE("local parts satisfy super-Jacobi") {
  for (int n = 2; n <= 4; ++n) {
    CHECK_FALSE(local_jacobi_failure(w_local_part(n)).has_value());
    CHECK_FALSE(local_jacobi_failure(sl1n_local_part(n)).has_value());
  }
}

TEST_CASE("corrupted local part is rejected") {
  LocalPart L = w_local_part(3);
  L.br_1_m1[0][0] = L.br_1_m1[0][0].scaled(Rational(2));
  if (L.br_1_m1[0][0].is_zero()) L.br_1_m1[0][0] = SparseVector::unit(L.dim_0(), 0);
  CHECK(local_jacobi_failure(L).has_value());
  CHECK_THROWS_AS(minimal_prolongation(L, 2), std::invalid_argument);
}

TEST_CASE("sl(1|n) local part has no level -2") {
  for (int n = 2; n <= 4; ++n) {
    auto comps = minimal_prolongation(sl1n_local_part(n), 2);
    REQUIRE(comps.size() == 4);
    CHECK(comps[3].dim() == 0);
  }
}

TEST_CASE("W(n) prolongation recovers the negative part") {
  for (int n = 3; n <= 4; ++n) {
    const auto comps = minimal_prolongation(w_local_part(n), n - 1);
    for (int k = 1; k <= n - 1; ++k) {
      const auto& c = comps[k + 1];
      CHECK(c.level == -k);
      CHECK(static_cast<long>(c.dim()) == n * binom(n, k + 1));
      CHECK(is_transitive(c));
    }
  }
}

TEST_CASE("W(3) past its depth vanishes") {
  const auto comps = minimal_prolongation(w_local_part(3), 3);
  CHECK(comps[4].dim() == 0);
}

TEST_CASE("prolongation dims are basis independent") {
  const LocalPart L = w_local_part(3);
  auto mix = [](const std::vector<int>& parity) {
    std::vector<std::vector<Rational>> P(parity.size(), std::vector<Rational>(parity.size()));
    for (std::size_t i = 0; i < parity.size(); ++i) {
      P[i][i] = Rational(1);
      for (std::size_t j = 0; j < i; ++j)
        if (parity[i] == parity[j]) P[i][j] = Rational(static_cast<long>(i + 2 * j + 1));
    }
    return P;
  };
  const LocalPart M = change_basis(L, mix(L.parity_m1), mix(L.parity_1));
  CHECK_FALSE(local_jacobi_failure(M).has_value());
  const auto a = minimal_prolongation(L, 2), b = minimal_prolongation(M, 2);
  CHECK(a[3].dim() == b[3].dim());
}

TEST_CASE("change_basis rejects bad matrices") {
  const LocalPart L = w_local_part(3);
  std::vector<std::vector<Rational>> id1(L.dim_1(), std::vector<Rational>(L.dim_1()));
  for (std::size_t i = 0; i < id1.size(); ++i) id1[i][i] = Rational(1);
  auto singular = std::vector<std::vector<Rational>>(L.dim_m1(), std::vector<Rational>(L.dim_m1()));
  for (std::size_t i = 0; i < singular.size(); ++i) singular[i][0] = Rational(1);
  CHECK_THROWS_AS(change_basis(L, singular, id1), std::invalid_argument);
}

TEST_CASE("free level dimensions") {
  CHECK(free_level_dim(std::vector<int>(9, 1), -2) == 45);
  CHECK(free_level_dim(std::vector<int>{0}, 2) == 0);
  CHECK(free_level_dim(std::vector<int>{1}, 2) == 1);
  CHECK(free_level_dim(std::vector<int>{0, 0}, 3) == 2);
  CHECK(free_level_dim(std::vector<int>{1}, 3) == 0);
  // Witt formula for two even generators in degree 3 and three in degree 3.
  CHECK(free_level_dim(std::vector<int>{0, 0, 0}, 3) == 8);
  CHECK_THROWS_AS(free_level_dim(std::vector<int>{0}, 4), std::invalid_argument);
}

TEST_CASE("ktilde span count") {
  for (int n = 3; n <= 8; ++n)
    for (int p = 3; p <= n; ++p) CHECK(ktilde_span(n, p) == n * binom(n, p));
  CHECK(ktilde_span(4, 5) == 0);
  CHECK_THROWS_AS(ktilde_span(4, 2), std::invalid_argument);
}
