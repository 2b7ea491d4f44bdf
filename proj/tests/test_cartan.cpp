#include "doctest.h"

#include "superpres/cartan.hpp"

#include <numeric>

using namespace superpres;

namespace {

RootVector root(std::vector<int> c) { return RootVector{std::move(c)}; }

} // namespace

TEST_CASE("build_cartan shapes and invariants") {
  auto B = build_cartan(Series::A, 2);
  CHECK(B.entries[0] == std::vector<int>{0, -1, 0});
  CHECK(B.entries[1] == std::vector<int>{-1, 2, -1});
  CHECK(B.entries[2] == std::vector<int>{0, -1, 2});

  for (auto [s, lo, hi] : {std::tuple{Series::A, 2, 9}, {Series::D, 4, 9}, {Series::E, 4, 11}}) {
    for (int r = lo; r <= hi; ++r) {
      auto M = build_cartan(s, r);
      CHECK(M(0, 0) == 0);
      CHECK(M(0, 1) == -1);
      for (int a = 0; a <= r; ++a)
        for (int b = 0; b <= r; ++b) CHECK(M(a, b) == M(b, a));
      for (int i = 2; i <= r; ++i) CHECK(M(0, i) == 0);
      CHECK(determinant(M.entries) == -determinant(M.reduced_part()));
    }
  }
  CHECK_THROWS_AS(build_cartan(Series::A, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_cartan(Series::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_cartan(Series::E, 12), std::invalid_argument);
}

TEST_CASE("E-series labelling attaches node r to node r-3") {
  auto B = build_cartan(Series::E, 6);
  CHECK(B(6, 3) == -1);
  CHECK(B(5, 6) == 0);
  CHECK(positive_roots(Series::E, 6).size() == 36);
  CHECK(positive_roots(Series::E, 7).size() == 63);
  CHECK(positive_roots(Series::E, 8).size() == 120);
  CHECK(positive_roots(Series::D, 5).size() == 20);
  CHECK(positive_roots(Series::E, 5).size() == 20);  // E_5 = D_5
  CHECK(positive_roots(Series::E, 4).size() == 10);  // E_4 = A_4
}

TEST_CASE("inner products") {
  for (int n = 3; n <= 7; ++n) {
    auto B = build_cartan(Series::A, n - 1);
    std::vector<int> a0(n, 0);
    a0[0] = 1;
    CHECK(inner(B, root(a0), root(a0)) == 0);
    std::vector<int> a1(n, 0), a2(n, 0);
    a1[1] = 1;
    a2[2] = 1;
    CHECK(inner(B, root(a1), root(a2)) == -1);
    CHECK(inner(B, root(a1), root(a1)) == 2);
    auto L0 = WeightVector::from_labels(B, Rational(1), std::vector<Rational>(n - 1, Rational(0)));
    CHECK(inner(B, L0, L0) == make_rational(-(n - 1), n));
  }
  auto B = build_cartan(Series::A, 2);
  CHECK_THROWS_AS(inner(B, root({1, 0}), root({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("inverse of B") {
  for (int n = 3; n <= 7; ++n) {
    auto inv = inverse_cartan_B(n);
    auto B = build_cartan(Series::A, n - 1);
    CHECK(inv[0][0] == make_rational(-n, n - 1));
    CHECK(inv[0][n - 1] == make_rational(-1, n - 1));
    for (int j = 0; j < n; ++j) CHECK(inv[1][j] == (j == 0 ? Rational(-1) : Rational(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational s(0);
        for (int k = 0; k < n; ++k) s += B(i, k) * inv[k][j];
        CHECK(s == (i == j ? 1 : 0));
      }
  }
  CHECK(inverse_cartan_B(3)[0][0] == make_rational(-3, 2));
}

TEST_CASE("positive roots") {
  CHECK(positive_roots(Series::A, 2).size() == 3);
  CHECK(positive_roots(Series::A, 3).size() == 6);
  for (int n = 4; n <= 8; ++n) {
    auto roots = positive_roots(cartan_A(n - 2));
    CHECK(roots.size() == std::size_t((n - 1) * (n - 2) / 2));
    int top = 0;
    for (const auto& r : roots) top = std::max(top, std::accumulate(r.begin(), r.end(), 0));
    CHECK(top == n - 2);
  }
  IntMatrix affine{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  CHECK_THROWS_AS(positive_roots(affine), std::invalid_argument);
}

TEST_CASE("Weyl reflections") {
  auto B = build_cartan(Series::A, 3);
  auto a0 = WeightVector::from_root(root({1, 0, 0, 0}));
  CHECK(weyl_reflect_weight(B, 1, a0) == WeightVector::from_root(root({1, 1, 0, 0})));
  auto a2 = WeightVector::from_root(root({0, 0, 1, 0}));
  CHECK(weyl_reflect_weight(B, 2, a2) == WeightVector::from_root(root({0, 0, -1, 0})));
  CHECK(weyl_reflect_weight(B, 3, a0) == a0);
  CHECK_THROWS_AS(weyl_reflect_weight(B, 0, a0), std::invalid_argument);
  std::vector<WeightVector> samples{a0, a2, WeightVector::from_root(root({-2, 1, 3, -1})),
                                    WeightVector::from_labels(B, Rational(-2), {1, 0, 2})};
  for (int i = 1; i <= 3; ++i)
    for (const auto& x : samples) {
      CHECK(weyl_reflect_weight(B, i, weyl_reflect_weight(B, i, x)) == x);
      for (const auto& y : samples)
        CHECK(inner(B, weyl_reflect_weight(B, i, x), weyl_reflect_weight(B, i, y)) == inner(B, x, y));
    }
}

TEST_CASE("Freudenthal multiplicities") {
  auto A4 = cartan_A(4);
  CHECK(freudenthal_multiplicity(A4, {0, 2, 0, 2}, {0, 2, 0, 2}) == 1);
  CHECK(freudenthal_multiplicity(A4, {0, 2, 0, 2}, {2, 0, 0, 0}) == 6);
  auto A5 = cartan_A(5);
  CHECK(freudenthal_multiplicity(A5, {0, 0, 1, 0, 1}, {0, 1, 0, 0, 0}) == 3);
  CHECK_THROWS_AS(freudenthal_multiplicity(A4, {-1, 1, 0, 0}, {0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("Freudenthal agrees with Weyl dimension and is Weyl invariant") {
  std::vector<std::pair<IntMatrix, std::vector<int>>> cases{
      {cartan_A(2), {1, 1}},          {cartan_A(3), {0, 1, 0}},    {cartan_A(3), {2, 0, 1}},
      {cartan_A(4), {0, 2, 0, 2}},    {cartan_A(4), {1, 0, 1, 1}}, {cartan_A(5), {0, 0, 1, 0, 1}},
      {build_cartan(Series::D, 4).even_part(), {0, 1, 0, 0}},
      {build_cartan(Series::E, 6).even_part(), {1, 0, 0, 0, 0, 0}}};
  for (const auto& [A, hw] : cases) {
    auto all = all_weight_multiplicities(A, hw);
    long total = 0;
    for (const auto& [w, m] : all) {
      total += m;
      for (std::size_t i = 0; i < A.size(); ++i) {
        auto v = w;
        for (std::size_t j = 0; j < A.size(); ++j) v[j] -= w[i] * A[i][j];
        auto it = all.find(v);
        REQUIRE(it != all.end());
        CHECK(it->second == m);
      }
    }
    CHECK(BigInt(total) == weyl_dimension(A, hw));
    for (const auto& [w, m] : dominant_weight_multiplicities(A, hw)) CHECK(all.at(w) == m);
  }
}

TEST_CASE("weight lengths") {
  for (int n = 3; n <= 7; ++n) {
    std::vector<Rational> alpha1(n - 1, Rational(0));
    alpha1[0] = 2;
    if (n - 1 > 1) alpha1[1] = -1;
    CHECK(weight_norm(0, alpha1, n) == 2);
    for (int k = 1; k < n; ++k) {
      std::vector<Rational> mu(n - 1, Rational(0));
      mu[k - 1] = 1;
      CHECK(weight_norm(0, mu, n) == make_rational(k * (n - k), n));
    }
  }
  // Level -k dominant weights: -k Lt_0 + mu_k and -k Lt_0 + mu_{k+1} + mu_{n-1}.
  for (int n = 3; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      std::vector<Rational> low(n - 1, Rational(0));
      low[k - 1] = 1;
      CHECK(weight_norm(-k, low, n) == k - k * k);
      if (k + 1 <= n - 1) {
        std::vector<Rational> top(n - 1, Rational(0));
        top[k] += 1;
        top[n - 2] += 1;
        CHECK(weight_norm(-k, top, n) == 2 + k - k * k);
      }
    }
}
