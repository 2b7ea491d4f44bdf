#include "doctest.h"

#include "superpres/cartan.hpp"
#include "superpres/wn.hpp"

#include <random>

using namespace superpres;

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<WElement> all_basis(int n) {
  std::vector<WElement> out;
  const auto idx = WIndex::full(n);
  for (const auto& b : idx.basis()) out.push_back(WElement::basis(n, b));
  return out;
}

int sign_of(const WElement& x, const WElement& y) {
  return (*x.parity() & *y.parity()) ? -1 : 1;
}

} // namespace

TEST_CASE("w_basis dimensions") {
  CHECK(w_basis(3, 1).size() == 3);
  CHECK(w_basis(3, -2).size() == 3);
  CHECK(w_basis(3, -5).empty());
  CHECK(w_basis(3, 2).empty());
  for (int n = 2; n <= 7; ++n) {
    std::size_t total = 0;
    for (int level = 1; level >= 1 - n; --level) {
      CHECK(long(w_basis(n, level).size()) == n * binom(n, 1 - level));
      total += w_basis(n, level).size();
    }
    CHECK(total == std::size_t(n) << n);
  }
}

TEST_CASE("w_bracket examples") {
  const int n = 3;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) CHECK(w_bracket(WElement::k(n, {}, a), WElement::k(n, {}, b)).is_zero());
  CHECK(w_bracket(WElement::k(n, {}, 0), WElement::k(n, {0}, 1)) == WElement::k(n, {}, 1));
  CHECK(w_bracket(WElement::k(n, {}, 0), k_trace(n, 0)) == euler(n) - WElement::k(n, {0}, 0));
  CHECK(WElement::k(n, {1, 0}, 2) == -WElement::k(n, {0, 1}, 2));
  CHECK(WElement::k(n, {1, 1}, 2).is_zero());
}

TEST_CASE("structure constants agree with the operator supercommutator, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    auto basis = all_basis(n);
    std::vector<EndOp> ops;
    for (const auto& x : basis) ops.push_back(to_endop(x));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        CHECK(to_endop(w_bracket(basis[i], basis[j])) == end_supercommutator(ops[i], ops[j]));
  }
}

TEST_CASE("super-antisymmetry, Jacobi and level additivity, n = 3") {
  const int n = 3;
  auto basis = all_basis(n);
  for (const auto& x : basis)
    for (const auto& y : basis) {
      auto xy = w_bracket(x, y);
      CHECK(xy == w_bracket(y, x).scaled(Rational(-sign_of(x, y))));
      if (!xy.is_zero()) CHECK(*xy.level() == *x.level() + *y.level());
      for (const auto& z : basis) {
        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        auto lhs = w_bracket(x, w_bracket(y, z));
        auto rhs = w_bracket(xy, z) + w_bracket(y, w_bracket(x, z)).scaled(Rational(sign_of(x, y)));
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("S(n): traceless, dimensions and closure") {
  for (int n = 3; n <= 4; ++n)
    for (const auto& x : all_basis(n)) {
      const auto b = x.terms().begin()->first;
      auto s = s_hat(indices_of(b.uppers), b.lower, n);
      CHECK(divergence(s).is_zero());
      if (b.uppers == 0) CHECK(s == x);
    }
  CHECK(s_basis(3, -1).size() == 6);
  for (int n = 3; n <= 6; ++n) {
    std::size_t total = 0;
    for (int level = 1; level >= 1 - n; --level) {
      const int p = 1 - level;
      CHECK(long(s_basis(n, level).size()) == n * binom(n, p) - binom(n, p - 1));
      total += s_basis(n, level).size();
    }
    CHECK(total == (std::size_t(n - 1) << n) + 1);
  }
  for (int n = 3; n <= 4; ++n) {
    std::vector<WElement> all;
    for (int level = 1; level >= 1 - n; --level)
      for (auto& s : s_basis(n, level)) all.push_back(s);
    auto idx = WIndex::full(n);
    RowSpace space(idx.dim());
    for (const auto& s : all) space.insert(idx.vectorize(s));
    for (const auto& x : all)
      for (const auto& y : all) CHECK(space.contains(idx.vectorize(w_bracket(x, y))));
  }
}

TEST_CASE("Chevalley assignment") {
  for (int n = 3; n <= 6; ++n) {
    auto g = chevalley_assignment(n);
    auto B = build_cartan(Series::A, n - 1);
    const int r = n - 1;
    for (int i = 2; i <= r; ++i)
      CHECK(w_bracket(g[GeneratorSymbol::e(0)], g[GeneratorSymbol::f0(i)]) == g[GeneratorSymbol::h(i)]);
    CHECK(w_bracket(g[GeneratorSymbol::e(0)], g[GeneratorSymbol::f0(0)]) == g[GeneratorSymbol::h(0)]);
    CHECK(w_bracket(g[GeneratorSymbol::e(1)], g[GeneratorSymbol::f(1)]) == g[GeneratorSymbol::h(1)]);
    CHECK(w_bracket(g[GeneratorSymbol::e(1)], g[GeneratorSymbol::f0(0)]).is_zero());
    for (int a = 0; a <= r; ++a)
      for (const auto& [sym, x] : g)
        if (sym.kind == GenKind::f0)
          CHECK(w_bracket(g[GeneratorSymbol::h(a)], x) == x.scaled(Rational(-B(a, 0))));
  }
  CHECK_THROWS_AS(chevalley_assignment(2), std::invalid_argument);
}

TEST_CASE("sl(1|n) relations") {
  const int n = 3;
  auto E = [](int a) { return sl_basis_element({SLKind::E, a, 0}); };
  auto F = [](int a) { return sl_basis_element({SLKind::F, a, 0}); };
  auto Gm = [](int a, int b) { return sl_basis_element({SLKind::G, a, b}); };
  CHECK(sl1n_bracket(E(0), E(1), n).empty());
  CHECK(sl1n_bracket(F(0), F(2), n).empty());
  CHECK(sl1n_bracket(Gm(1, 2), F(2), n) == F(1));
  CHECK(sl1n_bracket(Gm(1, 2), F(0), n).empty());
  CHECK(sl1n_bracket(E(0), F(0), n) == sl_add(sl_g(n), Gm(0, 0), Rational(-1)));
  CHECK(psi(sl_g(n), n) == euler(n));
}

TEST_CASE("psi is an injective homomorphism") {
  for (int n = 3; n <= 5; ++n) {
    auto basis = sl1n_basis(n);
    auto idx = WIndex::full(n);
    std::vector<SparseVector> images;
    for (const auto& x : basis) {
      images.push_back(idx.vectorize(psi(sl_basis_element(x), n)));
      for (const auto& y : basis) {
        auto lhs = psi(sl1n_bracket(sl_basis_element(x), sl_basis_element(y), n), n);
        CHECK(lhs == w_bracket(psi(sl_basis_element(x), n), psi(sl_basis_element(y), n)));
      }
    }
    CHECK(span_dim(images) == basis.size());
  }
}
