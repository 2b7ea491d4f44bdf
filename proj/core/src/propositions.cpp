#include "superpres/propositions.hpp"

#include "superpres/relations.hpp"

#include <sstream>
#include <stdexcept>

namespace superpres {

namespace {

using G = GeneratorSymbol;

WElement br(const WElement& x, const WElement& y) { return w_bracket(x, y); }

// Accumulates pass/fail for one named family, keeping the first failure.
struct Tally {
  std::size_t count = 0;
  std::string failure;
  void check(bool ok, const std::string& what) {
    ++count;
    if (!ok && failure.empty()) failure = what;
  }
  void report(Report& r, const std::string& name) const {
    r.add(name, failure.empty(), failure.empty() ? std::to_string(count) + " instances" : failure);
  }
};

} // namespace

std::vector<ChainRoot> reduced_positive_roots(int n) {
  const auto A = chevalley_assignment(n);
  const int r = n - 1;
  std::vector<ChainRoot> out;
  for (int k = 2; k <= r; ++k) {
    ChainRoot c;
    c.first = k;
    c.last = k;
    c.root.coeffs.assign(n, 0);
    c.root.coeffs[k] = 1;
    c.e = A.at(G::e(k));
    c.f = A.at(G::f(k));
    out.push_back(c);
    for (int m = k + 1; m <= r; ++m) {
      c.last = m;
      c.root.coeffs[m] = 1;
      c.e = br(A.at(G::e(m)), c.e);
      c.f = br(c.f, A.at(G::f(m)));
      out.push_back(c);
    }
  }
  return out;
}

WElement f0_of_root(int n, const ChainRoot& alpha) {
  const auto A = chevalley_assignment(n);
  WElement x(n);
  for (int m = alpha.first; m <= alpha.last; ++m) x += A.at(G::f0(m));
  return x;
}

Report verify_propositions(int n) {
  if (n < 3 || n > 6) throw std::invalid_argument("verify_propositions: n must lie in [3, 6]");
  const int r = n - 1;
  const CartanMatrix B = build_cartan(Series::A, r);
  const auto A = chevalley_assignment(n);
  const auto roots = reduced_positive_roots(n);
  const auto f0s = f0_indices(r);
  auto e = [&](int i) { return A.at(G::e(i)); };
  auto f = [&](int i) { return A.at(G::f(i)); };
  auto f0 = [&](int a) { return A.at(G::f0(a)); };
  auto simple = [&](int a) {
    RootVector v{std::vector<int>(n, 0)};
    v.coeffs[a] = 1;
    return v;
  };
  auto tag = [](std::initializer_list<std::pair<const char*, int>> kv) {
    std::ostringstream os;
    for (const auto& [k, v] : kv) os << k << "=" << v << " ";
    return os.str();
  };

  Report report;
  report.title = "propositions n=" + std::to_string(n);

  // Additional relations on f_{0a}.
  Tally serre_like, proportional;
  for (int i = 2; i <= r; ++i)
    for (int j = 2; j <= r; ++j) {
      if (i == j) continue;
      for (int a : f0s) {
        WElement xe = br(e(j), f0(a)), xf = br(f(j), f0(a));
        for (int t = 0; t < 1 - B(i, j); ++t) {
          xe = br(e(i), xe);
          xf = br(f(i), xf);
        }
        serre_like.check(xe.is_zero() && xf.is_zero(), tag({{"i", i}, {"j", j}, {"a", a}}));
      }
    }
  for (int i = 2; i <= r; ++i)
    for (int a : f0s)
      for (int b : f0s) {
        const bool ok =
            br(e(i), f0(b)).scaled(Rational(B(i, a))) == br(e(i), f0(a)).scaled(Rational(B(i, b))) &&
            br(f(i), f0(b)).scaled(Rational(B(i, a))) == br(f(i), f0(a)).scaled(Rational(B(i, b)));
        proportional.check(ok, tag({{"i", i}, {"a", a}, {"b", b}}));
      }
  serre_like.report(report, "serre-like on f0");
  proportional.report(report, "proportionality");

  // Three-part lemma.
  Tally lemma_a, lemma_c, lemma_b;
  for (const auto& alpha : roots)
    for (int i = 2; i <= r; ++i) {
      const Rational ip = inner(B, simple(i), alpha.root);
      for (int a : f0s) {
        const WElement ea = br(alpha.e, f0(a));
        const std::string where = to_string(alpha.root) + " " + tag({{"i", i}, {"a", a}});
        if (ip <= 0) lemma_a.check(br(f(i), ea).is_zero(), where);
        if (ip >= 0) lemma_c.check(br(e(i), ea).is_zero(), where);
        const WElement lhs = br(alpha.e, br(e(i), f0(a)));
        const WElement rhs = br(e(i), br(alpha.e, f0(i))).scaled(Rational(B(i, a)));
        lemma_b.check(lhs == rhs, where);
      }
    }
  lemma_a.report(report, "lemma (a)");
  lemma_c.report(report, "lemma (c)");
  lemma_b.report(report, "lemma (b)");

  // Chevalley-basis identity.
  Tally chevalley;
  for (const auto& alpha : roots) {
    const WElement f0alpha = f0_of_root(n, alpha);
    for (int a : f0s) {
      const WElement lhs = br(alpha.e, br(alpha.f, f0(a)));
      const WElement rhs = f0alpha.scaled(inner(B, alpha.root, simple(a)));
      chevalley.check(lhs == rhs, to_string(alpha.root) + " " + tag({{"a", a}}));
    }
  }
  chevalley.report(report, "[e_alpha,[f_alpha,f0a]]");

  // Level-1 roots of g with respect to alpha_1.
  Tally level_one;
  WElement e_alpha = e(1);
  for (int l = 1; l <= r; ++l) {
    if (l > 1) e_alpha = br(e(l), e_alpha);
    for (const auto& beta : roots)
      level_one.check(br(e_alpha, f0_of_root(n, beta)).is_zero(),
                      "alpha_1..alpha_" + std::to_string(l) + " beta " + to_string(beta.root));
  }
  level_one.report(report, "[e_alpha,f0beta] at level 1");

  // Intertwiner phi.
  const auto rho = weyl_vector(cartan_A(r - 1));
  WElement f0rho(n);
  for (int m = 2; m <= r; ++m) f0rho += f0(m).scaled(rho[m - 2]);
  std::vector<WElement> basis, image;
  for (const auto& alpha : roots) {
    const Rational inv = make_rational(1, alpha.height());
    basis.push_back(alpha.e);
    image.push_back(br(alpha.e, f0rho).scaled(-inv));
    basis.push_back(alpha.f);
    image.push_back(br(alpha.f, f0rho).scaled(inv));
  }
  for (int i = 2; i <= r; ++i) {
    basis.push_back(A.at(G::h(i)));
    image.push_back(f0(i));
  }
  const WIndex i0 = WIndex::level(n, 0), im1 = WIndex::level(n, -1);
  SparseMatrix columns(basis.size());
  {
    std::vector<std::vector<SparseVector::Entry>> rows(i0.dim());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const SparseVector v = i0.vectorize(basis[k]);
      for (const auto& [idx, c] : v.entries()) rows[idx].emplace_back(k, c);
    }
    for (auto& row : rows) columns.push_row(SparseVector(basis.size(), std::move(row)));
  }
  const std::size_t g_dim = static_cast<std::size_t>((n - 1) * (n - 1) - 1);
  std::vector<SparseVector> bvec, ivec;
  for (const auto& x : basis) bvec.push_back(i0.vectorize(x));
  for (const auto& x : image) ivec.push_back(im1.vectorize(x));
  report.add("g' basis independent", basis.size() == g_dim && span_dim(bvec) == g_dim);
  report.add("phi image dimension", span_dim(ivec) == g_dim,
             std::to_string(span_dim(ivec)) + " vs " + std::to_string(g_dim));

  Tally intertwine, inverse;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    inverse.check(br(A.at(G::e(0)), image[k]) == basis[k], "basis element " + std::to_string(k));
    for (int i = 2; i <= r; ++i)
      for (const WElement* x : {&A.at(G::e(i)), &A.at(G::f(i))}) {
        const WElement z = br(*x, basis[k]);
        const auto coords = solve(columns, i0.vectorize(z));
        if (!coords) {
          intertwine.check(false, "bracket leaves g'");
          continue;
        }
        WElement phi_z(n);
        for (const auto& [j, c] : coords->entries()) phi_z += image[j].scaled(c);
        intertwine.check(phi_z == br(*x, image[k]),
                         "basis element " + std::to_string(k) + " node " + std::to_string(i));
      }
  }
  intertwine.report(report, "phi intertwines ad e_i, ad f_i");
  inverse.report(report, "ad e_0 inverts phi");
  return report;
}

} // namespace superpres
