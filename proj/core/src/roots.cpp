#include "superpres/roots.hpp"

#include "superpres/prolongation.hpp"
#include "superpres/wn.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace superpres {

std::string to_string(AlgebraKind a) { return a == AlgebraKind::W ? "W" : "S"; }

namespace {

struct Eigenspace {
  std::vector<Rational> eigenvalues;
  std::vector<SparseVector> basis;
};

// Splits each space by the integer eigenvalues of `images` (the action on the
// ambient coordinates). Throws when the action is not diagonalizable with
// integer eigenvalues on a space.
std::vector<Eigenspace> split(const std::vector<Eigenspace>& spaces, const LinearImages& images,
                              std::size_t ambient) {
  long bound = 0;
  {
    std::vector<Rational> row_sum(ambient);
    for (const auto& col : images)
      for (const auto& [i, c] : col.entries()) row_sum[i] += abs(c);
    for (const auto& s : row_sum) {
      const Rational up = s + Rational(1);
      bound = std::max(bound, static_cast<long>(mpz_class(up.get_num() / up.get_den()).get_si()));
    }
  }
  std::vector<Eigenspace> out;
  for (const auto& space : spaces) {
    std::vector<SparseVector> acted;
    for (const auto& v : space.basis) {
      SparseVector w(ambient);
      for (const auto& [j, c] : v.entries()) w.axpy(c, images[j]);
      acted.push_back(std::move(w));
    }
    std::size_t found = 0;
    for (long lambda = -bound; lambda <= bound && found < space.basis.size(); ++lambda) {
      // Columns j: acted_j - lambda v_j; rows: ambient coordinates.
      std::vector<std::vector<SparseVector::Entry>> rows(ambient);
      for (std::size_t j = 0; j < space.basis.size(); ++j) {
        SparseVector col = acted[j];
        col.axpy(Rational(-lambda), space.basis[j]);
        for (const auto& [i, c] : col.entries()) rows[i].emplace_back(j, c);
      }
      SparseMatrix m(space.basis.size());
      for (auto& r : rows)
        if (!r.empty()) m.push_row(SparseVector(space.basis.size(), std::move(r)));
      const auto ker = kernel_basis(m);
      if (ker.empty()) continue;
      Eigenspace e;
      e.eigenvalues = space.eigenvalues;
      e.eigenvalues.push_back(Rational(lambda));
      for (const auto& c : ker) {
        SparseVector v(ambient);
        for (const auto& [j, x] : c.entries()) v.axpy(x, space.basis[j]);
        e.basis.push_back(std::move(v));
      }
      found += ker.size();
      out.push_back(std::move(e));
    }
    if (found != space.basis.size())
      throw std::logic_error("ad h is not diagonalizable with integer eigenvalues");
  }
  return out;
}

} // namespace

std::size_t cartan_dimension(AlgebraKind algebra, int n) {
  return algebra == AlgebraKind::W ? static_cast<std::size_t>(n) : static_cast<std::size_t>(n - 1);
}

std::vector<RootEntry> root_decomposition(AlgebraKind algebra, int n) {
  if (n < 3 || n > 6) throw std::invalid_argument("root_decomposition: n must lie in [3, 6]");
  const CartanMatrix B = build_cartan(Series::A, n - 1);
  const RationalMatrix Binv = inverse(B.entries);
  const auto assignment = chevalley_assignment(n);

  std::vector<RootEntry> out;
  std::size_t zero_dim = 0;
  for (int level = 1; level >= 1 - n; --level) {
    const WIndex idx = WIndex::level(n, level);
    Eigenspace start;
    if (algebra == AlgebraKind::W) {
      for (std::size_t j = 0; j < idx.dim(); ++j) start.basis.push_back(SparseVector::unit(idx.dim(), j));
    } else {
      for (const auto& x : s_basis(n, level)) start.basis.push_back(idx.vectorize(x));
    }
    if (start.basis.empty()) continue;
    std::vector<Eigenspace> spaces{start};
    for (int a = 0; a < n; ++a) {
      const WElement& h = assignment.at(GeneratorSymbol::h(a));
      LinearImages images;
      for (const auto& b : idx.basis()) images.push_back(idx.vectorize(w_bracket(h, WElement::basis(n, b))));
      spaces = split(spaces, images, idx.dim());
    }
    for (const auto& s : spaces) {
      RootVector root;
      bool zero = true;
      for (int a = 0; a < n; ++a) {
        Rational c;
        for (int b = 0; b < n; ++b) c += Binv[a][b] * s.eigenvalues[b];
        if (c.get_den() != 1) throw std::logic_error("non-integral root coordinates");
        root.coeffs.push_back(static_cast<int>(c.get_num().get_si()));
        zero = zero && root.coeffs.back() == 0;
      }
      if (zero) {
        zero_dim += s.basis.size();
        continue;
      }
      if (root.coeffs[0] != level) throw std::logic_error("root level disagrees with the grading");
      out.push_back({root, level, static_cast<int>(s.basis.size()), inner(B, root, root)});
    }
  }
  if (zero_dim != cartan_dimension(algebra, n))
    throw std::logic_error("unexpected dimension of the zero weight space");
  std::sort(out.begin(), out.end(), [](const RootEntry& x, const RootEntry& y) {
    if (x.level != y.level) return x.level > y.level;
    return x.root < y.root;
  });
  return out;
}

Report check_root_lengths(int n) {
  Report report;
  report.title = "root lengths n=" + std::to_string(n);
  const auto roots = root_decomposition(AlgebraKind::W, n);
  std::map<int, std::string> failure;
  std::map<int, std::size_t> count;
  for (const auto& e : roots) {
    ++count[e.level];
    bool ok;
    if (e.level == 1) {
      ok = e.length_sq == 0;
    } else if (e.level <= -1) {
      const int k = -e.level;
      ok = e.length_sq == k - k * k || e.length_sq == 2 + k - k * k;
    } else {
      ok = e.length_sq == 2;
    }
    if (!ok && failure[e.level].empty())
      failure[e.level] = to_string(e.root) + " has length " + e.length_sq.get_str();
  }
  for (const auto& [level, c] : count) {
    const std::string& f = failure[level];
    report.add("level " + std::to_string(level), f.empty(),
               f.empty() ? std::to_string(c) + " roots" : f);
  }
  return report;
}

Report verify_root_atlas(int n) {
  Report report;
  report.title = "root atlas n=" + std::to_string(n);
  const CartanMatrix B = build_cartan(Series::A, n - 1);
  for (AlgebraKind alg : {AlgebraKind::W, AlgebraKind::S}) {
    const auto roots = root_decomposition(alg, n);
    long total = static_cast<long>(cartan_dimension(alg, n));
    for (const auto& e : roots) total += e.multiplicity;
    const long expected = alg == AlgebraKind::W ? n * (1L << n) : (n - 1) * (1L << n) + 1;
    report.add(to_string(alg) + " multiplicity total", total == expected,
               std::to_string(total) + " vs " + std::to_string(expected));

    std::map<int, std::map<RootVector, int>> by_level;
    for (const auto& e : roots) by_level[e.level][e.root] = e.multiplicity;
    bool invariant = true;
    std::string detail;
    for (const auto& [level, mults] : by_level)
      for (int i = 1; i < n; ++i)
        for (const auto& [root, m] : mults) {
          const RootVector image = weyl_reflect_root(B, i, root);
          auto it = mults.find(image);
          if (it == mults.end() || it->second != m) {
            invariant = false;
            if (detail.empty()) detail = "w" + std::to_string(i) + " moves " + to_string(root);
          }
        }
    report.add(to_string(alg) + " Weyl invariance", invariant, detail);
  }

  const auto roots = root_decomposition(AlgebraKind::W, n);
  RootVector minus_a0{std::vector<int>(n, 0)};
  minus_a0.coeffs[0] = -1;
  int mult = 0;
  std::vector<RootVector> level_one;
  for (const auto& e : roots) {
    if (e.root == minus_a0) mult = e.multiplicity;
    if (e.level == 1) level_one.push_back(e.root);
  }
  report.add("mult(-alpha_0)", mult == n - 1, std::to_string(mult));
  std::vector<RootVector> expected_one;
  for (int j = 0; j < n; ++j) {
    RootVector r{std::vector<int>(n, 0)};
    for (int a = 0; a <= j; ++a) r.coeffs[a] = 1;
    expected_one.push_back(r);
  }
  std::sort(expected_one.begin(), expected_one.end());
  report.add("level 1 roots", level_one == expected_one);
  report.merge(check_root_lengths(n));
  return report;
}

} // namespace superpres
