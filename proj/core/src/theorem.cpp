#include "superpres/theorem.hpp"

#include "superpres/parallel.hpp"
#include "superpres/prolongation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace superpres {

namespace {

long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

void require_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    std::ostringstream os;
    os << what << ": n must lie in [" << lo << ", " << hi << "], got " << n;
    throw std::invalid_argument(os.str());
  }
}

} // namespace

Report verify_relations_in_w(int n, const std::vector<RelationExpr>& relations) {
  return evaluate_relations(chevalley_assignment(n), relations);
}

Report evaluate_relations(const std::map<GeneratorSymbol, WElement>& assignment,
                          const std::vector<RelationExpr>& relations) {
  if (assignment.empty()) throw std::invalid_argument("empty assignment");
  const int n = assignment.begin()->second.n();
  std::vector<std::optional<WElement>> residual(relations.size());
  parallel_for(relations.size(), [&](std::size_t i) {
    WElement r = evaluate(relations[i], assignment, w_bracket, WElement(n));
    if (!r.is_zero()) residual[i] = std::move(r);
  });

  Report report;
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::size_t, std::string>> by_family;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const auto& fam = relations[i].family;
    if (!by_family.count(fam)) order.push_back(fam);
    auto& [count, failure] = by_family[fam];
    ++count;
    if (residual[i] && failure.empty())
      failure = relations[i].label + " = " + to_string(*residual[i]);
  }
  for (const auto& fam : order) {
    const auto& [count, failure] = by_family[fam];
    report.add(fam, failure.empty(),
               failure.empty() ? std::to_string(count) + " relations vanish" : failure);
  }
  return report;
}

Report verify_relations(int n) {
  require_range(n, 3, 6, "verify_relations");
  const int r = n - 1;
  auto relations = relation_set(build_cartan(Series::A, r));
  const auto ideal = ideal_relations(Series::A, r);
  relations.insert(relations.end(), ideal.begin(), ideal.end());
  Report report = verify_relations_in_w(n, relations);
  report.title = "relations";
  return report;
}

Report verify_prolongation(int n) {
  require_range(n, 3, 6, "verify_prolongation");
  Report report;
  report.title = "prolongation";
  const auto comps = minimal_prolongation(w_local_part(n), n);
  for (int k = 1; k <= n; ++k) {
    const auto& c = comps.at(k + 1);
    const long expected = n * binom(n, k + 1);
    std::ostringstream os;
    os << "dim G_" << -k << " = " << c.dim() << ", expected " << expected;
    report.add("level " + std::to_string(-k), static_cast<long>(c.dim()) == expected, os.str());
    report.add("transitive " + std::to_string(-k), is_transitive(c));
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

// Sym^2 of the odd space W_{-1}: coordinates indexed by pairs i <= j.
struct SymSquare {
  std::size_t d;
  std::size_t dim() const { return d * (d + 1) / 2; }
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * d - i * (i - 1) / 2 + (j - i);
  }
  SparseVector product(const SparseVector& u, const SparseVector& v) const {
    std::vector<SparseVector::Entry> e;
    for (const auto& [a, x] : u.entries())
      for (const auto& [b, y] : v.entries()) e.emplace_back(index(a, b), x * y);
    return SparseVector(dim(), std::move(e));
  }
};

// Right-nested evaluation in the free cover at level >= -2.
struct CoverValue {
  std::optional<WElement> w;       // levels -1 and 0
  std::optional<SparseVector> sym; // level -2
};

} // namespace

LevelTwoCount level_two_count(int n) {
  require_range(n, 3, 6, "level_two_count");
  const int r = n - 1;
  const auto assignment = chevalley_assignment(n);
  const WIndex im1 = WIndex::level(n, -1), im2 = WIndex::level(n, -2);
  const std::size_t d = im1.dim();
  const SymSquare S{d};

  // ad g on W_{-1} for the level-0 generators e_i, f_i (i >= 1).
  std::vector<GeneratorSymbol> movers;
  for (int i = 1; i <= r; ++i) {
    movers.push_back(GeneratorSymbol::e(i));
    movers.push_back(GeneratorSymbol::f(i));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) pairs.emplace_back(i, j);

  std::vector<LinearImages> ad(movers.size());
  for (std::size_t g = 0; g < movers.size(); ++g)
    for (const auto& b : im1.basis())
      ad[g].push_back(im1.vectorize(w_bracket(assignment.at(movers[g]), WElement::basis(n, b))));

  auto act = [&](std::size_t g, const SparseVector& v) {
    std::vector<SparseVector::Entry> e;
    for (const auto& [idx, c] : v.entries()) {
      const auto [i, j] = pairs[idx];
      // g (x_i x_j) = (g x_i) x_j + x_i (g x_j); g is even.
      for (const auto& [k, y] : ad[g][i].entries()) e.emplace_back(S.index(k, j), c * y);
      for (const auto& [k, y] : ad[g][j].entries()) e.emplace_back(S.index(i, k), c * y);
    }
    return SparseVector(S.dim(), std::move(e));
  };

  // Weight of each Sym^2 coordinate, used to keep one row space per weight.
  std::vector<std::vector<int>> weight_m1;
  for (const auto& b : im1.basis()) weight_m1.push_back(b.weight(n));
  std::vector<std::vector<int>> pair_weight;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      std::vector<int> w(n);
      for (int a = 0; a < n; ++a) w[a] = weight_m1[i][a] + weight_m1[j][a];
      pair_weight.push_back(std::move(w));
    }

  std::map<std::vector<int>, RowSpace> spaces;
  std::vector<SparseVector> queue;
  auto insert = [&](const SparseVector& v) {
    std::map<std::vector<int>, std::vector<SparseVector::Entry>> parts;
    for (const auto& [idx, c] : v.entries()) parts[pair_weight[idx]].emplace_back(idx, c);
    for (auto& [w, entries] : parts) {
      SparseVector part(S.dim(), std::move(entries));
      auto it = spaces.try_emplace(w, S.dim()).first;
      const SparseVector rem = it->second.reduce(part);
      if (!rem.is_zero()) {
        it->second.insert(rem);
        queue.push_back(rem);
      }
    }
  };

  auto bracket = [&](const GeneratorSymbol& g, const CoverValue& v) {
    const WElement& x = assignment.at(g);
    CoverValue out;
    if (v.sym) {
      if (g.level() != 0) throw std::logic_error("level -2 word leaves the supported range");
      const auto pos = std::find(movers.begin(), movers.end(), g);
      if (pos == movers.end()) throw std::logic_error("unsupported level-0 letter in ideal relation");
      out.sym = act(static_cast<std::size_t>(pos - movers.begin()), *v.sym);
      return out;
    }
    const int lv = *v.w->level();
    if (g.level() == -1 && lv == -1) {
      out.sym = S.product(im1.vectorize(x), im1.vectorize(*v.w));
      return out;
    }
    out.w = w_bracket(x, *v.w);
    return out;
  };

  for (const auto& rel : ideal_relations(Series::A, r)) {
    SparseVector total(S.dim());
    for (const auto& w : rel.terms) {
      CoverValue v;
      v.w = assignment.at(w.letters.back());
      for (std::size_t i = w.letters.size() - 1; i-- > 0;) v = bracket(w.letters[i], v);
      if (!v.sym) throw std::logic_error("ideal relation is not at level -2");
      total.axpy(w.coeff, *v.sym);
    }
    insert(total);
  }
  while (!queue.empty()) {
    const SparseVector v = std::move(queue.back());
    queue.pop_back();
    for (std::size_t g = 0; g < movers.size(); ++g) insert(act(g, v));
  }

  LevelTwoCount out;
  out.free_dim = S.dim();
  out.target_dim = im2.dim();
  for (const auto& [w, space] : spaces) out.ideal_dim += space.rank();

  // Bracket map Sym^2(W_{-1}) -> W_{-2}.
  std::vector<SparseVector> images;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      images.push_back(im2.vectorize(
          w_bracket(WElement::basis(n, im1.basis()[i]), WElement::basis(n, im1.basis()[j]))));
  out.bracket_rank = span_dim(images);
  out.ideal_in_kernel = true;
  for (const auto& [w, space] : spaces) {
    const RrefResult basis = space.rref();
    for (const auto& row : basis.rref.rows()) {
      SparseVector img(im2.dim());
      for (const auto& [idx, c] : row.entries()) img.axpy(c, images[idx]);
      if (!img.is_zero()) out.ideal_in_kernel = false;
    }
  }
  return out;
}

Report verify_ideal(int n) {
  require_range(n, 3, 5, "verify_ideal");
  Report report;
  report.title = "ideal";
  const LevelTwoCount c = level_two_count(n);
  std::ostringstream os;
  os << c.free_dim << " = " << c.ideal_dim << " + " << c.target_dim;
  report.add("level -2 count", c.free_dim == c.ideal_dim + c.target_dim, os.str());
  report.add("ideal inside kernel", c.ideal_in_kernel);
  report.add("bracket onto W_-2", c.bracket_rank == c.target_dim,
             "rank " + std::to_string(c.bracket_rank));
  const std::size_t d = WIndex::level(n, -1).dim();
  report.add("free level -2 dimension",
             free_level_dim(std::vector<int>(d, 1), -2) == c.free_dim);
  return report;
}

Report verify_main_theorem(int n) {
  require_range(n, 3, 5, "verify_main_theorem");
  Report report;
  report.title = "main theorem n=" + std::to_string(n);
  report.merge(verify_relations(n));
  report.merge(verify_prolongation(n));
  report.merge(verify_ideal(n));
  return report;
}

// ---------------------------------------------------------------------------

WElement ktilde_element(int n, const std::vector<int>& uppers, int lower) {
  const int p = static_cast<int>(uppers.size());
  if (p < 3) throw std::invalid_argument("ktilde_element needs at least three upper indices");
  if (p == 3) return WElement::k(n, uppers, lower);
  const std::vector<int> tail(uppers.begin() + 1, uppers.end());
  return w_bracket(WElement::k(n, {uppers[0], uppers[1]}, uppers[1]), ktilde_element(n, tail, lower));
}

Report verify_ktilde(int n) {
  require_range(n, 3, 8, "verify_ktilde");
  Report report;
  report.title = "ktilde n=" + std::to_string(n);
  for (int p = 3; p <= n; ++p) {
    const auto count = static_cast<long>(w_basis(n, 1 - p).size());
    report.add("count p=" + std::to_string(p), ktilde_span(n, p) == count,
               std::to_string(ktilde_span(n, p)) + " vs " + std::to_string(count));
  }
  // Proportionality on ordered index tuples with b = a_p or b outside.
  for (int p = 3; p <= std::min(n, 5); ++p) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::string failure;
    std::size_t checked = 0;
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + p, true);
    do {
      std::vector<int> subset;
      for (int a = 0; a < n; ++a)
        if (choose[a]) subset.push_back(a);
      std::sort(subset.begin(), subset.end());
      do {
        for (int b = 0; b < n; ++b) {
          const bool inside = std::find(subset.begin(), subset.end(), b) != subset.end();
          if (inside && b != subset.back()) continue;
          const WElement kt = ktilde_element(n, subset, b);
          const WElement k = WElement::k(n, subset, b);
          ++checked;
          bool ok = !kt.is_zero() && kt.terms().size() == 1 &&
                    kt.terms().begin()->first == k.terms().begin()->first;
          if (!ok && failure.empty()) failure = "Kt not proportional to K for lower " + std::to_string(b);
        }
      } while (std::next_permutation(subset.begin(), subset.end()));
    } while (std::prev_permutation(choose.begin(), choose.end()));
    report.add("proportional p=" + std::to_string(p), failure.empty(),
               failure.empty() ? std::to_string(checked) + " tuples" : failure);
  }
  return report;
}

} // namespace superpres
