#include "superpres/prolongation.hpp"

#include "superpres/wn.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace superpres {

namespace {

SparseVector apply(const LinearImages& images, const SparseVector& v, std::size_t out_dim) {
  SparseVector r(out_dim);
  for (const auto& [j, c] : v.entries()) r.axpy(c, images.at(j));
  return r;
}

int sign(int a, int b) { return (a & b) ? -1 : 1; }

LinearImages negated_transpose_row(const std::vector<LinearImages>& table, std::size_t col,
                                   const std::vector<int>& par_rows, int par_col) {
  LinearImages out;
  out.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    out.push_back(table[i].at(col).scaled(Rational(-sign(par_rows[i], par_col))));
  return out;
}

template <class Element, class Vectorize, class Bracket>
std::vector<LinearImages> table(const std::vector<Element>& left, const std::vector<Element>& right,
                                Vectorize&& vec, Bracket&& br) {
  std::vector<LinearImages> out(left.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (const auto& y : right) out[i].push_back(vec(br(left[i], y)));
  return out;
}

} // namespace

LocalPart w_local_part(int n) {
  LocalPart L;
  const WIndex i1 = WIndex::level(n, 1), i0 = WIndex::level(n, 0), im1 = WIndex::level(n, -1);
  auto elems = [&](const WIndex& idx) {
    std::vector<WElement> out;
    for (const auto& b : idx.basis()) out.push_back(WElement::basis(n, b));
    return out;
  };
  const auto g1 = elems(i1), g0 = elems(i0), gm1 = elems(im1);
  for (const auto& b : i1.basis()) L.parity_1.push_back(b.parity());
  for (const auto& b : i0.basis()) L.parity_0.push_back(b.parity());
  for (const auto& b : im1.basis()) L.parity_m1.push_back(b.parity());
  auto br = [](const WElement& x, const WElement& y) { return w_bracket(x, y); };
  L.br_0_1 = table(g0, g1, [&](const WElement& x) { return i1.vectorize(x); }, br);
  L.br_0_m1 = table(g0, gm1, [&](const WElement& x) { return im1.vectorize(x); }, br);
  L.br_1_m1 = table(g1, gm1, [&](const WElement& x) { return i0.vectorize(x); }, br);
  L.br_0_0 = table(g0, g0, [&](const WElement& x) { return i0.vectorize(x); }, br);
  return L;
}

LocalPart sl1n_local_part(int n) {
  LocalPart L;
  std::vector<SLBasisElement> g1, g0, gm1;
  for (const auto& b : sl1n_basis(n)) (b.level() == 1 ? g1 : b.level() == 0 ? g0 : gm1).push_back(b);
  std::map<SLBasisElement, std::size_t> pos;
  for (auto* part : {&g1, &g0, &gm1})
    for (std::size_t i = 0; i < part->size(); ++i) pos[(*part)[i]] = i;
  L.parity_1.assign(g1.size(), 1);
  L.parity_0.assign(g0.size(), 0);
  L.parity_m1.assign(gm1.size(), 1);
  auto vec = [&](std::size_t dim) {
    return [&, dim](const SLElement& x) {
      std::vector<SparseVector::Entry> e;
      for (const auto& [b, c] : x) e.emplace_back(pos.at(b), c);
      return SparseVector(dim, std::move(e));
    };
  };
  auto br = [n](const SLBasisElement& x, const SLBasisElement& y) {
    return sl1n_bracket(sl_basis_element(x), sl_basis_element(y), n);
  };
  L.br_0_1 = table(g0, g1, vec(g1.size()), br);
  L.br_0_m1 = table(g0, gm1, vec(gm1.size()), br);
  L.br_1_m1 = table(g1, gm1, vec(g0.size()), br);
  L.br_0_0 = table(g0, g0, vec(g0.size()), br);
  return L;
}

LocalPart change_basis(const LocalPart& local, const std::vector<std::vector<Rational>>& p_m1,
                       const std::vector<std::vector<Rational>>& p_1) {
  auto check = [](const std::vector<std::vector<Rational>>& P, const std::vector<int>& parity) {
    if (P.size() != parity.size()) throw std::invalid_argument("change_basis: wrong matrix size");
    std::vector<int> out;
    for (const auto& row : P) {
      if (row.size() != parity.size()) throw std::invalid_argument("change_basis: wrong row size");
      std::optional<int> p;
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (is_zero(row[j])) continue;
        if (p && *p != parity[j]) throw std::invalid_argument("change_basis: mixes parities");
        p = parity[j];
      }
      if (!p) throw std::invalid_argument("change_basis: zero row");
      out.push_back(*p);
    }
    if (rank(SparseMatrix::from_dense(P, parity.size())) != parity.size())
      throw std::invalid_argument("change_basis: singular matrix");
    return out;
  };
  LocalPart L = local;
  L.parity_m1 = check(p_m1, local.parity_m1);
  L.parity_1 = check(p_1, local.parity_1);

  auto transpose = [](const std::vector<std::vector<Rational>>& P) {
    std::vector<std::vector<Rational>> T(P.size(), std::vector<Rational>(P.size()));
    for (std::size_t i = 0; i < P.size(); ++i)
      for (std::size_t j = 0; j < P.size(); ++j) T[j][i] = P[i][j];
    return SparseMatrix::from_dense(T, P.size());
  };
  const SparseMatrix t_m1 = transpose(p_m1), t_1 = transpose(p_1);
  // Old coordinates c relate to new coordinates c' by c = P^T c'.
  auto to_new = [](const SparseMatrix& t, const SparseVector& old) {
    auto x = solve(t, old);
    if (!x) throw std::logic_error("change_basis: inconsistent coordinates");
    return *x;
  };
  auto combine = [](const LinearImages& images, const std::vector<Rational>& row, std::size_t dim) {
    SparseVector r(dim);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!is_zero(row[j])) r.axpy(row[j], images[j]);
    return r;
  };

  for (std::size_t h = 0; h < local.dim_0(); ++h) {
    for (std::size_t i = 0; i < p_1.size(); ++i)
      L.br_0_1[h][i] = to_new(t_1, combine(local.br_0_1[h], p_1[i], local.dim_1()));
    for (std::size_t i = 0; i < p_m1.size(); ++i)
      L.br_0_m1[h][i] = to_new(t_m1, combine(local.br_0_m1[h], p_m1[i], local.dim_m1()));
  }
  for (std::size_t i = 0; i < p_1.size(); ++i) {
    LinearImages mixed(local.dim_m1(), SparseVector(local.dim_0()));
    for (std::size_t j = 0; j < p_1[i].size(); ++j) {
      if (is_zero(p_1[i][j])) continue;
      for (std::size_t x = 0; x < local.dim_m1(); ++x) mixed[x].axpy(p_1[i][j], local.br_1_m1[j][x]);
    }
    for (std::size_t k = 0; k < p_m1.size(); ++k)
      L.br_1_m1[i][k] = combine(mixed, p_m1[k], local.dim_0());
  }
  return L;
}

// ---------------------------------------------------------------------------

namespace {

struct LocalView {
  const LocalPart& L;

  std::size_t dim(int level) const {
    return level == 1 ? L.dim_1() : level == 0 ? L.dim_0() : L.dim_m1();
  }
  int parity(int level, std::size_t i) const {
    return level == 1 ? L.parity_1[i] : level == 0 ? L.parity_0[i] : L.parity_m1[i];
  }

  std::optional<SparseVector> basis_bracket(int la, std::size_t i, int lb, std::size_t j) const {
    const int s = sign(parity(la, i), parity(lb, j));
    auto neg = [s](const SparseVector& v) { return v.scaled(Rational(-s)); };
    if (la == 0 && lb == 0) return L.br_0_0[i][j];
    if (la == 0 && lb == 1) return L.br_0_1[i][j];
    if (la == 1 && lb == 0) return neg(L.br_0_1[j][i]);
    if (la == 0 && lb == -1) return L.br_0_m1[i][j];
    if (la == -1 && lb == 0) return neg(L.br_0_m1[j][i]);
    if (la == 1 && lb == -1) return L.br_1_m1[i][j];
    if (la == -1 && lb == 1) return neg(L.br_1_m1[j][i]);
    return std::nullopt;
  }

  // [basis(la, i), v] with v at level lb.
  std::optional<SparseVector> bracket(int la, std::size_t i, int lb, const SparseVector& v) const {
    const int lr = la + lb;
    if (lr < -1 || lr > 1) return std::nullopt;
    SparseVector r(dim(lr));
    for (const auto& [j, c] : v.entries()) r.axpy(c, *basis_bracket(la, i, lb, j));
    return r;
  }

  // [v, basis(lb, j)] with v at level la.
  std::optional<SparseVector> bracket_left(int la, const SparseVector& v, int lb, std::size_t j) const {
    const int lr = la + lb;
    if (lr < -1 || lr > 1) return std::nullopt;
    SparseVector r(dim(lr));
    for (const auto& [i, c] : v.entries()) r.axpy(c, *basis_bracket(la, i, lb, j));
    return r;
  }
};

} // namespace

std::optional<std::string> local_jacobi_failure(const LocalPart& local) {
  const LocalView V{local};
  const int levels[] = {1, 0, -1};
  for (int la : levels)
    for (int lb : levels)
      for (int lc : levels) {
        const int total = la + lb + lc;
        if (total < -1 || total > 1) continue;
        if (std::abs(la + lb) > 1 || std::abs(lb + lc) > 1 || std::abs(la + lc) > 1) continue;
        for (std::size_t a = 0; a < V.dim(la); ++a)
          for (std::size_t b = 0; b < V.dim(lb); ++b)
            for (std::size_t c = 0; c < V.dim(lc); ++c) {
              const int s = sign(V.parity(la, a), V.parity(lb, b));
              // [a,[b,c]] = [[a,b],c] + s [b,[a,c]]
              auto lhs = V.bracket(la, a, lb + lc, *V.basis_bracket(lb, b, lc, c));
              auto t1 = V.bracket_left(la + lb, *V.basis_bracket(la, a, lb, b), lc, c);
              auto t2 = V.bracket(lb, b, la + lc, *V.basis_bracket(la, a, lc, c));
              SparseVector rest = *t1;
              rest.axpy(Rational(s), *t2);
              if (!(*lhs == rest)) {
                std::ostringstream os;
                os << "super-Jacobi fails on levels (" << la << "," << lb << "," << lc
                   << ") basis (" << a << "," << b << "," << c << ")";
                return os.str();
              }
            }
      }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::vector<GradedComponent> minimal_prolongation(const LocalPart& local, int depth) {
  if (depth < 1) throw std::invalid_argument("minimal_prolongation: depth must be >= 1");
  if (auto failure = local_jacobi_failure(local))
    throw std::invalid_argument("inconsistent local part: " + *failure);

  const std::size_t d1 = local.dim_1(), d0 = local.dim_0(), dm1 = local.dim_m1();
  std::vector<GradedComponent> comps;

  GradedComponent c1;
  c1.level = 1;
  c1.parity = local.parity_1;
  c1.ad_g0 = local.br_0_1;
  for (std::size_t x = 0; x < dm1; ++x)
    c1.ad_gm1.push_back(negated_transpose_row(local.br_1_m1, x, local.parity_1, local.parity_m1[x]));
  comps.push_back(std::move(c1));

  GradedComponent c0;
  c0.level = 0;
  c0.parity = local.parity_0;
  for (std::size_t l = 0; l < d1; ++l)
    c0.ad_g1.push_back(negated_transpose_row(local.br_0_1, l, local.parity_0, local.parity_1[l]));
  c0.ad_g0 = local.br_0_0;
  for (std::size_t x = 0; x < dm1; ++x)
    c0.ad_gm1.push_back(negated_transpose_row(local.br_0_m1, x, local.parity_0, local.parity_m1[x]));
  comps.push_back(std::move(c0));

  GradedComponent cm1;
  cm1.level = -1;
  cm1.parity = local.parity_m1;
  cm1.ad_g1 = local.br_1_m1;
  cm1.ad_g0 = local.br_0_m1;
  comps.push_back(std::move(cm1));

  for (int k = 1; k < depth; ++k) {
    GradedComponent& cur = comps[k + 1];
    const GradedComponent& prev = comps[k];
    const std::size_t dc = cur.dim();
    const std::size_t flat = d1 * dc;

    auto flatten = [&](const std::vector<SparseVector>& blocks) {
      std::vector<SparseVector::Entry> e;
      for (std::size_t l = 0; l < blocks.size(); ++l)
        for (const auto& [i, c] : blocks[l].entries()) e.emplace_back(l * dc + i, c);
      return SparseVector(flat, std::move(e));
    };
    auto block = [&](const SparseVector& v, std::size_t l) {
      std::vector<SparseVector::Entry> e;
      for (const auto& [i, c] : v.entries())
        if (i / dc == l) e.emplace_back(i % dc, c);
      return SparseVector(dc, std::move(e));
    };

    RowSpace spaces[2] = {RowSpace(flat), RowSpace(flat)};
    std::vector<std::pair<int, SparseVector>> candidates;
    candidates.reserve(dm1 * dc);
    for (std::size_t x = 0; x < dm1; ++x)
      for (std::size_t v = 0; v < dc; ++v) {
        std::vector<SparseVector> blocks;
        for (std::size_t l = 0; l < d1; ++l) {
          SparseVector out(dc);
          for (const auto& [h, c] : local.br_1_m1[l][x].entries()) out.axpy(c, cur.ad_g0[h][v]);
          const SparseVector down = cur.ad_g1[l][v];  // in prev
          out.axpy(Rational(sign(local.parity_1[l], local.parity_m1[x])),
                   apply(prev.ad_gm1[x], down, dc));
          blocks.push_back(std::move(out));
        }
        const int par = (local.parity_m1[x] + cur.parity[v]) & 1;
        SparseVector cand = flatten(blocks);
        spaces[par].insert(cand);
        candidates.emplace_back(par, std::move(cand));
      }

    const RrefResult bases[2] = {spaces[0].rref(), spaces[1].rref()};
    GradedComponent next;
    next.level = -(k + 1);
    std::vector<SparseVector> maps;
    for (int par = 0; par < 2; ++par)
      for (const auto& row : bases[par].rref.rows()) {
        next.parity.push_back(par);
        maps.push_back(row);
      }
    const std::size_t dn = maps.size();
    const std::size_t offset[2] = {0, bases[0].rank()};
    auto coords = [&](int par, const SparseVector& v) {
      auto c = coordinates_in(bases[par], v);
      if (!c) throw std::logic_error("prolongation: vector outside the computed level");
      std::vector<SparseVector::Entry> e;
      for (std::size_t i = 0; i < c->size(); ++i)
        if (!is_zero((*c)[i])) e.emplace_back(offset[par] + i, (*c)[i]);
      return SparseVector(dn, std::move(e));
    };

    cur.ad_gm1.assign(dm1, LinearImages());
    for (std::size_t x = 0; x < dm1; ++x)
      for (std::size_t v = 0; v < dc; ++v) {
        const auto& [par, cand] = candidates[x * dc + v];
        cur.ad_gm1[x].push_back(coords(par, cand));
      }

    next.ad_g1.assign(d1, LinearImages());
    for (std::size_t l = 0; l < d1; ++l)
      for (const auto& m : maps) next.ad_g1[l].push_back(block(m, l));

    next.ad_g0.assign(d0, LinearImages());
    for (std::size_t h = 0; h < d0; ++h)
      for (std::size_t j = 0; j < dn; ++j) {
        std::vector<SparseVector> blocks;
        const int s = sign(local.parity_0[h], next.parity[j]);
        for (std::size_t l = 0; l < d1; ++l) {
          SparseVector out = apply(cur.ad_g0[h], next.ad_g1[l][j], dc);
          for (const auto& [t, c] : local.br_0_1[h][l].entries())
            out.axpy(Rational(-s) * c, next.ad_g1[t][j]);
          blocks.push_back(std::move(out));
        }
        next.ad_g0[h].push_back(coords((local.parity_0[h] + next.parity[j]) & 1, flatten(blocks)));
      }
    comps.push_back(std::move(next));
  }
  return comps;
}

bool is_transitive(const GradedComponent& c) {
  if (c.level >= 0) return true;
  if (c.dim() == 0) return true;
  std::size_t out_dim = 0;
  for (const auto& images : c.ad_g1)
    for (const auto& v : images) out_dim = v.dim();
  std::vector<SparseVector> rows;
  for (std::size_t j = 0; j < c.dim(); ++j) {
    std::vector<SparseVector::Entry> e;
    for (std::size_t l = 0; l < c.ad_g1.size(); ++l)
      for (const auto& [i, v] : c.ad_g1[l][j].entries()) e.emplace_back(l * out_dim + i, v);
    rows.emplace_back(c.ad_g1.size() * out_dim, std::move(e));
  }
  return span_dim(rows) == c.dim();
}

// ---------------------------------------------------------------------------

namespace {

// Right-normed brackets of length `deg` in the tensor algebra.
std::size_t free_dim_bruteforce(const std::vector<int>& parities, int deg) {
  const std::size_t d = parities.size();
  std::size_t total = 1;
  for (int i = 0; i < deg; ++i) total *= d;
  using Tensor = std::map<std::vector<int>, Rational>;
  auto word_parity = [&](const std::vector<int>& w) {
    int p = 0;
    for (int x : w) p ^= parities[x];
    return p;
  };
  auto bracket = [&](int a, const Tensor& t) {
    Tensor r;
    for (const auto& [w, c] : t) {
      const int s = sign(parities[a], word_parity(w));
      std::vector<int> left{a};
      left.insert(left.end(), w.begin(), w.end());
      std::vector<int> right = w;
      right.push_back(a);
      r[left] += c;
      r[right] -= s * c;
    }
    return r;
  };
  auto encode = [&](const Tensor& t) {
    std::vector<SparseVector::Entry> e;
    for (const auto& [w, c] : t) {
      if (is_zero(c)) continue;
      std::size_t idx = 0;
      for (int x : w) idx = idx * d + x;
      e.emplace_back(idx, c);
    }
    return SparseVector(total, std::move(e));
  };
  RowSpace space(total);
  std::vector<int> letters(deg, 0);
  for (;;) {
    Tensor t{{{letters.back()}, Rational(1)}};
    for (int i = deg - 2; i >= 0; --i) t = bracket(letters[i], t);
    space.insert(encode(t));
    int pos = deg - 1;
    while (pos >= 0 && ++letters[pos] == static_cast<int>(d)) letters[pos--] = 0;
    if (pos < 0) break;
  }
  return space.rank();
}

} // namespace

std::size_t free_level_dim(const std::vector<int>& parities, int level) {
  const int deg = std::abs(level);
  if (deg > 3) throw std::invalid_argument("free_level_dim supports |level| <= 3");
  if (deg == 0) throw std::invalid_argument("free_level_dim: level 0 is not generated freely");
  const std::size_t d = parities.size();
  if (deg == 1) return d;
  if (deg == 2) {
    std::size_t odd = 0;
    for (int p : parities) odd += p & 1;
    const std::size_t even = d - odd;
    return even * (even - (even ? 1 : 0)) / 2 + even * odd + odd * (odd + 1) / 2;
  }
  return free_dim_bruteforce(parities, deg);
}

std::size_t free_level_dim(const std::vector<GeneratorSymbol>& gens, int level) {
  std::vector<int> parities;
  for (const auto& g : gens) parities.push_back(g.parity());
  return free_level_dim(parities, level);
}

long ktilde_span(int n, int p) {
  if (p < 3) throw std::invalid_argument("ktilde_span needs p >= 3");
  if (p > n) return 0;
  auto binom = [](int a, int b) {
    if (b < 0 || b > a) return 0L;
    long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  return binom(n, p) * (n - p) + n * binom(n - 1, p - 1);
}

} // namespace superpres
