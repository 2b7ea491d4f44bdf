#include "superpres/cartan.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace superpres {

std::string to_string(Series s) {
  switch (s) {
  case Series::A: return "A";
  case Series::D: return "D";
  case Series::E: return "E";
  }
  return "?";
}

Series parse_series(const std::string& text) {
  if (text == "A" || text == "a") return Series::A;
  if (text == "D" || text == "d") return Series::D;
  if (text == "E" || text == "e") return Series::E;
  throw std::invalid_argument("unknown series: " + text);
}

IntMatrix cartan_A(int rank) {
  IntMatrix m(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    m[i][i] = 2;
    if (i + 1 < rank) m[i][i + 1] = m[i + 1][i] = -1;
  }
  return m;
}

CartanMatrix build_cartan(Series series, int r) {
  switch (series) {
  case Series::A:
    if (r < 2) throw std::invalid_argument("A series needs r >= 2");
    break;
  case Series::D:
    if (r < 4) throw std::invalid_argument("D series needs r >= 4");
    break;
  case Series::E:
    if (r < 4 || r > 11) throw std::invalid_argument("E series needs 4 <= r <= 11");
    break;
  }
  CartanMatrix B;
  B.series = series;
  B.rank = r;
  B.entries.assign(r + 1, std::vector<int>(r + 1, 0));
  auto link = [&](int a, int b) { B.entries[a][b] = B.entries[b][a] = -1; };
  for (int i = 1; i <= r; ++i) B.entries[i][i] = 2;
  link(0, 1);
  const int chain_end = series == Series::A ? r : r - 1;
  for (int i = 1; i < chain_end; ++i) link(i, i + 1);
  if (series == Series::D) link(r, r - 2);
  if (series == Series::E) link(r, r - 3);
  return B;
}

IntMatrix CartanMatrix::even_part() const {
  IntMatrix m(rank, std::vector<int>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) m[i][j] = entries[i + 1][j + 1];
  return m;
}

IntMatrix CartanMatrix::reduced_part() const {
  const int k = rank - 1;
  IntMatrix m(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = entries[i + 2][j + 2];
  return m;
}

Rational determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a[p][c])) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(a[r][c])) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

RationalMatrix inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a[p][c])) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || is_zero(a[r][c])) continue;
      Rational f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  RationalMatrix out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

RationalMatrix inverse_cartan_B(int n) {
  return inverse(build_cartan(Series::A, n - 1).entries);
}

// ---------------------------------------------------------------------------
// Roots and weights

int RootVector::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

RootVector RootVector::operator+(const RootVector& o) const {
  RootVector r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs.at(i);
  return r;
}

RootVector RootVector::operator-(const RootVector& o) const { return *this + (-o); }

RootVector RootVector::operator-() const {
  RootVector r = *this;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

std::string to_string(const RootVector& r) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) os << (i ? "," : "") << r.coeffs[i];
  os << ')';
  return os.str();
}

WeightVector WeightVector::from_root(const RootVector& r) {
  WeightVector w;
  for (int c : r.coeffs) w.coeffs.emplace_back(c);
  return w;
}

WeightVector WeightVector::from_labels(const CartanMatrix& B, const Rational& k,
                                       const std::vector<Rational>& labels) {
  if (static_cast<int>(labels.size()) != B.rank)
    throw std::invalid_argument("label count does not match rank");
  // Solve B c = t with t_0 chosen so that c_0 = k.
  const auto Binv = inverse(B.entries);
  std::vector<Rational> rhs(B.size());
  for (int i = 1; i <= B.rank; ++i) rhs[i] = labels[i - 1];
  // c = Binv (t0 e_0 + rhs); c_0 = Binv[0][0] t0 + sum_i Binv[0][i] rhs_i.
  Rational partial(0);
  for (int i = 1; i <= B.rank; ++i) partial += Binv[0][i] * rhs[i];
  rhs[0] = (k - partial) / Binv[0][0];
  WeightVector w;
  w.coeffs.assign(B.size(), Rational(0));
  for (int a = 0; a < B.size(); ++a)
    for (int b = 0; b < B.size(); ++b) w.coeffs[a] += Binv[a][b] * rhs[b];
  return w;
}

std::vector<Rational> WeightVector::dynkin_labels(const CartanMatrix& B) const {
  std::vector<Rational> out(B.rank, Rational(0));
  for (int i = 1; i <= B.rank; ++i)
    for (int b = 0; b < B.size(); ++b) out[i - 1] += coeffs.at(b) * B(b, i);
  return out;
}

Rational inner(const CartanMatrix& B, const WeightVector& x, const WeightVector& y) {
  if (static_cast<int>(x.coeffs.size()) != B.size() ||
      static_cast<int>(y.coeffs.size()) != B.size())
    throw std::invalid_argument("inner: rank mismatch");
  Rational s(0);
  for (int a = 0; a < B.size(); ++a) {
    if (is_zero(x.coeffs[a])) continue;
    for (int b = 0; b < B.size(); ++b)
      if (B(a, b) != 0) s += x.coeffs[a] * B(a, b) * y.coeffs[b];
  }
  return s;
}

Rational inner(const CartanMatrix& B, const RootVector& x, const RootVector& y) {
  return inner(B, WeightVector::from_root(x), WeightVector::from_root(y));
}

WeightVector weyl_reflect_weight(const CartanMatrix& B, int i, const WeightVector& w) {
  if (i < 1 || i > B.rank)
    throw std::invalid_argument("Weyl reflection index must lie in 1..r");
  Rational p(0);
  for (int b = 0; b < B.size(); ++b) p += w.coeffs.at(b) * B(b, i);
  WeightVector out = w;
  out.coeffs[i] -= p;
  return out;
}

RootVector weyl_reflect_root(const CartanMatrix& B, int i, const RootVector& r) {
  if (i < 1 || i > B.rank)
    throw std::invalid_argument("Weyl reflection index must lie in 1..r");
  int p = 0;
  for (int b = 0; b < B.size(); ++b) p += r.coeffs.at(b) * B(b, i);
  RootVector out = r;
  out.coeffs[i] -= p;
  return out;
}

namespace {

bool positive_definite(const IntMatrix& A) {
  for (std::size_t k = 1; k <= A.size(); ++k) {
    IntMatrix minor(k, std::vector<int>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = A[i][j];
    if (sgn(determinant(minor)) <= 0) return false;
  }
  return true;
}

int pair(const IntMatrix& A, const std::vector<int>& root, std::size_t i) {
  int s = 0;
  for (std::size_t j = 0; j < root.size(); ++j) s += root[j] * A[j][i];
  return s;
}

} // namespace

std::vector<std::vector<int>> positive_roots(const IntMatrix& A) {
  if (!positive_definite(A))
    throw std::invalid_argument("positive_roots: algebra is not finite-dimensional");
  const std::size_t r = A.size();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> a(r, 0);
    a[i] = 1;
    layer.push_back(a);
    seen.insert(a);
  }
  std::vector<std::vector<int>> all = layer;
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < r; ++i) {
        // alpha_i-string through beta: beta - p a_i, ..., beta + q a_i, q = p - <beta, a_i>.
        int p = 0;
        for (;;) {
          std::vector<int> down = beta;
          down[i] -= p + 1;
          if (down[i] < 0 || !seen.count(down)) break;
          ++p;
        }
        const int q = p - pair(A, beta, i);
        if (q <= 0) continue;
        std::vector<int> up = beta;
        up[i] += 1;
        if (seen.insert(up).second) next.push_back(up);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    const int hx = std::accumulate(x.begin(), x.end(), 0);
    const int hy = std::accumulate(y.begin(), y.end(), 0);
    return hx != hy ? hx < hy : x < y;
  });
  return all;
}

std::vector<RootVector> positive_roots(Series series, int r) {
  const auto B = build_cartan(series, r);
  std::vector<RootVector> out;
  for (const auto& c : positive_roots(B.even_part())) {
    RootVector rv;
    rv.coeffs.push_back(0);
    rv.coeffs.insert(rv.coeffs.end(), c.begin(), c.end());
    out.push_back(std::move(rv));
  }
  return out;
}

std::vector<Rational> weyl_vector(const IntMatrix& A) {
  const auto Ainv = inverse(A);
  std::vector<Rational> rho(A.size(), Rational(0));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A.size(); ++j) rho[i] += Ainv[i][j];
  return rho;
}

Rational label_inner(const IntMatrix& A, const std::vector<Rational>& x,
                     const std::vector<Rational>& y) {
  const auto Ainv = inverse(A);
  Rational s(0);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A.size(); ++j) s += x.at(i) * Ainv[i][j] * y.at(j);
  return s;
}

Rational weight_norm(int k, const std::vector<Rational>& mu, int n) {
  if (static_cast<int>(mu.size()) != n - 1)
    throw std::invalid_argument("weight_norm: expected n-1 Dynkin labels");
  return -make_rational(n - 1, n) * k * k + label_inner(cartan_A(n - 1), mu, mu);
}

// ---------------------------------------------------------------------------
// Freudenthal

namespace {

struct WeightContext {
  IntMatrix A;
  RationalMatrix Ainv;
  std::vector<std::vector<int>> roots_simple;  // positive roots, simple coords
  std::vector<std::vector<int>> roots_labels;  // positive roots, Dynkin labels
  std::size_t rank = 0;

  explicit WeightContext(const IntMatrix& a) : A(a), Ainv(inverse(a)), rank(a.size()) {
    roots_simple = positive_roots(a);
    for (const auto& c : roots_simple) {
      std::vector<int> lab(rank, 0);
      for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) lab[i] += A[i][j] * c[j];
      roots_labels.push_back(lab);
    }
  }

  Rational ip(const std::vector<int>& x, const std::vector<int>& y) const {
    Rational s(0);
    for (std::size_t i = 0; i < rank; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < rank; ++j)
        if (y[j] != 0) s += Ainv[i][j] * (x[i] * y[j]);
    }
    return s;
  }

  std::vector<int> dominant_conjugate(std::vector<int> w) const {
    for (;;) {
      std::size_t i = 0;
      while (i < rank && w[i] >= 0) ++i;
      if (i == rank) return w;
      const int c = w[i];
      for (std::size_t j = 0; j < rank; ++j) w[j] -= c * A[i][j];
    }
  }

  static bool dominant(const std::vector<int>& w) {
    return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
  }
};

std::vector<int> plus_rho(std::vector<int> w) {
  for (auto& x : w) x += 1;
  return w;
}

struct DepthEntry {
  std::vector<int> labels;
  std::vector<int> offset;  // highest - weight, simple-root coordinates
};

int depth_of(const std::vector<int>& offset) {
  return std::accumulate(offset.begin(), offset.end(), 0);
}

// Freudenthal over a list of weights ordered by depth. `lookup` resolves the
// multiplicity of a weight that lies above the current one.
template <class Lookup>
int freudenthal_step(const WeightContext& ctx, const std::vector<int>& highest,
                     const DepthEntry& e, Lookup&& lookup) {
  const auto hr = plus_rho(highest);
  const auto wr = plus_rho(e.labels);
  Rational den = ctx.ip(hr, hr) - ctx.ip(wr, wr);
  if (is_zero(den)) return 0;
  Rational num(0);
  for (std::size_t a = 0; a < ctx.roots_labels.size(); ++a) {
    const auto& al = ctx.roots_labels[a];
    const auto& ac = ctx.roots_simple[a];
    std::vector<int> w = e.labels;
    std::vector<int> off = e.offset;
    for (int k = 1;; ++k) {
      bool inside = true;
      for (std::size_t i = 0; i < ctx.rank; ++i) {
        w[i] += al[i];
        off[i] -= ac[i];
        if (off[i] < 0) inside = false;
      }
      if (!inside) break;
      const int m = lookup(w);
      if (m != 0) num += ctx.ip(w, al) * m;
    }
  }
  Rational q = 2 * num / den;
  if (q.get_den() != 1 || sgn(q) < 0)
    throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
  return static_cast<int>(q.get_num().get_si());
}

} // namespace

std::map<std::vector<int>, int> dominant_weight_multiplicities(
    const IntMatrix& A, const std::vector<int>& highest) {
  if (highest.size() != A.size()) throw std::invalid_argument("label count mismatch");
  if (!WeightContext::dominant(highest))
    throw std::invalid_argument("highest weight is not dominant");
  const WeightContext ctx(A);

  // Dominant weights below highest, linked by positive roots.
  std::map<std::vector<int>, std::vector<int>> offsets;  // labels -> offset
  std::deque<std::vector<int>> queue{highest};
  offsets[highest] = std::vector<int>(A.size(), 0);
  while (!queue.empty()) {
    auto w = queue.front();
    queue.pop_front();
    const auto off = offsets[w];
    for (std::size_t a = 0; a < ctx.roots_labels.size(); ++a) {
      std::vector<int> v = w;
      for (std::size_t i = 0; i < A.size(); ++i) v[i] -= ctx.roots_labels[a][i];
      if (!WeightContext::dominant(v) || offsets.count(v)) continue;
      std::vector<int> o = off;
      for (std::size_t i = 0; i < A.size(); ++i) o[i] += ctx.roots_simple[a][i];
      offsets[v] = o;
      queue.push_back(v);
    }
  }

  std::vector<DepthEntry> order;
  for (const auto& [w, off] : offsets) order.push_back({w, off});
  std::stable_sort(order.begin(), order.end(), [](const DepthEntry& x, const DepthEntry& y) {
    return depth_of(x.offset) < depth_of(y.offset);
  });

  std::map<std::vector<int>, int> mult;
  mult[highest] = 1;
  auto lookup = [&](const std::vector<int>& w) {
    auto it = mult.find(ctx.dominant_conjugate(w));
    return it == mult.end() ? 0 : it->second;
  };
  for (const auto& e : order) {
    if (e.labels == highest) continue;
    mult[e.labels] = freudenthal_step(ctx, highest, e, lookup);
  }
  for (auto it = mult.begin(); it != mult.end();)
    it = it->second == 0 ? mult.erase(it) : std::next(it);
  return mult;
}

std::map<std::vector<int>, int> all_weight_multiplicities(const IntMatrix& A,
                                                          const std::vector<int>& highest) {
  const auto dom = dominant_weight_multiplicities(A, highest);
  const WeightContext ctx(A);
  // Every weight lying under highest whose dominant conjugate occurs.
  std::map<std::vector<int>, std::vector<int>> offsets;
  std::deque<std::vector<int>> queue{highest};
  offsets[highest] = std::vector<int>(A.size(), 0);
  while (!queue.empty()) {
    auto w = queue.front();
    queue.pop_front();
    const auto off = offsets[w];
    for (std::size_t i = 0; i < A.size(); ++i) {
      std::vector<int> v = w;
      for (std::size_t j = 0; j < A.size(); ++j) v[j] -= A[i][j];
      if (offsets.count(v) || !dom.count(ctx.dominant_conjugate(v))) continue;
      std::vector<int> o = off;
      o[i] += 1;
      offsets[v] = o;
      queue.push_back(v);
    }
  }
  std::vector<DepthEntry> order;
  for (const auto& [w, off] : offsets) order.push_back({w, off});
  std::stable_sort(order.begin(), order.end(), [](const DepthEntry& x, const DepthEntry& y) {
    return depth_of(x.offset) < depth_of(y.offset);
  });
  std::map<std::vector<int>, int> mult;
  mult[highest] = 1;
  auto lookup = [&](const std::vector<int>& w) {
    auto it = mult.find(w);
    return it == mult.end() ? 0 : it->second;
  };
  for (const auto& e : order) {
    if (e.labels == highest) continue;
    mult[e.labels] = freudenthal_step(ctx, highest, e, lookup);
  }
  for (auto it = mult.begin(); it != mult.end();)
    it = it->second == 0 ? mult.erase(it) : std::next(it);
  return mult;
}

int freudenthal_multiplicity(const IntMatrix& A, const std::vector<int>& highest,
                             const std::vector<int>& target) {
  if (target.size() != A.size()) throw std::invalid_argument("label count mismatch");
  const auto mult = dominant_weight_multiplicities(A, highest);
  const WeightContext ctx(A);
  auto it = mult.find(ctx.dominant_conjugate(target));
  return it == mult.end() ? 0 : it->second;
}

BigInt weyl_dimension(const IntMatrix& A, const std::vector<int>& highest) {
  const WeightContext ctx(A);
  const auto hr = plus_rho(highest);
  std::vector<int> rho(A.size(), 1);
  Rational d(1);
  for (const auto& al : ctx.roots_labels) d *= ctx.ip(hr, al) / ctx.ip(rho, al);
  if (d.get_den() != 1) throw std::logic_error("non-integral Weyl dimension");
  return d.get_num();
}

} // namespace superpres
