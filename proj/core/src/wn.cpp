#include "superpres/wn.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace superpres {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxGrassmann)
    throw std::invalid_argument("W(n) needs 1 <= n <= " + std::to_string(kMaxGrassmann));
}

void combinations(int n, int p, int start, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == p) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, p, i + 1, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<int> WBasisElement::weight(int n) const {
  std::vector<int> w(n, 0);
  for (int a : indices_of(uppers)) w[a] += 1;
  w[lower] -= 1;
  return w;
}

std::string to_string(const WBasisElement& b) {
  std::string s = "K";
  if (b.uppers) {
    s += "^{";
    for (int a : indices_of(b.uppers)) s += std::to_string(a);
    s += "}";
  }
  return s + "_" + std::to_string(b.lower);
}

std::vector<WBasisElement> w_basis(int n, int level) {
  check_n(n);
  const int p = 1 - level;
  std::vector<WBasisElement> out;
  if (p < 0 || p > n) return out;
  std::vector<std::vector<int>> combos;
  std::vector<int> cur;
  combinations(n, p, 0, cur, combos);
  for (const auto& c : combos)
    for (int b = 0; b < n; ++b) out.push_back({monomial_of(c), b});
  return out;
}

// ---------------------------------------------------------------------------

WElement::WElement(int n) : n_(n) { check_n(n); }

WElement WElement::k(int n, const std::vector<int>& uppers, int lower) {
  WElement x(n);
  if (lower < 0 || lower >= n) throw std::invalid_argument("lower index out of range");
  const auto prod = GrassmannElement::product(n, uppers);
  for (const auto& [m, c] : prod.terms()) x.add_term({m, lower}, c);
  return x;
}

WElement WElement::basis(int n, const WBasisElement& b, const Rational& c) {
  WElement x(n);
  if ((b.uppers >> n) || b.lower < 0 || b.lower >= n)
    throw std::invalid_argument("basis symbol out of range");
  x.add_term(b, c);
  return x;
}

Rational WElement::coeff(const WBasisElement& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WElement::add_term(const WBasisElement& b, const Rational& c) {
  if (superpres::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (superpres::is_zero(it->second)) terms_.erase(it);
  }
}

WElement& WElement::operator+=(const WElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("W(n) rank mismatch");
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

WElement& WElement::operator-=(const WElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("W(n) rank mismatch");
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

WElement WElement::operator+(const WElement& o) const {
  WElement r = *this;
  return r += o;
}

WElement WElement::operator-(const WElement& o) const {
  WElement r = *this;
  return r -= o;
}

WElement WElement::operator-() const { return scaled(Rational(-1)); }

WElement WElement::scaled(const Rational& c) const {
  WElement r(n_);
  if (superpres::is_zero(c)) return r;
  for (const auto& [b, v] : terms_) r.terms_.emplace(b, v * c);
  return r;
}

std::optional<int> WElement::level() const {
  std::optional<int> l;
  for (const auto& [b, c] : terms_) {
    if (l && *l != b.level()) return std::nullopt;
    l = b.level();
  }
  return l;
}

std::optional<int> WElement::parity() const {
  std::optional<int> p;
  for (const auto& [b, c] : terms_) {
    if (p && *p != b.parity()) return std::nullopt;
    p = b.parity();
  }
  return p;
}

std::string to_string(const WElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << '*' << to_string(b);
  }
  return os.str();
}

WElement w_bracket(const WElement& x, const WElement& y) {
  if (x.n() != y.n()) throw std::invalid_argument("W(n) rank mismatch");
  WElement r(x.n());
  for (const auto& [bx, cx] : x.terms()) {
    const Monomial A = bx.uppers;
    const int c = bx.lower;
    for (const auto& [by, cy] : y.terms()) {
      const Monomial B = by.uppers;
      const int d = by.lower;
      const Rational coef = cx * cy;
      // xi^A (left d/dxi^c of xi^B) d/dxi^d
      const Monomial cbit = Monomial(1) << c;
      if (B & cbit) {
        const Monomial rest = B & ~cbit;
        int s = merge_sign(A, rest);
        if (s != 0) {
          if (std::popcount(B & (cbit - 1)) & 1) s = -s;
          r.add_term({A | rest, d}, s > 0 ? coef : Rational(-coef));
        }
      }
      // - (xi^A right d/dxi^d) xi^B d/dxi^c
      const Monomial dbit = Monomial(1) << d;
      if (A & dbit) {
        const Monomial rest = A & ~dbit;
        int s = merge_sign(rest, B);
        if (s != 0) {
          if (std::popcount(A >> (d + 1)) & 1) s = -s;
          r.add_term({rest | B, c}, s > 0 ? Rational(-coef) : coef);
        }
      }
    }
  }
  return r;
}

EndOp to_endop(const WElement& x) {
  EndOp op(x.n());
  for (const auto& [b, c] : x.terms()) op += k_op(x.n(), indices_of(b.uppers), b.lower).scaled(c);
  return op;
}

WElement euler(int n) {
  WElement x(n);
  for (int a = 0; a < n; ++a) x += WElement::k(n, {a}, a);
  return x;
}

WElement k_trace(int n, int a) {
  WElement x(n);
  for (int b = 0; b < n; ++b)
    if (b != a) x += WElement::k(n, {a, b}, b);
  return x;
}

WElement s_hat(const std::vector<int>& uppers, int lower, int n) {
  WElement x = WElement::k(n, uppers, lower);
  const int p = static_cast<int>(uppers.size());
  if (p == 0 || x.is_zero()) return x;
  // Work with the canonical order so the trace correction matches x's sign.
  std::vector<int> sorted = uppers;
  std::sort(sorted.begin(), sorted.end());
  const Rational sign = x.terms().begin()->second;
  for (int k = 0; k < p; ++k) {
    if (sorted[k] != lower) continue;
    std::vector<int> rest = sorted;
    rest.erase(rest.begin() + k);
    const int position = k + 1;
    Rational coef(((p - position) & 1) ? -1 : 1, n - p + 1);
    coef *= sign;
    for (int d = 0; d < n; ++d) {
      std::vector<int> up = rest;
      up.push_back(d);
      x -= WElement::k(n, up, d).scaled(coef);
    }
  }
  return x;
}

GrassmannElement divergence(const WElement& x) {
  GrassmannElement g(x.n());
  for (const auto& [b, c] : x.terms())
    g += contract(b.lower, GrassmannElement::monomial(x.n(), b.uppers, c));
  return g;
}

std::vector<WElement> s_basis(int n, int level) {
  const WIndex idx = WIndex::level(n, level);
  RowSpace space(idx.dim());
  std::vector<WElement> out;
  for (const auto& b : w_basis(n, level)) {
    WElement s = s_hat(indices_of(b.uppers), b.lower, n);
    if (s.is_zero()) continue;
    if (space.insert(idx.vectorize(s))) out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------

WIndex::WIndex(int n, std::vector<WBasisElement> basis) : n_(n), basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) lookup_.emplace(basis_[i], i);
}

WIndex WIndex::full(int n) {
  std::vector<WBasisElement> all;
  for (int level = 1; level >= 1 - n; --level) {
    auto part = w_basis(n, level);
    all.insert(all.end(), part.begin(), part.end());
  }
  return WIndex(n, std::move(all));
}

WIndex WIndex::level(int n, int level) { return WIndex(n, w_basis(n, level)); }

std::optional<std::size_t> WIndex::index_of(const WBasisElement& b) const {
  auto it = lookup_.find(b);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

SparseVector WIndex::vectorize(const WElement& x) const {
  std::vector<SparseVector::Entry> entries;
  entries.reserve(x.terms().size());
  for (const auto& [b, c] : x.terms()) {
    auto it = lookup_.find(b);
    if (it == lookup_.end()) throw std::out_of_range("element outside index: " + to_string(b));
    entries.emplace_back(it->second, c);
  }
  return SparseVector(basis_.size(), std::move(entries));
}

WElement WIndex::element(const SparseVector& v) const {
  WElement x(n_);
  for (const auto& [i, c] : v.entries()) x.add_term(basis_.at(i), c);
  return x;
}

std::map<GeneratorSymbol, WElement> chevalley_assignment(int n) {
  if (n < 3 || n > kMaxGrassmann)
    throw std::invalid_argument("chevalley_assignment needs 3 <= n <= 12");
  const int r = n - 1;
  std::map<GeneratorSymbol, WElement> g;
  g[GeneratorSymbol::e(0)] = WElement::k(n, {}, 0);
  g[GeneratorSymbol::h(0)] = euler(n) - WElement::k(n, {0}, 0);
  g[GeneratorSymbol::f0(0)] = k_trace(n, 0);
  for (int i = 1; i <= r; ++i) {
    g[GeneratorSymbol::e(i)] = WElement::k(n, {i - 1}, i);
    g[GeneratorSymbol::f(i)] = WElement::k(n, {i}, i - 1);
    g[GeneratorSymbol::h(i)] = WElement::k(n, {i - 1}, i - 1) - WElement::k(n, {i}, i);
    if (i >= 2)
      g[GeneratorSymbol::f0(i)] = WElement::k(n, {0, i - 1}, i - 1) - WElement::k(n, {0, i}, i);
  }
  return g;
}

} // namespace superpres
