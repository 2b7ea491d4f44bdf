#include "superpres/grassmann.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace superpres {

int degree(Monomial m) { return std::popcount(m); }

Monomial monomial_of(const std::vector<int>& sorted_indices) {
  Monomial m = 0;
  int prev = -1;
  for (int i : sorted_indices) {
    if (i <= prev || i < 0 || i >= kMaxGrassmann)
      throw std::invalid_argument("monomial indices must be strictly increasing and in range");
    m |= Monomial(1) << i;
    prev = i;
  }
  return m;
}

std::vector<int> indices_of(Monomial m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

std::string monomial_name(Monomial m) {
  if (m == 0) return "E";
  std::string s;
  for (int i : indices_of(m)) s += "x" + std::to_string(i);
  return s;
}

int merge_sign(Monomial a, Monomial b) {
  if (a & b) return 0;
  int swaps = 0;
  for (Monomial rest = b; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

void check_grassmann_rank(int n) {
  if (n < 0 || n > kMaxGrassmann)
    throw std::invalid_argument("Grassmann rank must lie in 0.." + std::to_string(kMaxGrassmann));
}

// ---------------------------------------------------------------------------

GrassmannElement GrassmannElement::monomial(int n, Monomial m, const Rational& c) {
  GrassmannElement x(n);
  if (m >> n) throw std::invalid_argument("monomial index out of range");
  x.add_term(m, c);
  return x;
}

GrassmannElement GrassmannElement::product(int n, const std::vector<int>& indices) {
  GrassmannElement x = monomial(n, 0);
  for (int i : indices) {
    if (i < 0 || i >= n) throw std::invalid_argument("generator index out of range");
    x = gr_mul(x, monomial(n, Monomial(1) << i));
  }
  return x;
}

Rational GrassmannElement::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GrassmannElement::add_term(Monomial m, const Rational& c) {
  if (superpres::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (superpres::is_zero(it->second)) terms_.erase(it);
  }
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("Grassmann rank mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("Grassmann rank mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& o) const {
  GrassmannElement r = *this;
  return r += o;
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& o) const {
  GrassmannElement r = *this;
  return r -= o;
}

GrassmannElement GrassmannElement::scaled(const Rational& c) const {
  GrassmannElement r(n_);
  if (superpres::is_zero(c)) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

std::optional<int> GrassmannElement::parity() const {
  std::optional<int> p;
  for (const auto& [m, c] : terms_) {
    const int q = superpres::parity(m);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p;
}

std::string to_string(const GrassmannElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << '*' << monomial_name(m);
  }
  return os.str();
}

GrassmannElement gr_mul(const GrassmannElement& x, const GrassmannElement& y) {
  if (x.n() != y.n()) throw std::invalid_argument("Grassmann rank mismatch");
  GrassmannElement r(x.n());
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      const int s = merge_sign(a, b);
      if (s == 0) continue;
      Rational c = ca * cb;
      if (s < 0) c = -c;
      r.add_term(a | b, c);
    }
  return r;
}

GrassmannElement contract(int b, const GrassmannElement& x) {
  if (b < 0 || b >= x.n()) throw std::invalid_argument("contraction index out of range");
  const Monomial bit = Monomial(1) << b;
  GrassmannElement r(x.n());
  for (const auto& [m, c] : x.terms()) {
    if (!(m & bit)) continue;
    const bool odd = std::popcount(m & (bit - 1)) & 1;
    r.add_term(m & ~bit, odd ? Rational(-c) : c);
  }
  return r;
}

GrassmannElement contract_right(int b, const GrassmannElement& x) {
  if (b < 0 || b >= x.n()) throw std::invalid_argument("contraction index out of range");
  const Monomial bit = Monomial(1) << b;
  GrassmannElement r(x.n());
  for (const auto& [m, c] : x.terms()) {
    if (!(m & bit)) continue;
    const bool odd = std::popcount(m >> (b + 1)) & 1;
    r.add_term(m & ~bit, odd ? Rational(-c) : c);
  }
  return r;
}

// ---------------------------------------------------------------------------

EndOp EndOp::identity(int n) {
  EndOp op(n);
  for (Monomial m = 0; m < (Monomial(1) << n); ++m)
    op.columns_.emplace(m, GrassmannElement::monomial(n, m));
  return op;
}

EndOp EndOp::left_mul(const GrassmannElement& x) {
  EndOp op(x.n());
  for (Monomial m = 0; m < (Monomial(1) << x.n()); ++m)
    op.set_column(m, gr_mul(x, GrassmannElement::monomial(x.n(), m)));
  return op;
}

GrassmannElement EndOp::column(Monomial m) const {
  auto it = columns_.find(m);
  return it == columns_.end() ? GrassmannElement(n_) : it->second;
}

void EndOp::set_column(Monomial m, GrassmannElement value) {
  if (value.n() != n_) throw std::invalid_argument("Grassmann rank mismatch");
  if (value.is_zero())
    columns_.erase(m);
  else
    columns_[m] = std::move(value);
}

GrassmannElement EndOp::apply(const GrassmannElement& x) const {
  if (x.n() != n_) throw std::invalid_argument("Grassmann rank mismatch");
  GrassmannElement r(n_);
  for (const auto& [m, c] : x.terms()) {
    auto it = columns_.find(m);
    if (it == columns_.end()) continue;
    for (const auto& [t, v] : it->second.terms()) r.add_term(t, c * v);
  }
  return r;
}

EndOp& EndOp::operator+=(const EndOp& o) {
  if (o.n_ != n_) throw std::invalid_argument("Grassmann rank mismatch");
  for (const auto& [m, col] : o.columns_) {
    auto it = columns_.find(m);
    if (it == columns_.end()) {
      columns_.emplace(m, col);
    } else {
      it->second += col;
      if (it->second.is_zero()) columns_.erase(it);
    }
  }
  return *this;
}

EndOp EndOp::operator+(const EndOp& o) const {
  EndOp r = *this;
  return r += o;
}

EndOp EndOp::operator-(const EndOp& o) const {
  EndOp r = *this;
  return r += o.scaled(Rational(-1));
}

EndOp EndOp::scaled(const Rational& c) const {
  EndOp r(n_);
  if (superpres::is_zero(c)) return r;
  for (const auto& [m, col] : columns_) r.columns_.emplace(m, col.scaled(c));
  return r;
}

std::optional<int> EndOp::parity() const {
  std::optional<int> p;
  for (const auto& [m, col] : columns_) {
    auto q = col.parity();
    if (!q) return std::nullopt;
    const int shift = *q ^ superpres::parity(m);
    if (p && *p != shift) return std::nullopt;
    p = shift;
  }
  return p.value_or(0);
}

EndOp k_op(int n, const std::vector<int>& uppers, int lower) {
  check_grassmann_rank(n);
  if (lower < 0 || lower >= n) throw std::invalid_argument("k_op: lower index out of range");
  const auto prefix = GrassmannElement::product(n, uppers);
  EndOp op(n);
  if (prefix.is_zero()) return op;
  for (Monomial m = 0; m < (Monomial(1) << n); ++m) {
    auto d = contract(lower, GrassmannElement::monomial(n, m));
    if (!d.is_zero()) op.set_column(m, gr_mul(prefix, d));
  }
  return op;
}

EndOp end_compose(const EndOp& f, const EndOp& g) {
  if (f.n() != g.n()) throw std::invalid_argument("Grassmann rank mismatch");
  EndOp r(f.n());
  for (const auto& [m, col] : g.columns()) r.set_column(m, f.apply(col));
  return r;
}

EndOp end_supercommutator(const EndOp& f, const EndOp& g) {
  const auto pf = f.parity();
  const auto pg = g.parity();
  if (!pf || !pg) throw std::invalid_argument("supercommutator needs homogeneous operators");
  EndOp fg = end_compose(f, g);
  EndOp gf = end_compose(g, f);
  return (*pf & *pg) ? fg + gf : fg - gf;
}

} // namespace superpres
