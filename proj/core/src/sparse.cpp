#include "superpres/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace superpres {

// ---------------------------------------------------------------------------
// SparseVector

SparseVector::SparseVector(std::size_t dim, std::vector<Entry> entries) : dim_(dim) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& [idx, val] : entries) {
    if (idx >= dim_) throw std::out_of_range("sparse vector index out of range");
    if (!entries_.empty() && entries_.back().first == idx) {
      entries_.back().second += val;
      if (superpres::is_zero(entries_.back().second)) entries_.pop_back();
    } else if (!superpres::is_zero(val)) {
      entries_.emplace_back(idx, std::move(val));
    }
  }
}

SparseVector SparseVector::from_dense(std::span<const Rational> values) {
  SparseVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!superpres::is_zero(values[i])) v.entries_.emplace_back(i, values[i]);
  return v;
}

SparseVector SparseVector::unit(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("unit vector index out of range");
  SparseVector v(dim);
  v.entries_.emplace_back(index, Rational(1));
  return v;
}

Rational SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Rational(0);
}

std::vector<Rational> SparseVector::to_dense() const {
  std::vector<Rational> out(dim_);
  for (const auto& [i, v] : entries_) out[i] = v;
  return out;
}

SparseVector& SparseVector::axpy(const Rational& a, const SparseVector& x) {
  if (x.dim_ != dim_) throw std::invalid_argument("axpy dimension mismatch");
  if (superpres::is_zero(a) || x.entries_.empty()) return *this;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + x.entries_.size());
  auto i = entries_.begin();
  auto j = x.entries_.begin();
  while (i != entries_.end() || j != x.entries_.end()) {
    if (j == x.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      merged.push_back(std::move(*i));
      ++i;
    } else if (i == entries_.end() || j->first < i->first) {
      merged.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Rational s = i->second + a * j->second;
      if (!superpres::is_zero(s)) merged.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

SparseVector SparseVector::scaled(const Rational& a) const {
  SparseVector out(dim_);
  if (superpres::is_zero(a)) return out;
  out.entries_.reserve(entries_.size());
  for (const auto& [i, v] : entries_) out.entries_.emplace_back(i, a * v);
  return out;
}

SparseVector SparseVector::operator+(const SparseVector& o) const {
  SparseVector out = *this;
  out.axpy(Rational(1), o);
  return out;
}

SparseVector SparseVector::operator-(const SparseVector& o) const {
  SparseVector out = *this;
  out.axpy(Rational(-1), o);
  return out;
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(std::size_t ncols, std::vector<SparseVector> rows)
    : ncols_(ncols) {
  for (auto& r : rows) push_row(std::move(r));
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.push_row(SparseVector::unit(n, i));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows,
                                      std::size_t ncols) {
  SparseMatrix m(ncols);
  for (const auto& r : rows) {
    if (r.size() != ncols) throw std::invalid_argument("ragged dense matrix");
    m.push_row(SparseVector::from_dense(r));
  }
  return m;
}

void SparseMatrix::push_row(SparseVector row) {
  if (row.dim() != ncols_) throw std::invalid_argument("row dimension mismatch");
  rows_.push_back(std::move(row));
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  if (v.dim() != ncols_) throw std::invalid_argument("apply dimension mismatch");
  std::vector<SparseVector::Entry> out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational acc(0);
    const auto& a = rows_[r].entries();
    const auto& b = v.entries();
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (i->first < j->first) ++i;
      else if (j->first < i->first) ++j;
      else {
        acc += i->second * j->second;
        ++i;
        ++j;
      }
    }
    if (!superpres::is_zero(acc)) out.emplace_back(r, std::move(acc));
  }
  return SparseVector(rows_.size(), std::move(out));
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

namespace {

using IntRow = std::vector<std::pair<std::size_t, BigInt>>;

// Scales a rational row to a primitive integer row with positive lead.
IntRow primitive(const SparseVector& v) {
  IntRow out;
  if (v.is_zero()) return out;
  BigInt l(1);
  for (const auto& [i, q] : v.entries()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  out.reserve(v.nnz());
  BigInt g(0);
  for (const auto& [i, q] : v.entries()) {
    BigInt x = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    out.emplace_back(i, std::move(x));
  }
  if (sgn(out.front().second) < 0) g = -g;
  for (auto& [i, x] : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  BigInt g(0);
  for (const auto& [i, x] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1)
    for (auto& [i, x] : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// row <- p * row - q * piv, where p, q are the leads (divided by their gcd).
void eliminate(IntRow& row, const IntRow& piv) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), row.front().second.get_mpz_t(), piv.front().second.get_mpz_t());
  BigInt p = piv.front().second / g;
  BigInt q = row.front().second / g;
  IntRow out;
  out.reserve(row.size() + piv.size());
  auto i = row.begin();
  auto j = piv.begin();
  while (i != row.end() || j != piv.end()) {
    if (j == piv.end() || (i != row.end() && i->first < j->first)) {
      out.emplace_back(i->first, p * i->second);
      ++i;
    } else if (i == row.end() || j->first < i->first) {
      out.emplace_back(j->first, -q * j->second);
      ++j;
    } else {
      BigInt s = p * i->second - q * j->second;
      if (sgn(s) != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  row = std::move(out);
  make_primitive(row);
}

SparseVector to_rational_row(const IntRow& row, std::size_t ncols) {
  std::vector<SparseVector::Entry> entries;
  entries.reserve(row.size());
  const BigInt& lead = row.front().second;
  for (const auto& [i, x] : row) {
    Rational q(x, lead);
    q.canonicalize();
    entries.emplace_back(i, std::move(q));
  }
  return SparseVector(ncols, std::move(entries));
}

} // namespace

RrefResult rref(const SparseMatrix& m) {
  const std::size_t ncols = m.ncols();
  std::vector<IntRow> active;
  for (const auto& r : m.rows())
    if (!r.is_zero()) active.push_back(primitive(r));

  std::vector<IntRow> echelon;
  while (!active.empty()) {
    std::size_t col = ncols;
    for (const auto& r : active) col = std::min(col, r.front().first);
    std::size_t best = active.size();
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (active[k].front().first != col) continue;
      if (best == active.size() ||
          mpz_cmpabs(active[k].front().second.get_mpz_t(), active[best].front().second.get_mpz_t()) < 0)
        best = k;
    }
    IntRow piv = std::move(active[best]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
    std::vector<IntRow> next;
    next.reserve(active.size());
    for (auto& r : active) {
      if (r.front().first == col) eliminate(r, piv);
      if (!r.empty()) next.push_back(std::move(r));
    }
    active = std::move(next);
    echelon.push_back(std::move(piv));
  }

  RrefResult out;
  out.rref = SparseMatrix(ncols);
  std::vector<SparseVector> rows;
  rows.reserve(echelon.size());
  for (const auto& r : echelon) {
    out.pivots.push_back(r.front().first);
    rows.push_back(to_rational_row(r, ncols));
  }
  // Back substitution, bottom-up.
  for (std::size_t i = rows.size(); i-- > 0;) {
    const std::size_t p = out.pivots[i];
    for (std::size_t j = 0; j < i; ++j) {
      Rational c = rows[j].at(p);
      if (!superpres::is_zero(c)) rows[j].axpy(-c, rows[i]);
    }
  }
  for (auto& r : rows) out.rref.push_row(std::move(r));
  return out;
}

std::size_t rank(const SparseMatrix& m) { return rref(m).rank(); }

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  const auto red = rref(m);
  const std::size_t n = m.ncols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<SparseVector::Entry> entries;
    entries.emplace_back(f, Rational(1));
    for (std::size_t i = 0; i < red.rank(); ++i) {
      Rational c = red.rref.row(i).at(f);
      if (!superpres::is_zero(c)) entries.emplace_back(red.pivots[i], -c);
    }
    basis.emplace_back(n, std::move(entries));
  }
  return basis;
}

std::size_t span_dim(std::span<const SparseVector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t dim = vectors.front().dim();
  SparseMatrix m(dim);
  for (const auto& v : vectors) {
    if (v.dim() != dim) throw std::invalid_argument("span_dim: dimension mismatch");
    m.push_row(v);
  }
  return rank(m);
}

std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b) {
  if (b.dim() != m.nrows()) throw std::invalid_argument("solve: rhs dimension mismatch");
  const std::size_t n = m.ncols();
  SparseMatrix aug(n + 1);
  for (std::size_t r = 0; r < m.nrows(); ++r) {
    auto entries = m.row(r).entries();
    Rational br = b.at(r);
    if (!superpres::is_zero(br)) entries.emplace_back(n, br);
    aug.push_row(SparseVector(n + 1, std::move(entries)));
  }
  const auto red = rref(aug);
  std::vector<SparseVector::Entry> x;
  for (std::size_t i = 0; i < red.rank(); ++i) {
    if (red.pivots[i] == n) return std::nullopt;
    Rational c = red.rref.row(i).at(n);
    if (!superpres::is_zero(c)) x.emplace_back(red.pivots[i], c);
  }
  return SparseVector(n, std::move(x));
}

// ---------------------------------------------------------------------------
// RowSpace

RowSpace::RowSpace(std::size_t ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}

SparseVector RowSpace::reduce(const SparseVector& v) const {
  if (v.dim() != ncols_) throw std::invalid_argument("RowSpace: dimension mismatch");
  SparseVector r = v;
  std::size_t pos = 0;
  while (pos < r.entries().size()) {
    const auto& [col, val] = r.entries()[pos];
    const auto row = pivot_row_[col];
    if (row < 0) {
      ++pos;
      continue;
    }
    Rational c = -val;
    r.axpy(c, rows_[static_cast<std::size_t>(row)]);
    // entries before pos are untouched: pivot rows start at their pivot.
  }
  return r;
}

bool RowSpace::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.is_zero()) return false;
  Rational lead = r.entries().front().second;
  std::size_t col = r.entries().front().first;
  r = r.scaled(1 / lead);
  pivot_row_[col] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

RrefResult RowSpace::rref() const {
  return superpres::rref(SparseMatrix(ncols_, rows_));
}

std::optional<std::vector<Rational>> coordinates_in(const RrefResult& basis,
                                                    const SparseVector& v) {
  std::vector<Rational> coords(basis.rank());
  SparseVector rest = v;
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    coords[i] = v.at(basis.pivots[i]);
    rest.axpy(-coords[i], basis.rref.row(i));
  }
  if (!rest.is_zero()) return std::nullopt;
  return coords;
}

} // namespace superpres
