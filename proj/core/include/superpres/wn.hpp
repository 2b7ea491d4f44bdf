#pragma once

#include "superpres/generators.hpp"
#include "superpres/grassmann.hpp"
#include "superpres/sparse.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superpres {

/// K^{a_1...a_p}_b with a_1 < ... < a_p.
struct WBasisElement {
  Monomial uppers = 0;
  int lower = 0;

  int p() const { return degree(uppers); }
  int level() const { return 1 - p(); }
  int parity() const { return (p() + 1) & 1; }
  /// Weight under the diagonal K^a_a: multiplicity of a among uppers minus [a == lower].
  std::vector<int> weight(int n) const;

  friend auto operator<=>(const WBasisElement&, const WBasisElement&) = default;
};

std::string to_string(const WBasisElement& b);

/// All canonical symbols at `level`, ordered by upper index list, then lower.
std::vector<WBasisElement> w_basis(int n, int level);

/// Sparse rational combination of W(n) basis symbols.
class WElement {
public:
  WElement() = default;
  explicit WElement(int n);
  /// Symbol with uppers in the given order; reordering contributes a sign.
  static WElement k(int n, const std::vector<int>& uppers, int lower);
  static WElement basis(int n, const WBasisElement& b, const Rational& c = Rational(1));

  int n() const { return n_; }
  const std::map<WBasisElement, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const WBasisElement& b) const;

  void add_term(const WBasisElement& b, const Rational& c);
  WElement& operator+=(const WElement& o);
  WElement& operator-=(const WElement& o);
  WElement operator+(const WElement& o) const;
  WElement operator-(const WElement& o) const;
  WElement operator-() const;
  WElement scaled(const Rational& c) const;

  std::optional<int> level() const;
  std::optional<int> parity() const;

  friend bool operator==(const WElement&, const WElement&) = default;

private:
  int n_ = 0;
  std::map<WBasisElement, Rational> terms_;
};

std::string to_string(const WElement& x);

/// Structure-constant bracket of W(n).
WElement w_bracket(const WElement& x, const WElement& y);

/// Derivation-operator image on the Grassmann algebra.
EndOp to_endop(const WElement& x);

/// K = sum_a K^a_a.
WElement euler(int n);
/// K^a = sum_b K^{ab}_b.
WElement k_trace(int n, int a);

/// Traceless combination hat K^{uppers}_lower.
WElement s_hat(const std::vector<int>& uppers, int lower, int n);
/// Divergence sum_c d/dxi^c applied to the coefficient of d/dxi^c.
GrassmannElement divergence(const WElement& x);
/// Basis of S(n) at `level`, chosen greedily from hat K in w_basis order.
std::vector<WElement> s_basis(int n, int level);

/// Global coordinates on W(n) (all levels) or one level of it.
class WIndex {
public:
  WIndex(int n, std::vector<WBasisElement> basis);
  static WIndex full(int n);
  static WIndex level(int n, int level);

  int n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<WBasisElement>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(const WBasisElement& b) const;

  /// Throws std::out_of_range when x has a term outside this index.
  SparseVector vectorize(const WElement& x) const;
  WElement element(const SparseVector& v) const;

private:
  int n_;
  std::vector<WBasisElement> basis_;
  std::map<WBasisElement, std::size_t> lookup_;
};

/// Chevalley-type generators inside W(n), r = n - 1.
std::map<GeneratorSymbol, WElement> chevalley_assignment(int n);

// ---------------------------------------------------------------------------
// sl(1|n) with its 3-grading

enum class SLKind { E, G, F };

struct SLBasisElement {
  SLKind kind = SLKind::E;
  int a = 0;  // E_a, G^a_b, F^a
  int b = 0;  // used by G only

  int level() const { return kind == SLKind::E ? 1 : kind == SLKind::G ? 0 : -1; }
  int parity() const { return kind == SLKind::G ? 0 : 1; }
  friend auto operator<=>(const SLBasisElement&, const SLBasisElement&) = default;
};

std::string to_string(const SLBasisElement& b);

using SLElement = std::map<SLBasisElement, Rational>;

SLElement sl_add(const SLElement& x, const SLElement& y, const Rational& c = Rational(1));
SLElement sl_basis_element(const SLBasisElement& b);
/// All n + n^2 + n basis elements, levels 1, 0, -1.
std::vector<SLBasisElement> sl1n_basis(int n);
/// G = sum_a G^a_a.
SLElement sl_g(int n);

SLElement sl1n_bracket(const SLElement& x, const SLElement& y, int n);
WElement psi(const SLElement& x, int n);

} // namespace superpres
