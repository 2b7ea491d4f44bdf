#pragma once

#include "superpres/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superpres {

/// Largest supported number of Grassmann generators.
inline constexpr int kMaxGrassmann = 12;

/// Monomial xi^{c_1}...xi^{c_q} with c_1 < ... < c_q, stored as a bitmask.
/// The empty mask is the identity E.
using Monomial = std::uint32_t;

int degree(Monomial m);
inline int parity(Monomial m) { return degree(m) & 1; }
Monomial monomial_of(const std::vector<int>& sorted_indices);
std::vector<int> indices_of(Monomial m);
std::string monomial_name(Monomial m);

/// Sign of xi^A xi^B after sorting, or 0 when A and B overlap.
int merge_sign(Monomial a, Monomial b);

void check_grassmann_rank(int n);

/// Element of the Grassmann algebra on n generators.
class GrassmannElement {
public:
  GrassmannElement() = default;
  explicit GrassmannElement(int n) : n_(n) { check_grassmann_rank(n); }
  static GrassmannElement monomial(int n, Monomial m, const Rational& c = Rational(1));
  /// Product xi^{i_1}...xi^{i_k} in the given (not necessarily sorted) order.
  static GrassmannElement product(int n, const std::vector<int>& indices);

  int n() const { return n_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(Monomial m) const;

  void add_term(Monomial m, const Rational& c);
  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  GrassmannElement operator+(const GrassmannElement& o) const;
  GrassmannElement operator-(const GrassmannElement& o) const;
  GrassmannElement scaled(const Rational& c) const;

  /// 0 or 1 when homogeneous; nullopt for zero or mixed parity.
  std::optional<int> parity() const;

  friend bool operator==(const GrassmannElement&, const GrassmannElement&) = default;

private:
  int n_ = 0;
  std::map<Monomial, Rational> terms_;
};

std::string to_string(const GrassmannElement& x);

GrassmannElement gr_mul(const GrassmannElement& x, const GrassmannElement& y);

/// K_b: left derivative with respect to xi^b.
GrassmannElement contract(int b, const GrassmannElement& x);

/// Right derivative with respect to xi^b.
GrassmannElement contract_right(int b, const GrassmannElement& x);

/// Linear operator on the Grassmann algebra, stored column by column over the
/// monomial basis. Zero columns are omitted.
class EndOp {
public:
  EndOp() = default;
  explicit EndOp(int n) : n_(n) { check_grassmann_rank(n); }

  static EndOp identity(int n);
  static EndOp left_mul(const GrassmannElement& x);

  int n() const { return n_; }
  const std::map<Monomial, GrassmannElement>& columns() const { return columns_; }
  bool is_zero() const { return columns_.empty(); }

  GrassmannElement column(Monomial m) const;
  void set_column(Monomial m, GrassmannElement value);

  GrassmannElement apply(const GrassmannElement& x) const;

  EndOp& operator+=(const EndOp& o);
  EndOp operator+(const EndOp& o) const;
  EndOp operator-(const EndOp& o) const;
  EndOp scaled(const Rational& c) const;

  /// 0 or 1 if every stored column shifts parity uniformly; 0 for the zero
  /// operator; nullopt when inhomogeneous.
  std::optional<int> parity() const;

  friend bool operator==(const EndOp&, const EndOp&) = default;

private:
  int n_ = 0;
  std::map<Monomial, GrassmannElement> columns_;
};

/// xi^{a_1}...xi^{a_p} d/dxi^b as an operator. Repeated uppers give zero.
EndOp k_op(int n, const std::vector<int>& uppers, int lower);

EndOp end_compose(const EndOp& f, const EndOp& g);

/// f g - (-1)^{|f||g|} g f. Throws std::invalid_argument on inhomogeneous input.
EndOp end_supercommutator(const EndOp& f, const EndOp& g);

} // namespace superpres
