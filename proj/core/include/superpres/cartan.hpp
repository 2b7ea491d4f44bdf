#pragma once

#include "superpres/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace superpres {

enum class Series { A, D, E };

std::string to_string(Series s);
Series parse_series(const std::string& text);

using IntMatrix = std::vector<std::vector<int>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Cartan matrix B_{ab} of the superalgebra obtained by attaching an odd
/// null node 0 to node 1 of a simply laced Dynkin diagram of rank r.
/// Node numbering: 1..r-1 form a chain starting at node 1; for D_r node r
/// attaches to r-2, for E_r node r attaches to r-3.
struct CartanMatrix {
  Series series = Series::A;
  int rank = 0;        // rank r of the even part g
  IntMatrix entries;   // (r+1) x (r+1)

  int size() const { return rank + 1; }
  int operator()(int a, int b) const { return entries[a][b]; }

  /// Cartan matrix of g (nodes 1..r, re-indexed from 0).
  IntMatrix even_part() const;
  /// Cartan matrix of g' (nodes 2..r, re-indexed from 0).
  IntMatrix reduced_part() const;
};

CartanMatrix build_cartan(Series series, int r);

Rational determinant(const IntMatrix& m);
RationalMatrix inverse(const IntMatrix& m);

/// Inverse of the A-series matrix B for g = A_{n-1}.
RationalMatrix inverse_cartan_B(int n);

/// Positive root in simple-root coordinates over alpha_0..alpha_r.
struct RootVector {
  std::vector<int> coeffs;

  int height() const;
  RootVector operator+(const RootVector& o) const;
  RootVector operator-(const RootVector& o) const;
  RootVector operator-() const;
  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

std::string to_string(const RootVector& r);

/// Weight stored in simple-root coordinates (rational) over alpha_0..alpha_r.
/// Dynkin labels and the grey-level coefficient are derived views.
struct WeightVector {
  std::vector<Rational> coeffs;

  static WeightVector from_root(const RootVector& r);
  /// Builds k * Lt_0 + sum_i mu_i Lt_i from labels mu_1..mu_r.
  static WeightVector from_labels(const CartanMatrix& B, const Rational& k,
                                  const std::vector<Rational>& labels);

  /// (lambda, alpha_i) for i = 1..r.
  std::vector<Rational> dynkin_labels(const CartanMatrix& B) const;
  /// Coefficient of alpha_0.
  Rational grey_level() const { return coeffs.at(0); }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

Rational inner(const CartanMatrix& B, const RootVector& x, const RootVector& y);
Rational inner(const CartanMatrix& B, const WeightVector& x, const WeightVector& y);

/// lambda - (lambda, alpha_i) alpha_i, 1 <= i <= r.
WeightVector weyl_reflect_weight(const CartanMatrix& B, int i, const WeightVector& w);
RootVector weyl_reflect_root(const CartanMatrix& B, int i, const RootVector& r);

/// Positive roots of the finite simply laced algebra with Cartan matrix A,
/// in simple-root coordinates, ordered by height then lexicographically.
/// Throws std::invalid_argument if A is not positive definite.
std::vector<std::vector<int>> positive_roots(const IntMatrix& A);

/// Positive roots of g = nodes 1..r of B(series, r); alpha_0 coefficient is 0.
std::vector<RootVector> positive_roots(Series series, int r);

/// Weyl vector of A in simple-root coordinates: (rho, alpha_i) = 1.
std::vector<Rational> weyl_vector(const IntMatrix& A);

/// Freudenthal multiplicity of `target` (Dynkin labels) in R(highest).
/// Throws std::invalid_argument if `highest` is not dominant.
int freudenthal_multiplicity(const IntMatrix& A, const std::vector<int>& highest,
                             const std::vector<int>& target);

/// Multiplicities of all dominant weights of R(highest).
std::map<std::vector<int>, int> dominant_weight_multiplicities(
    const IntMatrix& A, const std::vector<int>& highest);

/// Freudenthal recursion over every weight of R(highest), without folding by
/// the Weyl group. Keys are Dynkin labels.
std::map<std::vector<int>, int> all_weight_multiplicities(
    const IntMatrix& A, const std::vector<int>& highest);

/// Weyl dimension formula.
BigInt weyl_dimension(const IntMatrix& A, const std::vector<int>& highest);

/// (lambda, lambda) = -((n-1)/n) k^2 + (mu, mu) for g = A_{n-1};
/// mu given by its n-1 Dynkin labels.
Rational weight_norm(int k, const std::vector<Rational>& mu, int n);

/// Inner product of two A-type weights given by Dynkin labels.
Rational label_inner(const IntMatrix& A, const std::vector<Rational>& x,
                     const std::vector<Rational>& y);

IntMatrix cartan_A(int rank);

} // namespace superpres
