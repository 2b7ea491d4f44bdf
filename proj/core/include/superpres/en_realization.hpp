#pragma once

#include "superpres/cartan.hpp"
#include "superpres/generators.hpp"
#include "superpres/grassmann.hpp"
#include "superpres/report.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace superpres {

/// Hom(Lambda, End Lambda) on the monomial basis: m E -> value. Missing
/// monomials map to zero.
using LevelMap = std::map<Monomial, EndOp>;

/// Element of the local superalgebra u(Lambda) (levels -1, 0, 1) or a formal
/// combination of brackets at levels +-2. The identity E of the first copy of
/// Lambda is odd, so x E has parity |x| + 1.
struct UElement {
  int n = 0;
  std::optional<int> level;  // nullopt only for the untyped zero
  GrassmannElement up;       // level 1: up E
  EndOp op;                  // level 0
  LevelMap down;             // level -1
  std::vector<std::tuple<Rational, GrassmannElement, GrassmannElement>> up_pairs;  // level 2
  std::vector<std::tuple<Rational, LevelMap, LevelMap>> down_pairs;                 // level -2

  static UElement zero(int n);
  static UElement level1(const GrassmannElement& x);
  static UElement level0(const EndOp& op);
  static UElement level_minus1(int n, LevelMap m);

  /// Parity of a homogeneous element; 0 for zero.
  int parity() const;
  /// Literal zero of the stored data (pairs are not reduced).
  bool is_trivially_zero() const;

  UElement operator+(const UElement& o) const;
  UElement scaled(const Rational& c) const;
};

/// Bracket of u(Lambda) extended to the formal levels +-2 where a relation
/// needs them. Throws std::invalid_argument outside that range.
UElement u_bracket(const UElement& x, const UElement& y);

/// F_abc(x E) = 3 (K_[a K_b x) K_c] + (-1)^|x| (K_a K_b K_c x) L.
LevelMap f_abc(int a, int b, int c, int n);

/// Value of a level -1 map on an arbitrary x E.
EndOp apply_level_map(const LevelMap& m, const GrassmannElement& x);

/// Images of e_a, f_a, h_a, f_0a of W(E_n), 4 <= n <= 8.
std::map<GeneratorSymbol, UElement> en_generator_images(int n);

/// Zero test in the minimal algebra. Levels -1, 0, 1 and -2 are exact; at
/// level 2 the element is bracketed with every F_abc, which is necessary but
/// not sufficient.
bool vanishes(const UElement& x);

/// [h_a, e_b] = lambda_ab e_b read off from the images.
IntMatrix recovered_eigenvalue_matrix(int n);

/// All relations of relation_set(E_n) vanish on the images; the eigenvalue
/// matrix equals the E_n Cartan matrix; the A-chain agrees with the W(n)
/// operators. 4 <= n <= 8.
Report verify_en_relations(int n);

} // namespace superpres
