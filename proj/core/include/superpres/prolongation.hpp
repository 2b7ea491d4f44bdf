#pragma once

#include "superpres/generators.hpp"
#include "superpres/sparse.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace superpres {

/// Images of the basis vectors of one space under a linear map.
using LinearImages = std::vector<SparseVector>;

/// G_{-1} + G_0 + G_1 with the brackets among its pieces, in coordinates.
/// Table entry [i][j] is the coordinate vector of the bracket of basis element
/// i of the first space with basis element j of the second.
struct LocalPart {
  std::vector<int> parity_m1, parity_0, parity_1;
  std::vector<LinearImages> br_0_1;   // [G_0, G_1]  -> G_1
  std::vector<LinearImages> br_0_m1;  // [G_0, G_-1] -> G_-1
  std::vector<LinearImages> br_1_m1;  // [G_1, G_-1] -> G_0
  std::vector<LinearImages> br_0_0;   // [G_0, G_0]  -> G_0

  std::size_t dim_m1() const { return parity_m1.size(); }
  std::size_t dim_0() const { return parity_0.size(); }
  std::size_t dim_1() const { return parity_1.size(); }
};

/// Local part of W(n) on the w_basis orderings of levels 1, 0, -1.
LocalPart w_local_part(int n);
/// Local part of sl(1|n) on E_a, G^a_b, F^a.
LocalPart sl1n_local_part(int n);

/// Replaces the bases of G_{-1} and G_1. Row i of each matrix holds the old
/// coordinates of new basis vector i. Rows may only mix vectors of equal
/// parity; throws std::invalid_argument otherwise or when singular.
LocalPart change_basis(const LocalPart& local, const std::vector<std::vector<Rational>>& p_m1,
                       const std::vector<std::vector<Rational>>& p_1);

/// First super-Jacobi failure among basis triples whose brackets stay inside
/// the local part, described as text; nullopt when consistent.
std::optional<std::string> local_jacobi_failure(const LocalPart& local);

/// One level of a graded algebra produced by prolongation.
struct GradedComponent {
  int level = 0;
  std::vector<int> parity;            // per basis vector
  std::vector<LinearImages> ad_g1;    // per G_1 basis vector: into level + 1
  std::vector<LinearImages> ad_g0;    // per G_0 basis vector: into this level
  std::vector<LinearImages> ad_gm1;   // per G_-1 basis vector: into level - 1

  std::size_t dim() const { return parity.size(); }
};

/// Levels 1, 0, -1, ..., -depth of the minimal graded algebra with the given
/// local part. Level -(k+1) is realized as the span of the maps
/// e -> [[e,x],v] + (-1)^{|e||x|} [x,[e,v]] from G_1 to G_{-k}.
/// Throws std::invalid_argument when the local part violates super-Jacobi.
std::vector<GradedComponent> minimal_prolongation(const LocalPart& local, int depth);

/// No nonzero vector of a level k <= -1 component is killed by all of ad G_1.
bool is_transitive(const GradedComponent& c);

/// Dimension of the degree-|level| part of the free Lie superalgebra on
/// generators of the given parities (0 even, 1 odd). Supports |level| <= 3.
std::size_t free_level_dim(const std::vector<int>& parities, int level);
std::size_t free_level_dim(const std::vector<GeneratorSymbol>& gens, int level);

/// Number of canonical K-tilde symbols with p upper indices: fully
/// antisymmetric uppers when b is not among them, antisymmetric in the first
/// p-1 when b = a_p. Returns 0 for p > n; throws for p < 3.
long ktilde_span(int n, int p);

} // namespace superpres
