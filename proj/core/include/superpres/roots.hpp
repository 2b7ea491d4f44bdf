#pragma once

#include "superpres/cartan.hpp"
#include "superpres/rational.hpp"
#include "superpres/report.hpp"

#include <string>
#include <vector>

namespace superpres {

enum class AlgebraKind { W, S };

std::string to_string(AlgebraKind a);

struct RootEntry {
  RootVector root;  // coefficients over alpha_0..alpha_{n-1}
  int level = 0;
  int multiplicity = 0;
  Rational length_sq;
};

/// Joint eigenspaces of ad h_0..ad h_{n-1} on W(n) or S(n), found by exact
/// kernel splitting one h at a time. The zero eigenspace (the Cartan
/// subalgebra) is left out. Sorted by level descending, then by root.
std::vector<RootEntry> root_decomposition(AlgebraKind algebra, int n);

/// Dimension of the zero eigenspace: n for W(n), n - 1 for S(n).
std::size_t cartan_dimension(AlgebraKind algebra, int n);

/// Every level -k root of W(n) has length k - k^2 or 2 + k - k^2; level 1 is null.
Report check_root_lengths(int n);

/// Multiplicity totals, mult(-alpha_0) = n - 1, level-1 roots, and Weyl
/// invariance of the root multiset at every level.
Report verify_root_atlas(int n);

} // namespace superpres
