#pragma once

#include "superpres/cartan.hpp"
#include "superpres/report.hpp"
#include "superpres/wn.hpp"

#include <vector>

namespace superpres {

/// Positive root alpha_k + ... + alpha_l of the chain k..l inside A_{n-1},
/// with root vectors built as e = [e_l,[...,[e_{k+1},e_k]]] and
/// f = [[[f_k,f_{k+1}],...],f_l] in W(n).
struct ChainRoot {
  int first = 0;
  int last = 0;
  RootVector root;
  WElement e;
  WElement f;
  int height() const { return last - first + 1; }
};

/// Positive roots of g' (nodes 2..n-1).
std::vector<ChainRoot> reduced_positive_roots(int n);

/// f_{0 alpha} = sum of f_{0m} over the nodes of alpha.
WElement f0_of_root(int n, const ChainRoot& alpha);

/// Instances of the additional relations, the three-part lemma on positive
/// roots of g', the Chevalley-basis identity, the vanishing of
/// [e_alpha, f_{0 beta}] for level-1 roots alpha, and the intertwiner phi
/// from g' onto the span of the f_{0a}. 3 <= n <= 6.
Report verify_propositions(int n);

} // namespace superpres
