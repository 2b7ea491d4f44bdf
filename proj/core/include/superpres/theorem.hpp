#pragma once

#include "superpres/relations.hpp"
#include "superpres/report.hpp"
#include "superpres/wn.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace superpres {

/// Evaluates every relation under `assignment` with the W(n) bracket.
/// The report has one check per relation family.
Report evaluate_relations(const std::map<GeneratorSymbol, WElement>& assignment,
                          const std::vector<RelationExpr>& relations);

/// Evaluates every relation in W(n) under chevalley_assignment(n).
/// The report has one check per relation family.
Report verify_relations_in_w(int n, const std::vector<RelationExpr>& relations);

/// relation_set plus ideal_relations(A) in W(n), 3 <= n <= 6.
Report verify_relations(int n);

/// Minimal prolongation of the W(n) local part against dim W_{-k} = n C(n, k+1).
Report verify_prolongation(int n);

/// Level -2 bookkeeping inside the free cover: Sym^2(W_{-1}) versus the
/// submodule generated by the level -2 ideal relations.
struct LevelTwoCount {
  std::size_t free_dim = 0;       // d(d+1)/2, d = dim W_{-1}
  std::size_t ideal_dim = 0;      // span of the relation images under ad g
  std::size_t target_dim = 0;     // dim W_{-2}
  std::size_t bracket_rank = 0;   // rank of Sym^2(W_{-1}) -> W_{-2}
  bool ideal_in_kernel = false;   // every ideal vector brackets to zero
};

LevelTwoCount level_two_count(int n);

Report verify_ideal(int n);

/// verify_relations + verify_prolongation + verify_ideal, 3 <= n <= 5.
Report verify_main_theorem(int n);

/// Recursive bracket [K^{a1 a2}_{a2}, Kt^{a2...ap}_b] starting from
/// Kt^{a1 a2 a3}_b = K^{a1 a2 a3}_b, evaluated in W(n).
WElement ktilde_element(int n, const std::vector<int>& uppers, int lower);

/// Canonical Kt symbols counted against w_basis, and proportionality of each
/// recursive Kt to the K symbol with the same indices, 3 <= p <= n.
Report verify_ktilde(int n);

} // namespace superpres
