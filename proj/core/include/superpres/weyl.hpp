#pragma once

#include "superpres/generators.hpp"
#include "superpres/relations.hpp"
#include "superpres/report.hpp"
#include "superpres/wn.hpp"

#include <map>
#include <vector>

namespace superpres {

/// Fundamental Weyl reflection w_i acting on the generators as a table of
/// signed bracket words.
struct GeneratorAutomorphism {
  int i = 0;
  int n = 0;
  std::map<GeneratorSymbol, std::vector<BracketWord>> image;
};

/// 1 <= i <= n - 1; i = 0 is rejected.
GeneratorAutomorphism weyl_automorphism(int i, int n);

/// New images g -> image(g) evaluated under `assignment`.
std::map<GeneratorSymbol, WElement> transform_assignment(
    const GeneratorAutomorphism& w, const std::map<GeneratorSymbol, WElement>& assignment);

/// For every w_i: all relations and ideal relations vanish on the transformed
/// generators, w_i^2 returns each generator up to sign, and
/// [f_1,[e_2,f_0a]] = 0. 3 <= n <= 5.
Report verify_weyl_invariance(int n);

} // namespace superpres
