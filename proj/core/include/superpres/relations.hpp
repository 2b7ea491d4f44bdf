#pragma once

#include "superpres/cartan.hpp"
#include "superpres/generators.hpp"
#include "superpres/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superpres {

/// c * [x_1,[x_2,...,[x_{k-1},x_k]...]]; a single letter is the generator itself.
struct BracketWord {
  Rational coeff{1};
  std::vector<GeneratorSymbol> letters;

  int level() const;
  int parity() const;
  std::pair<int, int> multidegree() const;
};

/// Formal rational combination of right-nested words, read as "= 0".
struct RelationExpr {
  std::string family;  // short family id, e.g. "serre-e"
  std::string label;   // instance label, e.g. "[e0,[e0,e1]]"
  std::vector<BracketWord> terms;

  /// Same level and parity across all terms.
  bool is_homogeneous() const;
};

std::string to_string(const BracketWord& w);
std::string to_string(const RelationExpr& r);

/// Word helper: word({a,b,c}, q) = q [a,[b,c]].
BracketWord word(std::vector<GeneratorSymbol> letters, const Rational& coeff = Rational(1));

/// Defining relations of the presentation for the given Cartan matrix, family
/// by family: Cartan-Chevalley, Serre, e0-f0, h-f0, e1-f0, double brackets on
/// f0, and [e_i,[f_j,f_{0a}]].
std::vector<RelationExpr> relation_set(const CartanMatrix& B);

/// Level -2 relations generating the ideal. The D and E variants omit the
/// [f_{0i},[f_1,f_{0j}]] family.
std::vector<RelationExpr> ideal_relations(Series series, int r);

/// Indices a admissible for f_{0a}: 0, 2, 3, ..., r.
std::vector<int> f0_indices(int r);

/// Every generator symbol of rank r, including h_a.
std::vector<GeneratorSymbol> all_generators(int r);

class MissingSymbol : public std::invalid_argument {
public:
  explicit MissingSymbol(const GeneratorSymbol& g)
      : std::invalid_argument("no image assigned to " + to_string(g)) {}
};

/// Structural recursion over the words of `expr`. `bracket(x, y)` must return
/// the bracket in the realization, `zero` is the additive identity and T must
/// provide operator+ and scaled(Rational).
template <class T, class Bracket>
T evaluate_word(const BracketWord& w, const std::map<GeneratorSymbol, T>& assignment,
                Bracket&& bracket) {
  auto image = [&](const GeneratorSymbol& g) -> const T& {
    auto it = assignment.find(g);
    if (it == assignment.end()) throw MissingSymbol(g);
    return it->second;
  };
  if (w.letters.empty()) throw std::invalid_argument("empty bracket word");
  T v = image(w.letters.back());
  for (std::size_t i = w.letters.size() - 1; i-- > 0;) v = bracket(image(w.letters[i]), v);
  return v.scaled(w.coeff);
}

template <class T, class Bracket>
T evaluate(const RelationExpr& expr, const std::map<GeneratorSymbol, T>& assignment,
           Bracket&& bracket, T zero) {
  for (const auto& w : expr.terms) zero = zero + evaluate_word(w, assignment, bracket);
  return zero;
}

} // namespace superpres
