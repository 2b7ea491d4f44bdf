#include "superpres/weyl.hpp"

#include "superpres/theorem.hpp"

#include <stdexcept>

namespace superpres {

GeneratorAutomorphism weyl_automorphism(int i, int n) {
  if (n < 3 || n > 12) throw std::invalid_argument("weyl_automorphism: n must lie in [3, 12]");
  const int r = n - 1;
  if (i < 1 || i > r) throw std::invalid_argument("weyl_automorphism: i must lie in 1..n-1");
  const CartanMatrix B = build_cartan(Series::A, r);
  using G = GeneratorSymbol;
  GeneratorAutomorphism w;
  w.i = i;
  w.n = n;
  auto entry = [&](int a) {
    const int b = B(i, a);
    if (a != i && b != 0 && b != -1) throw std::logic_error("unexpected Cartan entry");
    return b;
  };
  for (int a = 0; a <= r; ++a) {
    if (a == i)
      w.image[G::e(a)] = {word({G::f(a)}, Rational(-1))};
    else if (entry(a) == -1)
      // The odd e_0 needs the opposite sign for [e_0', f_0a'] = h_a'.
      w.image[G::e(a)] = {word({G::e(i), G::e(a)}, Rational(a == 0 ? -1 : 1))};
    else
      w.image[G::e(a)] = {word({G::e(a)})};
    w.image[G::h(a)] = {word({G::h(a)})};
    if (B(a, i) != 0) w.image[G::h(a)].push_back(word({G::h(i)}, Rational(-B(a, i))));
  }
  for (int a = 1; a <= r; ++a) {
    if (a == i)
      w.image[G::f(a)] = {word({G::e(a)}, Rational(-1))};
    else if (entry(a) == -1)
      w.image[G::f(a)] = {word({G::f(i), G::f(a)}, Rational(-1))};
    else
      w.image[G::f(a)] = {word({G::f(a)})};
  }
  for (int a : f0_indices(r)) {
    if (i == 1) {
      w.image[G::f0(a)] = {word({G::f(1), G::f0(a)})};
    } else {
      w.image[G::f0(a)] = {word({G::f0(a)})};
      if (B(a, i) != 0) w.image[G::f0(a)].push_back(word({G::f0(i)}, Rational(-B(a, i))));
    }
  }
  return w;
}

std::map<GeneratorSymbol, WElement> transform_assignment(
    const GeneratorAutomorphism& w, const std::map<GeneratorSymbol, WElement>& assignment) {
  std::map<GeneratorSymbol, WElement> out;
  for (const auto& [g, words] : w.image) {
    WElement x(w.n);
    for (const auto& t : words) x += evaluate_word(t, assignment, w_bracket);
    out.emplace(g, std::move(x));
  }
  return out;
}

Report verify_weyl_invariance(int n) {
  if (n < 3 || n > 5) throw std::invalid_argument("verify_weyl_invariance: n must lie in [3, 5]");
  const int r = n - 1;
  Report report;
  report.title = "weyl n=" + std::to_string(n);
  const auto base = chevalley_assignment(n);
  auto relations = relation_set(build_cartan(Series::A, r));
  const auto ideal = ideal_relations(Series::A, r);
  relations.insert(relations.end(), ideal.begin(), ideal.end());

  for (int i = 1; i <= r; ++i) {
    const auto w = weyl_automorphism(i, n);
    const auto once = transform_assignment(w, base);
    Report rel = evaluate_relations(once, relations);
    rel.title = "w" + std::to_string(i);
    report.merge(rel);

    const auto twice = transform_assignment(w, once);
    std::string failure;
    for (const auto& [g, x] : base) {
      const WElement& y = twice.at(g);
      if (!(y == x || y == -x) && failure.empty()) failure = to_string(g) + " -> " + to_string(y);
    }
    report.add("w" + std::to_string(i) + "/square", failure.empty(), failure);
  }

  std::string failure;
  for (int a : f0_indices(r)) {
    const WElement x = evaluate_word(
        word({GeneratorSymbol::f(1), GeneratorSymbol::e(2), GeneratorSymbol::f0(a)}), base, w_bracket);
    if (!x.is_zero() && failure.empty()) failure = "a=" + std::to_string(a) + ": " + to_string(x);
  }
  report.add("[f1,[e2,f0a]] = 0", failure.empty(), failure);
  return report;
}

} // namespace superpres
