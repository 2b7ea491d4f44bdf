#include "superpres/relations.hpp"

#include <sstream>

namespace superpres {

std::string to_string(const GeneratorSymbol& g) {
  switch (g.kind) {
  case GenKind::e: return "e" + std::to_string(g.index);
  case GenKind::f: return "f" + std::to_string(g.index);
  case GenKind::f0: return "f0" + std::to_string(g.index);
  case GenKind::h: return "h" + std::to_string(g.index);
  }
  return "?";
}

int BracketWord::level() const {
  int l = 0;
  for (const auto& g : letters) l += g.level();
  return l;
}

int BracketWord::parity() const {
  int p = 0;
  for (const auto& g : letters) p ^= g.parity();
  return p;
}

std::pair<int, int> BracketWord::multidegree() const {
  std::pair<int, int> d{0, 0};
  for (const auto& g : letters) {
    auto [i, j] = g.multidegree();
    d.first += i;
    d.second += j;
  }
  return d;
}

bool RelationExpr::is_homogeneous() const {
  for (const auto& w : terms)
    if (w.level() != terms.front().level() || w.parity() != terms.front().parity())
      return false;
  return true;
}

std::string to_string(const BracketWord& w) {
  std::string inner = to_string(w.letters.back());
  for (std::size_t i = w.letters.size() - 1; i-- > 0;)
    inner = "[" + to_string(w.letters[i]) + "," + inner + "]";
  if (w.coeff == 1) return inner;
  return to_string(w.coeff) + "*" + inner;
}

std::string to_string(const RelationExpr& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.terms.size(); ++i) os << (i ? " + " : "") << to_string(r.terms[i]);
  os << " = 0";
  return os.str();
}

BracketWord word(std::vector<GeneratorSymbol> letters, const Rational& coeff) {
  return BracketWord{coeff, std::move(letters)};
}

std::vector<int> f0_indices(int r) {
  std::vector<int> out{0};
  for (int a = 2; a <= r; ++a) out.push_back(a);
  return out;
}

std::vector<GeneratorSymbol> all_generators(int r) {
  std::vector<GeneratorSymbol> out;
  for (int a = 0; a <= r; ++a) out.push_back(GeneratorSymbol::e(a));
  for (int a = 1; a <= r; ++a) out.push_back(GeneratorSymbol::f(a));
  for (int a : f0_indices(r)) out.push_back(GeneratorSymbol::f0(a));
  for (int a = 0; a <= r; ++a) out.push_back(GeneratorSymbol::h(a));
  return out;
}

namespace {

using G = GeneratorSymbol;

RelationExpr make(std::string family, std::vector<BracketWord> terms) {
  RelationExpr r;
  r.family = std::move(family);
  r.terms = std::move(terms);
  r.label = to_string(r.terms.front());
  return r;
}

std::vector<BracketWord> with_tail(BracketWord head, int value, const GeneratorSymbol& g) {
  std::vector<BracketWord> t{std::move(head)};
  if (value != 0) t.push_back(word({g}, Rational(-value)));
  return t;
}

} // namespace

std::vector<RelationExpr> relation_set(const CartanMatrix& B) {
  const int r = B.rank;
  const auto f0s = f0_indices(r);
  std::vector<RelationExpr> out;

  for (int a = 0; a <= r; ++a)
    for (int b = 0; b <= r; ++b)
      out.push_back(make("cartan-he", with_tail(word({G::h(a), G::e(b)}), B(a, b), G::e(b))));
  for (int a = 0; a <= r; ++a)
    for (int b = 1; b <= r; ++b)
      out.push_back(make("cartan-hf", with_tail(word({G::h(a), G::f(b)}), -B(a, b), G::f(b))));
  for (int a = 0; a <= r; ++a)
    for (int b = 1; b <= r; ++b)
      out.push_back(make("cartan-ef", with_tail(word({G::e(a), G::f(b)}), a == b ? 1 : 0, G::h(b))));

  for (int a = 0; a <= r; ++a)
    for (int b = 0; b <= r; ++b) {
      if (a == b) continue;
      std::vector<G> letters(1 - B(a, b), G::e(a));
      letters.push_back(G::e(b));
      out.push_back(make("serre-e", {word(letters)}));
    }
  for (int a = 1; a <= r; ++a)
    for (int b = 1; b <= r; ++b) {
      if (a == b) continue;
      std::vector<G> letters(1 - B(a, b), G::f(a));
      letters.push_back(G::f(b));
      out.push_back(make("serre-f", {word(letters)}));
    }

  for (int a : f0s) out.push_back(make("e0-f0", with_tail(word({G::e(0), G::f0(a)}), 1, G::h(a))));
  for (int a = 0; a <= r; ++a)
    for (int b : f0s)
      out.push_back(make("h-f0", with_tail(word({G::h(a), G::f0(b)}), -B(a, 0), G::f0(b))));
  for (int a : f0s) out.push_back(make("e1-f0", {word({G::e(1), G::f0(a)})}));
  for (int a = 0; a <= r; ++a)
    for (int b : f0s) out.push_back(make("double-e-f0", {word({G::e(a), G::e(a), G::f0(b)})}));
  for (int a = 1; a <= r; ++a)
    for (int b : f0s) out.push_back(make("double-f-f0", {word({G::f(a), G::f(a), G::f0(b)})}));
  for (int i = 2; i <= r; ++i)
    for (int j = 2; j <= r; ++j)
      for (int a : f0s) {
        const int value = i == j ? B(a, j) : 0;
        out.push_back(make("ef-f0", with_tail(word({G::e(i), G::f(j), G::f0(a)}), value, G::f0(j))));
      }
  return out;
}

std::vector<RelationExpr> ideal_relations(Series series, int r) {
  const auto f0s = f0_indices(r);
  std::vector<RelationExpr> out;
  for (std::size_t x = 0; x < f0s.size(); ++x)
    for (std::size_t y = x; y < f0s.size(); ++y)
      out.push_back(make("f0-f0", {word({G::f0(f0s[x]), G::f0(f0s[y])})}));
  if (series == Series::A)
    for (int i = 3; i <= r; ++i)
      for (int j = i; j <= r; ++j)
        out.push_back(make("f0-f1-f0", {word({G::f0(i), G::f(1), G::f0(j)})}));
  for (int i = 3; i <= r; ++i)
    out.push_back(make("f02-f00", {word({G::f0(2), G::f(1), G::f0(i)}),
                                   word({G::f0(0), G::f(1), G::f0(i)}, Rational(-1))}));
  return out;
}

} // namespace superpres
