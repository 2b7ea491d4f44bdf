#include "doctest.h"

#include "superpres/relations.hpp"
#include "superpres/wn.hpp"

#include <set>

using namespace superpres;

namespace {

using G = GeneratorSymbol;

WElement eval_w(const RelationExpr& r, const std::map<G, WElement>& g, int n) {
  return evaluate(r, g, [](const WElement& x, const WElement& y) { return w_bracket(x, y); },
                  WElement(n));
}

std::size_t count_family(const std::vector<RelationExpr>& rs, const std::string& family) {
  std::size_t c = 0;
  for (const auto& r : rs) c += r.family == family;
  return c;
}

} // namespace

TEST_CASE("relation_set enumeration for r = 2") {
  auto rs = relation_set(build_cartan(Series::A, 2));
  CHECK(count_family(rs, "cartan-he") == 9);
  CHECK(count_family(rs, "cartan-hf") == 6);
  CHECK(count_family(rs, "cartan-ef") == 6);
  CHECK(count_family(rs, "serre-e") == 6);
  CHECK(count_family(rs, "serre-f") == 2);
  CHECK(count_family(rs, "e0-f0") == 2);
  CHECK(count_family(rs, "h-f0") == 6);
  CHECK(count_family(rs, "e1-f0") == 2);
  CHECK(count_family(rs, "double-e-f0") == 6);
  CHECK(count_family(rs, "double-f-f0") == 4);
  CHECK(count_family(rs, "ef-f0") == 2);
  CHECK(rs.size() == 51);
  std::set<std::string> labels;
  for (const auto& r : rs) labels.insert(r.label);
  CHECK(labels.count("[e0,[e0,e1]]") == 1);
  CHECK(labels.count("[e0,e2]") == 1);
}

TEST_CASE("relations are homogeneous") {
  for (auto [s, r] : {std::pair{Series::A, 2}, {Series::A, 5}, {Series::D, 5}, {Series::E, 6}}) {
    for (const auto& rel : relation_set(build_cartan(s, r))) CHECK(rel.is_homogeneous());
    for (const auto& rel : ideal_relations(s, r)) {
      CHECK(rel.is_homogeneous());
      CHECK(rel.terms.front().level() == -2);
    }
  }
  auto rs = relation_set(build_cartan(Series::A, 2));
  for (const auto& rel : rs)
    if (rel.family == "e0-f0") {
      CHECK(rel.terms[0].multidegree() == std::pair{1, 1});
      CHECK(rel.terms[1].multidegree() == std::pair{0, 0});
    }
}

TEST_CASE("ideal relation families") {
  auto a2 = ideal_relations(Series::A, 2);
  CHECK(a2.size() == 3);
  for (const auto& r : a2) CHECK(r.family == "f0-f0");
  CHECK(count_family(ideal_relations(Series::A, 4), "f0-f1-f0") == 3);
  CHECK(count_family(ideal_relations(Series::D, 5), "f0-f1-f0") == 0);
  CHECK(count_family(ideal_relations(Series::E, 6), "f0-f1-f0") == 0);
  CHECK(count_family(ideal_relations(Series::E, 6), "f02-f00") == 4);
}

TEST_CASE("all relations vanish in W(n)") {
  for (int n = 3; n <= 5; ++n) {
    auto g = chevalley_assignment(n);
    auto rs = relation_set(build_cartan(Series::A, n - 1));
    auto ideal = ideal_relations(Series::A, n - 1);
    rs.insert(rs.end(), ideal.begin(), ideal.end());
    for (const auto& r : rs) {
      INFO(to_string(r));
      CHECK(eval_w(r, g, n).is_zero());
    }
  }
}

TEST_CASE("missing symbols are reported") {
  std::map<G, WElement> partial{{G::e(0), WElement::k(3, {}, 0)}};
  auto r = relation_set(build_cartan(Series::A, 2)).front();
  CHECK_THROWS_AS(eval_w(r, partial, 3), MissingSymbol);
}

TEST_CASE("[e_a,f_b] for a,b >= 2 follows from ad e0 on [e_i,[f_j,f0a]]") {
  for (int n = 4; n <= 5; ++n) {
    auto g = chevalley_assignment(n);
    auto B = build_cartan(Series::A, n - 1);
    for (int i = 2; i < n; ++i)
      for (int j = 2; j < n; ++j)
        for (int a : f0_indices(n - 1)) {
          auto inner = w_bracket(g[G::e(i)], w_bracket(g[G::f(j)], g[G::f0(a)]));
          auto moved = w_bracket(g[G::e(i)], w_bracket(g[G::f(j)], g[G::h(a)]));
          CHECK(w_bracket(g[G::e(0)], inner) == moved);
          CHECK(moved == g[G::h(j)].scaled(Rational(i == j ? B(a, j) : 0)));
        }
  }
}
