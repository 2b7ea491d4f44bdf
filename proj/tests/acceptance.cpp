// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "superpres/en_realization.hpp"
#include "superpres/parallel.hpp"
#include "superpres/properties.hpp"
#include "superpres/propositions.hpp"
#include "superpres/roots.hpp"
#include "superpres/tables.hpp"
#include "superpres/theorem.hpp"
#include "superpres/weyl.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

using namespace superpres;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(const Report& r) {
    for (const auto& c : r.checks)
      if (!c.passed) {
        if (ok) detail = r.title + ": " + c.name + " (" + c.detail + ")";
        ok = false;
      }
  }
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  std::optional<double> limit_s;
  std::function<Outcome()> body;
};

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Outcome grading() {
  Outcome o;
  for (int n = 3; n <= 6; ++n) {
    o.require(verify_grading_tables(n));
    long w = 0, s = 0;
    for (const auto& row : dims_table("w", n).rows) w += std::get<long>(row.back());
    for (const auto& row : dims_table("s", n).rows) s += std::get<long>(row.back());
    for (int p = 0; p <= n; ++p) {
      const auto& rows = dims_table("w", n).rows;
      const bool found = std::any_of(rows.begin(), rows.end(), [&](const auto& row) {
        return std::get<long>(row[0]) == 1 - p && std::get<long>(row[1]) == n * binom(n, p);
      });
      o.require(found, "W(" + std::to_string(n) + ") level " + std::to_string(1 - p));
    }
    o.require(w == n * (1L << n), "total dim W(" + std::to_string(n) + ") = " + std::to_string(w));
    o.require(s == (n - 1) * (1L << n) + 1, "total dim S(" + std::to_string(n) + ") = " + std::to_string(s));
  }
  return o;
}

Outcome relations() {
  Outcome o;
  for (int n = 3; n <= 6; ++n) o.require(verify_relations(n));
  return o;
}

Outcome oracle() {
  Outcome o;
  for (int n = 3; n <= 5; ++n) o.require(verify_operator_oracle(n));
  return o;
}

Outcome psi_embedding() {
  Outcome o;
  for (int n = 3; n <= 5; ++n) o.require(verify_psi(n));
  return o;
}

// W(3): (level, root, multiplicity, squared length).
const std::vector<std::tuple<int, std::vector<int>, int, int>> kW3Roots{
    {1, {1, 0, 0}, 1, 0},      {1, {1, 1, 0}, 1, 0},      {1, {1, 1, 1}, 1, 0},
    {0, {0, 1, 0}, 1, 2},      {0, {0, 0, 1}, 1, 2},      {0, {0, 1, 1}, 1, 2},
    {0, {0, -1, 0}, 1, 2},     {0, {0, 0, -1}, 1, 2},     {0, {0, -1, -1}, 1, 2},
    {-1, {-1, 0, 1}, 1, 2},    {-1, {-1, 0, -1}, 1, 2},   {-1, {-1, -2, -1}, 1, 2},
    {-1, {-1, 0, 0}, 2, 0},    {-1, {-1, -1, 0}, 2, 0},   {-1, {-1, -1, -1}, 2, 0},
    {-2, {-2, -1, 0}, 1, -2},  {-2, {-2, -1, -1}, 1, -2}, {-2, {-2, -2, -1}, 1, -2},
};

Outcome root_atlas() {
  Outcome o;
  const auto roots = root_decomposition(AlgebraKind::W, 3);
  o.require(roots.size() == kW3Roots.size(), "W(3) has " + std::to_string(roots.size()) + " roots");
  for (const auto& [level, root, mult, len] : kW3Roots) {
    const auto it = std::find_if(roots.begin(), roots.end(), [&](const RootEntry& e) { return e.root.coeffs == root; });
    const bool match = it != roots.end() && it->level == level && it->multiplicity == mult && it->length_sq == len;
    o.require(match, "W(3) root " + to_string(RootVector{root}));
  }
  for (int n = 3; n <= 6; ++n) {
    o.require(verify_root_atlas(n));
    o.require(check_root_lengths(n));
  }
  return o;
}

Outcome main_theorem() {
  Outcome o;
  const auto c = level_two_count(3);
  o.require(c.free_dim == 45 && c.ideal_dim == 42 && c.target_dim == 3,
            "n=3 level -2: " + std::to_string(c.free_dim) + " = " + std::to_string(c.ideal_dim) + " + " +
                std::to_string(c.target_dim));
  for (int n = 3; n <= 5; ++n) o.require(verify_main_theorem(n));
  return o;
}

Outcome multiplicities() {
  Outcome o;
  for (int n = 5; n <= 6; ++n) o.require(verify_multiplicity_tables(n));
  return o;
}

Outcome weyl() {
  Outcome o;
  for (int n = 3; n <= 5; ++n) o.require(verify_weyl_invariance(n));
  return o;
}

Outcome propositions() {
  Outcome o;
  for (int n = 4; n <= 5; ++n) o.require(verify_propositions(n));
  return o;
}

Outcome en_realization() {
  Outcome o;
  for (int n : {6, 8}) {
    o.require(verify_en_relations(n));
    o.require(recovered_eigenvalue_matrix(n) == build_cartan(Series::E, n).entries,
              "eigenvalue matrix at n=" + std::to_string(n));
  }
  return o;
}

Outcome properties() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) o.require(verify_super_jacobi(n));
  o.require(verify_rank_nullity(500, 20240101));
  for (int n = 3; n <= 8; ++n) o.require(verify_ktilde(n));
  return o;
}

} // namespace

int main() {
  set_thread_count(std::max(1u, std::thread::hardware_concurrency()));
  const std::vector<Criterion> criteria{
      {1, "grading dimensions", 1.0, grading},
      {2, "relation soundness", 10.0, relations},
      {3, "operator oracle equivalence", 30.0, oracle},
      {4, "psi embedding", 5.0, psi_embedding},
      {5, "root atlas", 30.0, root_atlas},
      {6, "ideal and main theorem", 120.0, main_theorem},
      {7, "multiplicity tables", 10.0, multiplicities},
      {8, "Weyl invariance", 60.0, weyl},
      {9, "propositions and phi", 60.0, propositions},
      {10, "E_n realization", 60.0, en_realization},
      {11, "property suites", std::nullopt, properties},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = !c.limit_s || elapsed < *c.limit_s;
    const bool pass = o.ok && in_time;
    all = all && pass;
    const std::string limit = c.limit_s ? std::to_string(*c.limit_s).substr(0, std::to_string(*c.limit_s).find('.')) + " s" : "none";
    std::printf("%s  %2d  %-28s %8.3f s  (limit %s)", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), elapsed,
                limit.c_str());
    if (!o.ok) std::printf("  %s", o.detail.c_str());
    if (o.ok && !in_time) std::printf("  over time limit");
    std::printf("\n");
  }
  return all ? 0 : 1;
}
