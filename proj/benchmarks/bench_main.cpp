#include "superpres/en_realization.hpp"
#include "superpres/roots.hpp"
#include "superpres/sparse.hpp"
#include "superpres/theorem.hpp"
#include "superpres/wn.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace superpres;

static void BM_WBracketAllPairs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<WElement> basis;
  const WIndex idx = WIndex::full(n);
  for (const auto& b : idx.basis()) basis.push_back(WElement::basis(n, b));
  for (auto _ : state)
    for (const auto& x : basis)
      for (const auto& y : basis) benchmark::DoNotOptimize(w_bracket(x, y));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(basis.size() * basis.size()));
}
BENCHMARK(BM_WBracketAllPairs)->DenseRange(3, 5);

static void BM_Rref(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> val(-5, 5);
  SparseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<SparseVector::Entry> e;
    for (std::size_t j = 0; j < dim; ++j) e.emplace_back(j, Rational(val(rng)));
    m.push_row(SparseVector(dim, e));
  }
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(32)->Arg(64);

static void BM_RootDecomposition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(root_decomposition(AlgebraKind::W, n));
}
BENCHMARK(BM_RootDecomposition)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_MainTheorem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_main_theorem(n));
}
BENCHMARK(BM_MainTheorem)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_EnRelations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_en_relations(n));
}
BENCHMARK(BM_EnRelations)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
