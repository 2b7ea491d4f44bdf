#include "superpres/properties.hpp"

#include "superpres/parallel.hpp"
#include "superpres/sparse.hpp"
#include "superpres/wn.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

namespace superpres {

namespace {

std::vector<WElement> all_basis(int n) {
  std::vector<WElement> out;
  const WIndex idx = WIndex::full(n);
  for (const auto& b : idx.basis()) out.push_back(WElement::basis(n, b));
  return out;
}

int sign_of(const WElement& x, const WElement& y) { return (*x.parity() & *y.parity()) ? -1 : 1; }

// Empty on success, otherwise a description of the first failing identity.
std::string triple_failure(const WElement& x, const WElement& y, const WElement& z) {
  const WElement xy = w_bracket(x, y);
  if (!(xy == w_bracket(y, x).scaled(Rational(-sign_of(x, y)))))
    return "antisymmetry fails for " + to_string(x) + ", " + to_string(y);
  if (!xy.is_zero() && *xy.level() != *x.level() + *y.level())
    return "level of [" + to_string(x) + ", " + to_string(y) + "]";
  const WElement lhs = w_bracket(x, w_bracket(y, z));
  const WElement rhs = w_bracket(xy, z) + w_bracket(y, w_bracket(x, z)).scaled(Rational(sign_of(x, y)));
  if (!(lhs == rhs))
    return "Jacobi fails for " + to_string(x) + ", " + to_string(y) + ", " + to_string(z) + ": residual " +
           to_string(lhs - rhs);
  return {};
}

std::string first_nonempty(const std::vector<std::string>& v) {
  for (const auto& s : v)
    if (!s.empty()) return s;
  return {};
}

SparseMatrix random_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim(1, 8), val(-3, 3), zero(0, 2);
  const std::size_t rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
  SparseMatrix m(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<SparseVector::Entry> e;
    for (std::size_t j = 0; j < cols; ++j)
      if (zero(rng) == 0) e.emplace_back(j, make_rational(val(rng), 1 + zero(rng)));
    m.push_row(SparseVector(cols, e));
  }
  return m;
}

} // namespace

Report verify_operator_oracle(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("verify_operator_oracle: n must lie in [1, 6]");
  Report report;
  report.title = "operator oracle W(" + std::to_string(n) + ")";
  const auto basis = all_basis(n);
  std::vector<EndOp> ops(basis.size());
  parallel_for(basis.size(), [&](std::size_t i) { ops[i] = to_endop(basis[i]); });
  std::vector<std::string> failures(basis.size());
  parallel_for(basis.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < basis.size() && failures[i].empty(); ++j)
      if (!(to_endop(w_bracket(basis[i], basis[j])) == end_supercommutator(ops[i], ops[j])))
        failures[i] = "[" + to_string(basis[i]) + ", " + to_string(basis[j]) + "]";
  });
  const std::string f = first_nonempty(failures);
  report.add("structure constants equal operator supercommutators", f.empty(),
             f.empty() ? std::to_string(basis.size() * basis.size()) + " pairs" : f);
  return report;
}

Report verify_super_jacobi(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("verify_super_jacobi: n must lie in [1, 4]");
  Report report;
  report.title = "super-Jacobi W(" + std::to_string(n) + ")";
  const auto basis = all_basis(n);
  const std::size_t d = basis.size();
  std::vector<std::string> failures(d * d);
  parallel_for(d * d, [&](std::size_t k) {
    const auto& x = basis[k / d];
    const auto& y = basis[k % d];
    for (const auto& z : basis) {
      failures[k] = triple_failure(x, y, z);
      if (!failures[k].empty()) return;
    }
  });
  const std::string f = first_nonempty(failures);
  report.add("antisymmetry, level additivity and Jacobi on all triples", f.empty(),
             f.empty() ? std::to_string(d * d * d) + " triples" : f);
  return report;
}

Report verify_super_jacobi_sampled(int n, std::size_t samples, std::uint64_t seed) {
  Report report;
  report.title = "super-Jacobi W(" + std::to_string(n) + ") sampled";
  const auto basis = all_basis(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::vector<std::array<std::size_t, 3>> triples(samples);
  for (auto& t : triples) t = {pick(rng), pick(rng), pick(rng)};
  std::vector<std::string> failures(samples);
  parallel_for(samples, [&](std::size_t k) {
    failures[k] = triple_failure(basis[triples[k][0]], basis[triples[k][1]], basis[triples[k][2]]);
  });
  const std::string f = first_nonempty(failures);
  report.add("antisymmetry, level additivity and Jacobi on random triples", f.empty(),
             f.empty() ? std::to_string(samples) + " triples" : f);
  return report;
}

Report verify_psi(int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("verify_psi: n must lie in [2, 6]");
  Report report;
  report.title = "psi sl(1|" + std::to_string(n) + ")";
  const auto basis = sl1n_basis(n);
  const WIndex idx = WIndex::full(n);
  std::vector<WElement> images(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) images[i] = psi(sl_basis_element(basis[i]), n);
  std::vector<std::string> failures(basis.size());
  parallel_for(basis.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const WElement lhs = psi(sl1n_bracket(sl_basis_element(basis[i]), sl_basis_element(basis[j]), n), n);
      const WElement rhs = w_bracket(images[i], images[j]);
      if (!(lhs == rhs)) {
        failures[i] = "[" + to_string(basis[i]) + ", " + to_string(basis[j]) + "]: residual " + to_string(lhs - rhs);
        return;
      }
    }
  });
  const std::string f = first_nonempty(failures);
  report.add("brackets preserved", f.empty(),
             f.empty() ? std::to_string(basis.size() * basis.size()) + " pairs" : f);
  std::vector<SparseVector> vecs;
  for (const auto& w : images) vecs.push_back(idx.vectorize(w));
  const std::size_t rank = span_dim(vecs);
  report.add("injective", rank == basis.size(),
             std::to_string(rank) + " independent images of " + std::to_string(basis.size()));
  report.add("psi(G) = K", psi(sl_g(n), n) == euler(n));
  return report;
}

Report verify_rank_nullity(std::size_t count, std::uint64_t seed) {
  Report report;
  report.title = "random matrices";
  std::mt19937_64 rng(seed);
  std::size_t rank_nullity = 0, annihilated = 0, idempotent = 0, invariant = 0;
  for (std::size_t t = 0; t < count; ++t) {
    const SparseMatrix m = random_matrix(rng);
    const RrefResult r = rref(m);
    const auto ker = kernel_basis(m);
    if (r.rank() + ker.size() == m.ncols()) ++rank_nullity;
    if (std::all_of(ker.begin(), ker.end(), [&](const SparseVector& v) { return m.apply(v).is_zero(); }))
      ++annihilated;
    if (rref(r.rref).rref == r.rref) ++idempotent;
    auto rows = m.rows();
    std::shuffle(rows.begin(), rows.end(), rng);
    for (auto& row : rows) row = row.scaled(make_rational(-2, 3));
    if (span_dim(rows) == r.rank()) ++invariant;
  }
  auto add = [&](const std::string& name, std::size_t ok) {
    report.add(name, ok == count, std::to_string(ok) + " / " + std::to_string(count));
  };
  add("rank + nullity = columns", rank_nullity);
  add("kernel vectors annihilated", annihilated);
  add("rref idempotent", idempotent);
  add("span invariant under row operations", invariant);
  return report;
}

} // namespace superpres
