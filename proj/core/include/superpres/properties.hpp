#pragma once

#include "superpres/report.hpp"

#include <cstdint>

namespace superpres {

/// w_bracket(x, y) against the supercommutator of the derivation operators,
/// every ordered pair of basis symbols. 1 <= n <= 6.
Report verify_operator_oracle(int n);

/// Super-antisymmetry, level additivity and super-Jacobi on every triple of
/// basis symbols. 1 <= n <= 4.
Report verify_super_jacobi(int n);

/// The same identities on `samples` random triples of basis symbols.
Report verify_super_jacobi_sampled(int n, std::size_t samples, std::uint64_t seed);

/// psi preserves every bracket of sl(1|n) basis elements and is injective.
/// 2 <= n <= 6.
Report verify_psi(int n);

/// rank + nullity = ncols, kernel vectors are annihilated, rref is idempotent,
/// and the row span is invariant under shuffling and scaling, on `count`
/// random rational matrices of size at most 8 x 8.
Report verify_rank_nullity(std::size_t count, std::uint64_t seed);

} // namespace superpres
