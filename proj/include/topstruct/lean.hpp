#pragma once

#include <cstdint>
#include <ostream>

#include "topstruct/decomposition.hpp"

namespace topstruct {

struct LeanOptions {
    /// Improvement-step limit; 0 means 10 * n^2.
    std::uint64_t max_steps = 0;
    /// One line per improvement step when set.
    std::ostream* trace = nullptr;
};

/// Iterated exchange starting from the trivial decomposition. The result
/// has adhesion < k and no leanness violation; nodes are numbered 1..N.
TreeDecomposition build_k_lean(const Graph& g, int k, Budget& budget, const LeanOptions& options = {});
TreeDecomposition build_k_lean(const Graph& g, int k);

/// One exchange step. Splits the decomposition along a minimum separator
/// between p vertices of V_s and p vertices of V_t, then merges every bag
/// contained in a neighbouring bag into that neighbour.
///
/// Throws NotAViolation unless viol is a genuine violation for td and k.
/// The result has adhesion < k and strictly smaller fatness.
TreeDecomposition improvement_step(const Graph& g, const TreeDecomposition& td, int k, const LeannessViolation& viol);

/// Exhaustive lexicographically fatness-minimal decomposition of adhesion
/// < k. Intended for n <= 9; larger inputs throw PreconditionFailed.
TreeDecomposition build_k_atomic_exact(const Graph& g, int k, Budget& budget);
TreeDecomposition build_k_atomic_exact(const Graph& g, int k);

/// Merges every bag contained in an adjacent bag into that neighbour.
TreeDecomposition prune_redundant_bags(TreeDecomposition td);

}  // namespace topstruct
