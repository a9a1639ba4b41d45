#pragma once

#include "lineal/dfs_tree.hpp"
#include "lineal/kernelize.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lineal {

struct SolverBudget {
    std::uint64_t max_tuple_count = 100'000'000;
    std::chrono::milliseconds time_limit{300'000};
    std::size_t oracle_vertex_limit = default_oracle_limit();
    /// Worker threads for tuple search; the reported tuple and witness do
    /// not depend on this.
    unsigned threads = 1;
};

/// Tuple count or wall-clock budget ran out before an answer was found.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Decision {
    bool answer = false;
    /// A full DFS tree of the solved graph meeting the threshold, when one
    /// was constructed.
    std::optional<RootedTree> witness;
    /// First accepted tuple in lexicographic order (tuple solvers only).
    std::vector<Vertex> accepted_tuple;
    std::uint64_t tuples_examined = 0;
};

/// Partial tree T' = DFS tree of G[tuple] respecting the tuple's order, if
/// it extends to a DFS tree of g keeping all of T' internal.
std::optional<RootedTree> dual_min_tuple_accepts(const Graph& g, std::span<const Vertex> tuple);

/// As above, but the extension must keep every vertex outside the tuple a leaf.
std::optional<RootedTree> dual_max_tuple_accepts(const Graph& g, std::span<const Vertex> tuple);

/// Is there a DFS tree with at least k internal vertices? Tries ordered
/// k-tuples of distinct vertices lexicographically.
Decision solve_dual_min_xp(const Graph& g, std::size_t k, const SolverBudget& budget = {});

/// Is there a DFS tree with at most k internal vertices?
Decision solve_dual_max_xp(const Graph& g, std::size_t k, const SolverBudget& budget = {});

/// Kernelize, then run the tuple solver on the kernel. A witness found on the
/// kernel is lifted back to the input graph.
Decision solve_dual_fpt(const ProblemInstance& inst, const SolverBudget& budget = {});

/// Same, reusing a kernel already computed for `inst`.
Decision solve_dual_fpt(const ProblemInstance& inst, const KernelOutcome& kernel, const SolverBudget& budget = {});

/// Exhaustive enumeration of all DFS trees; the witness is the first
/// qualifying tree in enumeration order. Throws OracleLimitExceeded above
/// budget.oracle_vertex_limit.
Decision solve_exact_oracle(const ProblemInstance& inst, const SolverBudget& budget = {});

} // namespace lineal
