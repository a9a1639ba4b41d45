#pragma once

#include "lineal/dfs_tree.hpp"
#include "lineal/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lineal {

/// MinLLT: a DFS tree with at most k leaves.
/// MaxLLT: a DFS tree with at least k leaves.
/// DualMinLLT: a DFS tree with at least k internal vertices.
/// DualMaxLLT: a DFS tree with at most k internal vertices.
enum class Variant { MinLLT, MaxLLT, DualMinLLT, DualMaxLLT };

std::string_view to_string(Variant v);
/// Accepts "min", "max", "dual-min", "dual-max" and the "-llt" spellings.
std::optional<Variant> parse_variant(std::string_view text);

struct ProblemInstance {
    Graph graph;
    std::size_t k = 0;
    Variant variant = Variant::MinLLT;
};

/// Does a DFS tree with `internal` internal vertices on `n` vertices satisfy
/// the variant's threshold?
bool meets_threshold(Variant variant, std::size_t k, std::size_t n, std::size_t internal);

struct PendantDeleted {
    Vertex kept_under;
    Vertex removed;
    friend bool operator==(const PendantDeleted&, const PendantDeleted&) = default;
};

struct UnlabeledDeleted {
    Vertex removed;
    friend bool operator==(const UnlabeledDeleted&, const UnlabeledDeleted&) = default;
};

using ReductionEvent = std::variant<PendantDeleted, UnlabeledDeleted>;

/// Events are in input vertex ids, in application order. Kernel vertex i is
/// input vertex survivors[i].
struct ReductionTrace {
    std::vector<ReductionEvent> events;
    std::vector<Vertex> survivors;

    std::size_t pendant_deletions() const;
    std::size_t unlabeled_deletions() const;
    /// Input id -> kernel id, kNoVertex for deleted vertices.
    std::vector<Vertex> original_to_kernel(std::size_t original_size) const;
};

struct Reduction {
    Graph graph;
    VertexSet cover;  // the input cover, relabelled into the output graph
    ReductionTrace trace;
};

/// Maximum kernel size s^2(s-1) + 3s for a cover of size s.
std::uint64_t kernel_vertex_bound(std::uint64_t cover_size);

/// Keeps the two lowest-id pendants of each cover vertex that has more.
Reduction rule1(const Graph& g, const VertexSet& cover);

/// Labels the min(|W_uv|, 2s) lowest-id common neighbors of every cover pair
/// {u, v} and deletes every unlabeled non-cover vertex with two or more
/// cover neighbors.
Reduction rule2(const Graph& g, const VertexSet& cover);

/// rule1 then rule2. The output preserves the set of internal-vertex counts
/// realised by DFS trees and has at most kernel_vertex_bound(|cover|)
/// vertices when |cover| >= 1.
Reduction reduce_with_cover(const Graph& g, const VertexSet& cover);

/// Rebuilds a DFS tree of the original graph from one of the kernel,
/// with the same number of internal vertices: rule-2 deletions are hung below
/// their deepest neighbor, rule-1 deletions below their unique neighbor.
RootedTree lift_tree(const Graph& original, const ReductionTrace& trace, const RootedTree& kernel_tree);

struct Decided {
    bool answer = false;
    std::string reason;
};

struct Reduced {
    ProblemInstance instance;
    ReductionTrace trace;
};

struct KernelStats {
    std::size_t n_before = 0;
    std::size_t n_after = 0;
    std::size_t cover_size = 0;
    std::uint64_t bound = 0;
    std::size_t rule1_deleted = 0;
    std::size_t rule2_deleted = 0;
    bool reduction_ran = false;
};

struct KernelOutcome {
    std::variant<Decided, Reduced> result;
    KernelStats stats;

    bool decided() const { return std::holds_alternative<Decided>(result); }
    const Decided& decision() const { return std::get<Decided>(result); }
    const Reduced& reduced() const { return std::get<Reduced>(result); }
};

struct KernelOptions {
    /// Root of the initial search tree for the dual-min kernel.
    Vertex dual_min_root = 0;
};

KernelOutcome kernel_min_llt(const ProblemInstance& inst);
KernelOutcome kernel_max_llt(const ProblemInstance& inst);
KernelOutcome kernel_dual_min(const ProblemInstance& inst, const KernelOptions& options = {});
KernelOutcome kernel_dual_max(const ProblemInstance& inst);

/// Dispatches on inst.variant.
KernelOutcome kernelize(const ProblemInstance& inst, const KernelOptions& options = {});

} // namespace lineal
