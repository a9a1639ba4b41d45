#include "lineal/kernelize.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace lineal {

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::MinLLT: return "min";
        case Variant::MaxLLT: return "max";
        case Variant::DualMinLLT: return "dual-min";
        case Variant::DualMaxLLT: return "dual-max";
    }
    return "unknown";
}

std::optional<Variant> parse_variant(std::string_view text) {
    if (text == "min" || text == "min-llt") return Variant::MinLLT;
    if (text == "max" || text == "max-llt") return Variant::MaxLLT;
    if (text == "dual-min" || text == "dual-min-llt") return Variant::DualMinLLT;
    if (text == "dual-max" || text == "dual-max-llt") return Variant::DualMaxLLT;
    return std::nullopt;
}

bool meets_threshold(Variant variant, std::size_t k, std::size_t n, std::size_t internal) {
    const std::size_t leaves = n - internal;
    switch (variant) {
        case Variant::MinLLT: return leaves <= k;
        case Variant::MaxLLT: return leaves >= k;
        case Variant::DualMinLLT: return internal >= k;
        case Variant::DualMaxLLT: return internal <= k;
    }
    return false;
}

std::size_t ReductionTrace::pendant_deletions() const {
    return static_cast<std::size_t>(std::count_if(events.begin(), events.end(), [](const ReductionEvent& e) {
        return std::holds_alternative<PendantDeleted>(e);
    }));
}

std::size_t ReductionTrace::unlabeled_deletions() const {
    return events.size() - pendant_deletions();
}

std::vector<Vertex> ReductionTrace::original_to_kernel(std::size_t original_size) const {
    std::vector<Vertex> map(original_size, kNoVertex);
    for (std::size_t i = 0; i < survivors.size(); ++i) map[survivors[i]] = static_cast<Vertex>(i);
    return map;
}

std::uint64_t kernel_vertex_bound(std::uint64_t s) {
    if (s == 0) return 0;
    return s * s * (s - 1) + 3 * s;
}

namespace {

Vertex removed_vertex(const ReductionEvent& e) {
    return std::visit([](const auto& ev) { return ev.removed; }, e);
}

void require_cover(const Graph& g, const VertexSet& cover) {
    if (!std::is_sorted(cover.begin(), cover.end()) ||
        std::adjacent_find(cover.begin(), cover.end()) != cover.end()) {
        throw std::invalid_argument("cover must be sorted and duplicate-free");
    }
    if (!cover.empty() && cover.back() >= g.vertex_count())
        throw std::invalid_argument("cover names a vertex outside the graph");
    if (!is_vertex_cover(g, cover)) throw std::invalid_argument("set is not a vertex cover");
}

Reduction apply_deletions(const Graph& g, const VertexSet& cover, std::vector<ReductionEvent> events) {
    std::vector<bool> gone(g.vertex_count(), false);
    for (const auto& e : events) gone[removed_vertex(e)] = true;

    Reduction out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!gone[v]) out.trace.survivors.push_back(v);
    out.graph = g.induced(out.trace.survivors);
    auto to_new = out.trace.original_to_kernel(g.vertex_count());
    for (Vertex c : cover) out.cover.push_back(to_new[c]);
    out.trace.events = std::move(events);
    return out;
}

} // namespace

Reduction rule1(const Graph& g, const VertexSet& cover) {
    require_cover(g, cover);
    std::vector<ReductionEvent> events;
    for (Vertex v : cover) {
        VertexSet pendants = pendant_set(g, cover, v);
        for (std::size_t i = 2; i < pendants.size(); ++i) events.emplace_back(PendantDeleted{v, pendants[i]});
    }
    return apply_deletions(g, cover, std::move(events));
}

Reduction rule2(const Graph& g, const VertexSet& cover) {
    require_cover(g, cover);
    const std::size_t quota = 2 * cover.size();
    const VertexSet outside = complement(g, cover);
    std::vector<bool> labeled(g.vertex_count(), false);
    for (std::size_t i = 0; i < cover.size(); ++i) {
        for (std::size_t j = i + 1; j < cover.size(); ++j) {
            VertexSet common = common_neighbors(g, cover[i], cover[j], outside);
            const std::size_t keep = std::min(common.size(), quota);
            for (std::size_t x = 0; x < keep; ++x) labeled[common[x]] = true;
        }
    }
    std::vector<ReductionEvent> events;
    for (Vertex x : outside) {
        // outside is independent, so every neighbor of x lies in the cover
        if (!labeled[x] && g.degree(x) >= 2) events.emplace_back(UnlabeledDeleted{x});
    }
    return apply_deletions(g, cover, std::move(events));
}

Reduction reduce_with_cover(const Graph& g, const VertexSet& cover) {
    Reduction first = rule1(g, cover);
    Reduction second = rule2(first.graph, first.cover);

    Reduction out;
    out.graph = std::move(second.graph);
    out.cover = std::move(second.cover);
    out.trace.events = std::move(first.trace.events);
    for (const auto& e : second.trace.events) {
        out.trace.events.emplace_back(UnlabeledDeleted{first.trace.survivors[removed_vertex(e)]});
    }
    for (Vertex v : second.trace.survivors) out.trace.survivors.push_back(first.trace.survivors[v]);
    return out;
}

RootedTree lift_tree(const Graph& original, const ReductionTrace& trace, const RootedTree& kernel_tree) {
    if (kernel_tree.host_size() != trace.survivors.size() || !kernel_tree.spans_host())
        throw TreeError("kernel tree does not span the kernel");
    const auto& keep = trace.survivors;
    std::vector<Vertex> parent(original.vertex_count(), kNoVertex);
    for (Vertex v = 0; v < keep.size(); ++v) {
        Vertex p = kernel_tree.parent(v);
        if (p != kNoVertex) parent[keep[v]] = keep[p];
    }
    RootedTree tree = RootedTree::from_parents(keep[kernel_tree.root()], std::move(parent), keep);

    // the neighbors of a rule-2 deletion are cover vertices, all of which
    // survive, so one index over the kernel part serves every deletion
    AncestorIndex idx(tree);
    for (auto it = trace.events.rbegin(); it != trace.events.rend(); ++it) {
        if (const auto* ev = std::get_if<UnlabeledDeleted>(&*it)) {
            auto nbrs = original.neighbors(ev->removed);
            Vertex anchor = *std::max_element(nbrs.begin(), nbrs.end(), [&](Vertex a, Vertex b) {
                return idx.depth_key(a) < idx.depth_key(b);
            });
            tree.attach(ev->removed, anchor);
        }
    }
    for (const auto& e : trace.events) {
        if (const auto* ev = std::get_if<PendantDeleted>(&e)) tree.attach(ev->removed, ev->kept_under);
    }
    return tree;
}

namespace {

KernelOutcome decided(bool answer, std::string reason, std::size_t n) {
    KernelOutcome out{Decided{answer, std::move(reason)}, {}};
    out.stats.n_before = out.stats.n_after = n;
    return out;
}

std::optional<KernelOutcome> reject_degenerate(const ProblemInstance& inst) {
    const std::size_t n = inst.graph.vertex_count();
    if (n == 0) return decided(false, "empty graph has no spanning tree", n);
    if (!is_connected(inst.graph)) return decided(false, "disconnected", n);
    return std::nullopt;
}

KernelStats stats_for(const ProblemInstance& inst, const VertexSet& cover, const Reduction& red) {
    KernelStats stats;
    stats.n_before = inst.graph.vertex_count();
    stats.n_after = red.graph.vertex_count();
    stats.cover_size = cover.size();
    stats.bound = kernel_vertex_bound(cover.size());
    stats.rule1_deleted = red.trace.pendant_deletions();
    stats.rule2_deleted = red.trace.unlabeled_deletions();
    // with an empty cover the graph has at most one vertex and nothing to reduce
    stats.reduction_ran = !cover.empty();
    return stats;
}

// Shared by the two vertex-cover kernels: the leaf threshold moves by the
// number of deleted vertices, since internal-count profiles are preserved.
std::pair<KernelOutcome, std::int64_t> leaf_kernel(const ProblemInstance& inst) {
    auto [matching, cover] = greedy_cover(inst.graph);
    Reduction red = reduce_with_cover(inst.graph, cover);
    const auto removed = static_cast<std::int64_t>(inst.graph.vertex_count() - red.graph.vertex_count());
    const std::int64_t k_prime = static_cast<std::int64_t>(inst.k) - removed;
    KernelStats stats = stats_for(inst, cover, red);
    Reduced reduced{ProblemInstance{std::move(red.graph), k_prime > 0 ? static_cast<std::size_t>(k_prime) : 0,
                                    inst.variant},
                    std::move(red.trace)};
    return {KernelOutcome{std::move(reduced), stats}, k_prime};
}

} // namespace

KernelOutcome kernel_min_llt(const ProblemInstance& inst) {
    if (inst.variant != Variant::MinLLT) throw std::invalid_argument("kernel_min_llt needs a MinLLT instance");
    if (auto early = reject_degenerate(inst)) return *early;
    auto [outcome, k_prime] = leaf_kernel(inst);
    if (k_prime < 1) {
        KernelStats stats = outcome.stats;
        return KernelOutcome{Decided{false, "reduced leaf bound " + std::to_string(k_prime) +
                                                " is below one; every DFS tree has a leaf"},
                             stats};
    }
    return outcome;
}

KernelOutcome kernel_max_llt(const ProblemInstance& inst) {
    if (inst.variant != Variant::MaxLLT) throw std::invalid_argument("kernel_max_llt needs a MaxLLT instance");
    if (auto early = reject_degenerate(inst)) return *early;
    auto [outcome, k_prime] = leaf_kernel(inst);
    if (k_prime <= 1) {
        KernelStats stats = outcome.stats;
        return KernelOutcome{Decided{true, "reduced leaf bound " + std::to_string(k_prime) +
                                               " is at most one; every DFS tree has a leaf"},
                             stats};
    }
    return outcome;
}

KernelOutcome kernel_dual_min(const ProblemInstance& inst, const KernelOptions& options) {
    if (inst.variant != Variant::DualMinLLT)
        throw std::invalid_argument("kernel_dual_min needs a DualMinLLT instance");
    if (auto early = reject_degenerate(inst)) return *early;
    if (options.dual_min_root >= inst.graph.vertex_count())
        throw std::invalid_argument("dual-min root outside the graph");

    RootedTree first = dfs_any(inst.graph, options.dual_min_root);
    VertexSet internal = internal_vertices(first);
    if (internal.size() >= inst.k) {
        auto out = decided(true, "initial DFS tree has " + std::to_string(internal.size()) + " internal vertices",
                           inst.graph.vertex_count());
        out.stats.cover_size = internal.size();
        return out;
    }
    // internal vertices of a DFS tree form a vertex cover of size <= k-1
    Reduction red = reduce_with_cover(inst.graph, internal);
    KernelStats stats = stats_for(inst, internal, red);
    return KernelOutcome{Reduced{ProblemInstance{std::move(red.graph), inst.k, inst.variant}, std::move(red.trace)},
                         stats};
}

KernelOutcome kernel_dual_max(const ProblemInstance& inst) {
    if (inst.variant != Variant::DualMaxLLT)
        throw std::invalid_argument("kernel_dual_max needs a DualMaxLLT instance");
    if (auto early = reject_degenerate(inst)) return *early;

    auto [matching, cover] = greedy_cover(inst.graph);
    if (matching.size() > inst.k) {
        auto out = decided(false, "maximal matching of size " + std::to_string(matching.size()) +
                                      " exceeds k, so the vertex cover number does",
                           inst.graph.vertex_count());
        out.stats.cover_size = cover.size();
        return out;
    }
    Reduction red = reduce_with_cover(inst.graph, cover);
    KernelStats stats = stats_for(inst, cover, red);
    return KernelOutcome{Reduced{ProblemInstance{std::move(red.graph), inst.k, inst.variant}, std::move(red.trace)},
                         stats};
}

KernelOutcome kernelize(const ProblemInstance& inst, const KernelOptions& options) {
    switch (inst.variant) {
        case Variant::MinLLT: return kernel_min_llt(inst);
        case Variant::MaxLLT: return kernel_max_llt(inst);
        case Variant::DualMinLLT: return kernel_dual_min(inst, options);
        case Variant::DualMaxLLT: return kernel_dual_max(inst);
    }
    throw std::invalid_argument("unknown variant");
}

} // namespace lineal
