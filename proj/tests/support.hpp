#pragma once

// Test-only oracles. Nothing here calls into the DFS-tree predicates or the
// enumerator under test: ancestor relations are computed by walking parent
// links and trees are found by trying every parent assignment.

#include "lineal/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <vector>

namespace lineal::testing {

using Mask = std::uint32_t;

inline Mask mask_of(std::span<const Vertex> set) {
    Mask m = 0;
    for (Vertex v : set) m |= Mask{1} << v;
    return m;
}

inline VertexSet set_of(Mask m) {
    VertexSet out;
    for (Vertex v = 0; m >> v; ++v)
        if (m >> v & 1u) out.push_back(v);
    return out;
}

inline bool covers_all_edges(const Graph& g, Mask cover) {
    for (auto [u, v] : g.edges())
        if (!(cover >> u & 1u) && !(cover >> v & 1u)) return false;
    return true;
}

/// Every vertex cover of g as a bitmask (n <= 20).
inline std::vector<Mask> all_vertex_covers(const Graph& g) {
    std::vector<Mask> out;
    const Mask limit = Mask{1} << g.vertex_count();
    for (Mask m = 0; m < limit; ++m)
        if (covers_all_edges(g, m)) out.push_back(m);
    return out;
}

inline std::size_t min_vertex_cover_size(const Graph& g) {
    std::size_t best = g.vertex_count();
    for (Mask m : all_vertex_covers(g)) best = std::min<std::size_t>(best, std::popcount(m));
    return best;
}

inline std::vector<VertexSet> minimum_vertex_covers(const Graph& g) {
    const std::size_t tau = min_vertex_cover_size(g);
    std::vector<VertexSet> out;
    for (Mask m : all_vertex_covers(g))
        if (static_cast<std::size_t>(std::popcount(m)) == tau) out.push_back(set_of(m));
    return out;
}

/// Connected graphs on n vertices, one per isomorphism class (n <= 6).
inline std::vector<Graph> connected_graphs_up_to_iso(std::size_t n) {
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<std::vector<Vertex>> perms;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::map<std::pair<Vertex, Vertex>, std::size_t> slot_index;
    for (std::size_t i = 0; i < slots.size(); ++i) slot_index[slots[i]] = i;

    std::set<std::uint64_t> seen;
    std::vector<Graph> out;
    const std::uint64_t limit = std::uint64_t{1} << slots.size();
    for (std::uint64_t code = 0; code < limit; ++code) {
        std::uint64_t canon = code;
        for (const auto& p : perms) {
            std::uint64_t image = 0;
            for (std::size_t i = 0; i < slots.size(); ++i) {
                if (!(code >> i & 1u)) continue;
                auto [a, b] = std::minmax(p[slots[i].first], p[slots[i].second]);
                image |= std::uint64_t{1} << slot_index[{a, b}];
            }
            canon = std::min(canon, image);
            if (canon < code) break;
        }
        if (canon != code || !seen.insert(code).second) continue;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (code >> i & 1u) edges.push_back(slots[i]);
        Graph g = Graph::from_edges(n, edges);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

/// All connected graphs with 1..max_n vertices up to isomorphism.
inline std::vector<Graph> small_connected_corpus(std::size_t max_n) {
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (auto& g : connected_graphs_up_to_iso(n)) out.push_back(std::move(g));
    return out;
}

/// Connected graphs: a random spanning tree plus each other pair with
/// probability p, so density varies with p.
inline Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    std::set<Edge> used;
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
        Vertex a = order[i];
        Vertex b = order[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)];
        used.insert(std::minmax(a, b));
    }
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!used.count({u, v}) && coin(rng)) used.insert({u, v});
    edges.assign(used.begin(), used.end());
    return Graph::from_edges(n, edges);
}

inline std::vector<Graph> random_connected_corpus(std::size_t count, std::size_t min_n, std::size_t max_n,
                                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t n = min_n + i % (max_n - min_n + 1);
        double p = 0.1 + 0.8 * static_cast<double>(i % 9) / 8.0;
        out.push_back(random_connected(n, p, rng));
    }
    return out;
}

/// A rooted tree as (root, parent[]) with kNone marking root/uncovered.
struct BruteTree {
    static constexpr Vertex kNone = ~Vertex{0};
    Vertex root;
    std::vector<Vertex> parent;
    Mask members;

    bool is_ancestor(Vertex a, Vertex v) const {
        for (Vertex x = v; x != kNone; x = parent[x])
            if (x == a) return true;
        return false;
    }
    bool has_child(Vertex v) const {
        return std::find(parent.begin(), parent.end(), v) != parent.end();
    }
};

/// Every rooted tree T with V(T) = members, root in members and every link an
/// edge of g. Visits by callback.
template <class Visit>
void for_each_rooted_tree_on(const Graph& g, Mask members, Vertex root, Visit&& visit) {
    VertexSet others;
    for (Vertex v : set_of(members))
        if (v != root) others.push_back(v);
    BruteTree t{root, std::vector<Vertex>(g.vertex_count(), BruteTree::kNone), members};
    auto reaches_root = [&](Vertex v) {
        for (std::size_t steps = 0; steps <= others.size(); ++steps) {
            if (v == root) return true;
            v = t.parent[v];
        }
        return false;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == others.size()) {
            for (Vertex v : others)
                if (!reaches_root(v)) return;
            visit(static_cast<const BruteTree&>(t));
            return;
        }
        Vertex v = others[i];
        for (Vertex p : g.neighbors(v)) {
            if (!(members >> p & 1u)) continue;
            t.parent[v] = p;
            self(self, i + 1);
        }
        t.parent[v] = BruteTree::kNone;
    };
    rec(rec, 0);
}

/// Brute force: all DFS trees of g (spanning trees with the ancestor
/// property), found by trying every parent assignment.
inline std::vector<BruteTree> brute_dfs_trees(const Graph& g) {
    std::vector<BruteTree> out;
    const std::size_t n = g.vertex_count();
    const Mask all = n == 0 ? 0 : (Mask{1} << n) - 1;
    for (Vertex r = 0; r < n; ++r) {
        for_each_rooted_tree_on(g, all, r, [&](const BruteTree& t) {
            for (auto [u, v] : g.edges())
                if (!t.is_ancestor(u, v) && !t.is_ancestor(v, u)) return;
            out.push_back(t);
        });
    }
    return out;
}

inline std::size_t brute_internal_count(const BruteTree& t) {
    std::size_t count = 0;
    for (Vertex v : set_of(t.members))
        if (t.has_child(v)) ++count;
    return count;
}

inline std::set<std::size_t> brute_profile(const Graph& g) {
    std::set<std::size_t> out;
    for (const auto& t : brute_dfs_trees(g)) out.insert(brute_internal_count(t));
    return out;
}

} // namespace lineal::testing
