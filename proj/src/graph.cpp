#include "lineal/graph.hpp"

#include <algorithm>
#include <string>

namespace lineal {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    Graph g(vertex_count);
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") references a vertex outside 0.." + std::to_string(vertex_count));
        }
        if (u == v) throw GraphError("self-loop on vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (Vertex v = 0; v < vertex_count; ++v) {
        auto& list = g.adj_[v];
        std::sort(list.begin(), list.end());
        auto dup = std::adjacent_find(list.begin(), list.end());
        if (dup != list.end()) {
            throw GraphError("duplicate edge (" + std::to_string(std::min(v, *dup)) + ", " +
                             std::to_string(std::max(v, *dup)) + ")");
        }
    }
    g.edge_count_ = edges.size();
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    Vertex other = &list == &adj_[u] ? v : u;
    return std::binary_search(list.begin(), list.end(), other);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
    constexpr Vertex kAbsent = ~Vertex{0};
    std::vector<Vertex> index(adj_.size(), kAbsent);
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);

    Graph sub(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (Vertex w : adj_[keep[i]]) {
            if (index[w] != kAbsent) sub.adj_[i].push_back(index[w]);
        }
        // keep is sorted, so relabelled lists stay sorted
        sub.edge_count_ += sub.adj_[i].size();
    }
    sub.edge_count_ /= 2;
    return sub;
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
    std::vector<bool> in(g.vertex_count(), false);
    for (Vertex v : cover) in[v] = true;
    for (auto [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
    return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> set) {
    std::vector<bool> in(g.vertex_count(), false);
    for (Vertex v : set) in[v] = true;
    for (Vertex v : set)
        for (Vertex w : g.neighbors(v))
            if (in[w]) return false;
    return true;
}

std::pair<Matching, VertexSet> greedy_cover(const Graph& g) {
    std::vector<bool> matched(g.vertex_count(), false);
    Matching matching;
    VertexSet cover;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (matched[u]) continue;
        for (Vertex v : g.neighbors(u)) {
            if (v > u && !matched[v]) {
                matched[u] = matched[v] = true;
                matching.emplace_back(u, v);
                cover.push_back(u);
                cover.push_back(v);
                break;
            }
        }
    }
    std::sort(cover.begin(), cover.end());
    return {std::move(matching), std::move(cover)};
}

VertexSet pendant_set(const Graph& g, std::span<const Vertex> cover, Vertex v) {
    VertexSet out;
    for (Vertex w : g.neighbors(v)) {
        if (g.degree(w) == 1 && !std::binary_search(cover.begin(), cover.end(), w)) out.push_back(w);
    }
    return out;
}

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> outside) {
    VertexSet out;
    for (Vertex w : g.neighbors(u)) {
        if (w != v && g.has_edge(v, w) && std::binary_search(outside.begin(), outside.end(), w))
            out.push_back(w);
    }
    return out;
}

std::vector<VertexSet> components_outside(const Graph& g, std::span<const Vertex> removed) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> blocked(n, false);
    for (Vertex v : removed) blocked[v] = true;

    std::vector<VertexSet> components;
    std::vector<Vertex> stack;
    for (Vertex start = 0; start < n; ++start) {
        if (blocked[start]) continue;
        VertexSet part;
        blocked[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            part.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!blocked[w]) {
                    blocked[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(part.begin(), part.end());
        components.push_back(std::move(part));
    }
    return components;
}

VertexSet complement(const Graph& g, std::span<const Vertex> set) {
    VertexSet out;
    std::size_t i = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        while (i < set.size() && set[i] < v) ++i;
        if (i < set.size() && set[i] == v) continue;
        out.push_back(v);
    }
    return out;
}

} // namespace lineal
