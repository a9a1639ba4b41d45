#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lineal {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Edges (u, v) with u < v, no two sharing an endpoint.
using Matching = std::vector<Edge>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built; construct through Graph::from_edges or GraphBuilder.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count) : adj_(vertex_count) {}

    /// Throws GraphError on self-loops, duplicate edges or out-of-range ids.
    static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);
    static Graph from_edges(std::size_t vertex_count, std::initializer_list<Edge> edges) {
        return from_edges(vertex_count, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool has_edge(Vertex u, Vertex v) const;

    /// All edges as (min, max), ascending lexicographic.
    std::vector<Edge> edges() const;

    /// Subgraph induced by `keep` (sorted). Vertex keep[i] becomes i.
    Graph induced(std::span<const Vertex> keep) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

bool is_connected(const Graph& g);

/// True iff every edge of g has an endpoint in `cover` (sorted).
bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover);

bool is_independent(const Graph& g, std::span<const Vertex> set);

/// Inclusion-maximal matching built greedily over edges in ascending (u, v)
/// order, together with the set of matched endpoints (a 2-approximate cover).
std::pair<Matching, VertexSet> greedy_cover(const Graph& g);

/// Degree-one vertices outside `cover` whose only neighbor is v.
VertexSet pendant_set(const Graph& g, std::span<const Vertex> cover, Vertex v);

/// { w in outside : uw and vw are edges }.
VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> outside);

/// Connected components of g - removed, each sorted, ordered by smallest member.
std::vector<VertexSet> components_outside(const Graph& g, std::span<const Vertex> removed);

/// V(g) \ set, sorted.
VertexSet complement(const Graph& g, std::span<const Vertex> set);

} // namespace lineal
