#pragma once

#include "lineal/graph.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lineal {

inline constexpr Vertex kNoVertex = ~Vertex{0};

class TreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a predicate that requires a spanning tree of the host graph
/// is handed something else.
class NotSpanningTree : public TreeError {
public:
    using TreeError::TreeError;
};

class OracleLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rooted tree over a subset of a host graph's vertices, stored as a parent
/// array indexed by host vertex id. Covers the whole host for spanning trees,
/// or a connected part of it for partial trees.
class RootedTree {
public:
    RootedTree() = default;

    /// Single-vertex tree on a host with `host_size` vertices.
    RootedTree(std::size_t host_size, Vertex root);

    /// `parents[v]` is v's parent, or kNoVertex for the root and for vertices
    /// the tree does not cover; `covered` lists the tree's vertices.
    /// Throws TreeError if the links do not form one tree rooted at `root`.
    static RootedTree from_parents(Vertex root, std::vector<Vertex> parents, std::span<const Vertex> covered);

    /// Spanning-tree shorthand: every vertex is covered.
    static RootedTree from_parents(Vertex root, std::vector<Vertex> parents);

    Vertex root() const { return root_; }
    std::size_t host_size() const { return parent_.size(); }
    std::size_t size() const { return size_; }
    bool spans_host() const { return size_ == parent_.size(); }

    bool covers(Vertex v) const { return covered_[v]; }
    Vertex parent(Vertex v) const { return parent_[v]; }
    std::span<const Vertex> parents() const { return parent_; }
    VertexSet covered() const;

    /// Adds `child` (uncovered) below `parent` (covered).
    void attach(Vertex child, Vertex parent);

    std::vector<std::vector<Vertex>> children() const;

    friend bool operator==(const RootedTree& a, const RootedTree& b) {
        return a.root_ == b.root_ && a.parent_ == b.parent_ && a.covered_ == b.covered_;
    }

private:
    Vertex root_ = kNoVertex;
    std::vector<Vertex> parent_;
    std::vector<bool> covered_;
    std::size_t size_ = 0;
};

/// Enter/exit stamps from one preorder walk of a tree; answers ancestor
/// queries in O(1). A vertex is its own ancestor.
class AncestorIndex {
public:
    explicit AncestorIndex(const RootedTree& t);

    bool is_ancestor(Vertex ancestor, Vertex v) const {
        return enter_[ancestor] <= enter_[v] && exit_[v] <= exit_[ancestor];
    }
    bool comparable(Vertex u, Vertex v) const { return is_ancestor(u, v) || is_ancestor(v, u); }
    std::size_t depth_key(Vertex v) const { return enter_[v]; }

private:
    std::vector<std::size_t> enter_;
    std::vector<std::size_t> exit_;
};

/// Preorder of t's vertices visiting children in ascending id order.
std::vector<Vertex> preorder(const RootedTree& t);

/// Every non-tree edge of g joins an ancestor-descendant pair of t.
/// Throws NotSpanningTree unless t is a spanning tree of g.
bool is_dfs_tree(const Graph& g, const RootedTree& t);

/// Why t fails to be a DFS tree of g, or nullopt if it is one.
std::optional<std::string> dfs_tree_violation(const Graph& g, const RootedTree& t);

/// Replays depth-first search on G[set of `order`] forcing discovery in the
/// given order. Returns the unique resulting tree (in host ids), or nullopt
/// when no DFS tree respects the ordering.
std::optional<RootedTree> tree_respecting_ordering(const Graph& g, std::span<const Vertex> order);

/// Depth-first search from r exploring neighbors in ascending id order.
RootedTree dfs_any(const Graph& g, Vertex r);

VertexSet internal_vertices(const RootedTree& t);
VertexSet leaf_vertices(const RootedTree& t);

/// Members of s lie on a single root-to-leaf path of the indexed tree.
bool chain_check(const AncestorIndex& idx, std::span<const Vertex> s);

/// t can be completed to a DFS tree of g with the same root.
bool extendable(const Graph& g, const RootedTree& t);

/// ... with an extension in which every vertex of t is internal.
bool extendable_all_internal(const Graph& g, const RootedTree& t);

/// ... with an extension in which every vertex outside t is a leaf.
bool extendable_all_leaves(const Graph& g, const RootedTree& t);

/// Completes an extendable partial tree: each component C of g - V(t) is
/// hung below the deepest vertex of N(C) and explored depth-first in
/// ascending id order. Throws TreeError if t is not extendable.
RootedTree extend_to_dfs_tree(const Graph& g, const RootedTree& t);

using InternalCountProfile = std::set<std::size_t>;

/// Vertex limit for the exhaustive oracle: LINEAL_ORACLE_LIMIT if set,
/// otherwise 10.
std::size_t default_oracle_limit();

/// Calls `visit` once for every DFS tree of g over every root. Each tree is
/// produced exactly once (children are generated in ascending id order).
/// Stops early when `visit` returns false.
void for_each_dfs_tree(const Graph& g, const std::function<bool(const RootedTree&)>& visit,
                       std::size_t vertex_limit = default_oracle_limit());

std::vector<RootedTree> enumerate_dfs_trees(const Graph& g, std::size_t vertex_limit = default_oracle_limit());

InternalCountProfile internal_profile(const Graph& g, std::size_t vertex_limit = default_oracle_limit());

} // namespace lineal
