#include "lineal/dfs_tree.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <string>
#include <string_view>

namespace lineal {

RootedTree::RootedTree(std::size_t host_size, Vertex root)
    : root_(root), parent_(host_size, kNoVertex), covered_(host_size, false), size_(1) {
    if (root >= host_size) throw TreeError("root " + std::to_string(root) + " outside host graph");
    covered_[root] = true;
}

RootedTree RootedTree::from_parents(Vertex root, std::vector<Vertex> parents, std::span<const Vertex> covered) {
    const std::size_t n = parents.size();
    RootedTree t;
    t.root_ = root;
    t.covered_.assign(n, false);
    for (Vertex v : covered) {
        if (v >= n) throw TreeError("covered vertex " + std::to_string(v) + " outside host graph");
        if (t.covered_[v]) throw TreeError("vertex " + std::to_string(v) + " listed twice");
        t.covered_[v] = true;
    }
    t.size_ = covered.size();
    if (root >= n || !t.covered_[root]) throw TreeError("root is not a covered vertex");
    if (parents[root] != kNoVertex) throw TreeError("root has a parent");
    for (Vertex v = 0; v < n; ++v) {
        if (!t.covered_[v]) {
            if (parents[v] != kNoVertex) throw TreeError("uncovered vertex " + std::to_string(v) + " has a parent");
            continue;
        }
        if (v == root) continue;
        Vertex p = parents[v];
        if (p == kNoVertex) throw TreeError("vertex " + std::to_string(v) + " has no parent");
        if (p >= n || !t.covered_[p]) throw TreeError("parent of " + std::to_string(v) + " is not covered");
    }
    // 0 = unvisited, 1 = on current walk, 2 = reaches root
    std::vector<char> state(n, 0);
    state[root] = 2;
    std::vector<Vertex> walk;
    for (Vertex v : covered) {
        Vertex x = v;
        while (state[x] == 0) {
            state[x] = 1;
            walk.push_back(x);
            x = parents[x];
        }
        if (state[x] == 1) throw TreeError("parent links contain a cycle through " + std::to_string(x));
        for (Vertex w : walk) state[w] = 2;
        walk.clear();
    }
    t.parent_ = std::move(parents);
    return t;
}

RootedTree RootedTree::from_parents(Vertex root, std::vector<Vertex> parents) {
    VertexSet all(parents.size());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    return from_parents(root, std::move(parents), all);
}

VertexSet RootedTree::covered() const {
    VertexSet out;
    out.reserve(size_);
    for (Vertex v = 0; v < covered_.size(); ++v)
        if (covered_[v]) out.push_back(v);
    return out;
}

void RootedTree::attach(Vertex child, Vertex parent) {
    if (child >= parent_.size() || parent >= parent_.size()) throw TreeError("vertex outside host graph");
    if (covered_[child]) throw TreeError("vertex " + std::to_string(child) + " already in tree");
    if (!covered_[parent]) throw TreeError("parent " + std::to_string(parent) + " not in tree");
    covered_[child] = true;
    parent_[child] = parent;
    ++size_;
}

std::vector<std::vector<Vertex>> RootedTree::children() const {
    std::vector<std::vector<Vertex>> out(parent_.size());
    for (Vertex v = 0; v < parent_.size(); ++v)
        if (parent_[v] != kNoVertex) out[parent_[v]].push_back(v);
    return out;
}

std::vector<Vertex> preorder(const RootedTree& t) {
    auto kids = t.children();
    std::vector<Vertex> order;
    order.reserve(t.size());
    std::vector<Vertex> stack{t.root()};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it) stack.push_back(*it);
    }
    return order;
}

AncestorIndex::AncestorIndex(const RootedTree& t)
    : enter_(t.host_size(), std::numeric_limits<std::size_t>::max()),
      exit_(t.host_size(), std::numeric_limits<std::size_t>::max()) {
    auto order = preorder(t);
    for (std::size_t i = 0; i < order.size(); ++i) enter_[order[i]] = exit_[order[i]] = i;
    // children appear after parents in preorder, so a reverse sweep finalises
    // each subtree's last stamp before its parent reads it
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex p = t.parent(*it);
        if (p != kNoVertex) exit_[p] = std::max(exit_[p], exit_[*it]);
    }
}

namespace {

std::string edge_text(Vertex u, Vertex v) {
    return std::to_string(u) + "–" + std::to_string(v);
}

// Tree links must be host edges; returns a description of the first bad link.
std::optional<std::string> link_violation(const Graph& g, const RootedTree& t) {
    if (t.host_size() != g.vertex_count()) return "tree host size does not match graph";
    for (Vertex v = 0; v < t.host_size(); ++v) {
        Vertex p = t.parent(v);
        if (p != kNoVertex && !g.has_edge(v, p)) return "tree link " + edge_text(p, v) + " is not an edge";
    }
    return std::nullopt;
}

// Condition (i) of extendability: t is a DFS tree of G[V(t)].
bool dfs_on_covered(const Graph& g, const RootedTree& t, const AncestorIndex& idx) {
    if (auto bad = link_violation(g, t)) throw TreeError(*bad);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (!t.covers(u)) continue;
        for (Vertex v : g.neighbors(u)) {
            if (v > u && t.covers(v) && !idx.comparable(u, v)) return false;
        }
    }
    return true;
}

Vertex deepest(const AncestorIndex& idx, std::span<const Vertex> chain) {
    return *std::max_element(chain.begin(), chain.end(),
                             [&](Vertex a, Vertex b) { return idx.depth_key(a) < idx.depth_key(b); });
}

VertexSet neighborhood_in_tree(const Graph& g, const RootedTree& t, std::span<const Vertex> part) {
    VertexSet out;
    for (Vertex v : part)
        for (Vertex w : g.neighbors(v))
            if (t.covers(w)) out.push_back(w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Iterative DFS from `start` restricted to vertices for which `allowed` holds,
// exploring neighbors in ascending order; writes parent links into `parent`.
template <class Allowed>
void dfs_into(const Graph& g, Vertex start, Allowed allowed, std::vector<bool>& seen, std::vector<Vertex>& parent) {
    std::vector<std::pair<Vertex, std::size_t>> stack{{start, 0}};
    seen[start] = true;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        auto nbrs = g.neighbors(v);
        while (next < nbrs.size() && (seen[nbrs[next]] || !allowed(nbrs[next]))) ++next;
        if (next == nbrs.size()) {
            stack.pop_back();
            continue;
        }
        Vertex w = nbrs[next];
        seen[w] = true;
        parent[w] = v;
        stack.emplace_back(w, 0);
    }
}

} // namespace

std::optional<std::string> dfs_tree_violation(const Graph& g, const RootedTree& t) {
    if (auto bad = link_violation(g, t)) return "not a spanning tree: " + *bad;
    if (!t.spans_host()) return std::string("not a spanning tree: some vertices are not covered");
    AncestorIndex idx(t);
    for (auto [u, v] : g.edges()) {
        if (!idx.comparable(u, v)) return "not a DFS tree: edge " + edge_text(u, v) + " incomparable";
    }
    return std::nullopt;
}

bool is_dfs_tree(const Graph& g, const RootedTree& t) {
    if (auto bad = link_violation(g, t)) throw NotSpanningTree(*bad);
    if (!t.spans_host()) throw NotSpanningTree("tree does not cover every vertex");
    return !dfs_tree_violation(g, t).has_value();
}

std::optional<RootedTree> tree_respecting_ordering(const Graph& g, std::span<const Vertex> order) {
    const std::size_t n = g.vertex_count();
    constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();
    if (order.empty()) return std::nullopt;
    std::vector<std::size_t> pos(n, kAbsent);
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex v = order[i];
        if (v >= n) throw TreeError("ordering names vertex " + std::to_string(v) + " outside graph");
        if (pos[v] != kAbsent) throw TreeError("ordering repeats vertex " + std::to_string(v));
        pos[v] = i;
    }

    std::vector<Vertex> parent(n, kNoVertex);
    std::vector<std::size_t> cursor(n, 0);
    std::vector<Vertex> stack{order[0]};
    for (std::size_t i = 1; i < order.size(); ++i) {
        // a vertex leaves the stack only once all its neighbors in the
        // ordering have been discovered
        while (!stack.empty()) {
            Vertex top = stack.back();
            auto nbrs = g.neighbors(top);
            std::size_t& c = cursor[top];
            while (c < nbrs.size() && (pos[nbrs[c]] == kAbsent || pos[nbrs[c]] < i)) ++c;
            if (c < nbrs.size()) break;
            stack.pop_back();
        }
        if (stack.empty()) return std::nullopt;
        Vertex w = order[i];
        if (!g.has_edge(stack.back(), w)) return std::nullopt;
        parent[w] = stack.back();
        stack.push_back(w);
    }
    VertexSet members(order.begin(), order.end());
    std::sort(members.begin(), members.end());
    return RootedTree::from_parents(order[0], std::move(parent), members);
}

RootedTree dfs_any(const Graph& g, Vertex r) {
    const std::size_t n = g.vertex_count();
    if (r >= n) throw TreeError("root " + std::to_string(r) + " outside graph");
    std::vector<bool> seen(n, false);
    std::vector<Vertex> parent(n, kNoVertex);
    dfs_into(g, r, [](Vertex) { return true; }, seen, parent);
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw TreeError("dfs_any requires a connected graph");
    return RootedTree::from_parents(r, std::move(parent));
}

VertexSet internal_vertices(const RootedTree& t) {
    std::vector<bool> has_child(t.host_size(), false);
    for (Vertex v = 0; v < t.host_size(); ++v)
        if (t.parent(v) != kNoVertex) has_child[t.parent(v)] = true;
    VertexSet out;
    for (Vertex v = 0; v < t.host_size(); ++v)
        if (has_child[v]) out.push_back(v);
    return out;
}

VertexSet leaf_vertices(const RootedTree& t) {
    std::vector<bool> has_child(t.host_size(), false);
    for (Vertex v = 0; v < t.host_size(); ++v)
        if (t.parent(v) != kNoVertex) has_child[t.parent(v)] = true;
    VertexSet out;
    for (Vertex v = 0; v < t.host_size(); ++v)
        if (t.covers(v) && !has_child[v]) out.push_back(v);
    return out;
}

bool chain_check(const AncestorIndex& idx, std::span<const Vertex> s) {
    std::vector<Vertex> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end(),
              [&](Vertex a, Vertex b) { return idx.depth_key(a) < idx.depth_key(b); });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (!idx.is_ancestor(sorted[i - 1], sorted[i])) return false;
    return true;
}

bool extendable(const Graph& g, const RootedTree& t) {
    AncestorIndex idx(t);
    if (!dfs_on_covered(g, t, idx)) return false;
    for (const auto& part : components_outside(g, t.covered())) {
        if (!chain_check(idx, neighborhood_in_tree(g, t, part))) return false;
    }
    return true;
}

bool extendable_all_internal(const Graph& g, const RootedTree& t) {
    if (!extendable(g, t)) return false;
    for (Vertex leaf : leaf_vertices(t)) {
        auto nbrs = g.neighbors(leaf);
        if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return !t.covers(w); })) return false;
    }
    return true;
}

bool extendable_all_leaves(const Graph& g, const RootedTree& t) {
    AncestorIndex idx(t);
    if (!dfs_on_covered(g, t, idx)) return false;
    VertexSet outside = complement(g, t.covered());
    if (!is_independent(g, outside)) return false;
    for (Vertex v : outside) {
        if (!chain_check(idx, g.neighbors(v))) return false;
    }
    return true;
}

RootedTree extend_to_dfs_tree(const Graph& g, const RootedTree& t) {
    if (!extendable(g, t)) throw TreeError("tree is not extendable to a DFS tree");
    AncestorIndex idx(t);
    std::vector<Vertex> parent(t.parents().begin(), t.parents().end());
    std::vector<bool> seen(g.vertex_count(), false);
    for (Vertex v = 0; v < g.vertex_count(); ++v) seen[v] = t.covers(v);

    for (const auto& part : components_outside(g, t.covered())) {
        VertexSet attach_points = neighborhood_in_tree(g, t, part);
        if (attach_points.empty()) throw TreeError("component not adjacent to the tree (graph disconnected)");
        Vertex anchor = deepest(idx, attach_points);
        Vertex entry = kNoVertex;
        for (Vertex w : g.neighbors(anchor)) {
            if (!t.covers(w) && std::binary_search(part.begin(), part.end(), w)) {
                entry = w;
                break;
            }
        }
        parent[entry] = anchor;
        dfs_into(g, entry, [&](Vertex w) { return std::binary_search(part.begin(), part.end(), w); }, seen,
                 parent);
    }
    return RootedTree::from_parents(t.root(), std::move(parent));
}

std::size_t default_oracle_limit() {
    constexpr std::size_t kDefault = 10;
    const char* env = std::getenv("LINEAL_ORACLE_LIMIT");
    if (env == nullptr) return kDefault;
    std::string_view text(env);
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value == 0) return kDefault;
    return value;
}

namespace {

// Generates every discovery sequence in which each vertex's children are
// discovered in ascending id order. Such sequences are in bijection with DFS
// trees, since any preorder of a DFS tree is a valid search run.
class DfsTreeEnumerator {
public:
    DfsTreeEnumerator(const Graph& g, const std::function<bool(const RootedTree&)>& visit)
        : g_(g), visit_(visit), parent_(g.vertex_count(), kNoVertex), discovered_(g.vertex_count(), false),
          last_child_(g.vertex_count(), kNoVertex) {}

    bool run_from(Vertex root) {
        discovered_[root] = true;
        stack_.assign(1, root);
        found_ = 1;
        step();
        discovered_[root] = false;
        return !stopped_;
    }

private:
    void step() {
        if (stopped_) return;
        if (found_ == g_.vertex_count()) {
            Vertex root = stack_.empty() ? kNoVertex : stack_.front();
            if (!visit_(RootedTree::from_parents(root, parent_))) stopped_ = true;
            return;
        }
        if (stack_.empty()) return;
        Vertex top = stack_.back();
        bool blocked = false;
        for (Vertex w : g_.neighbors(top)) {
            if (discovered_[w]) continue;
            blocked = true;
            if (last_child_[top] != kNoVertex && w < last_child_[top]) continue;
            Vertex previous = last_child_[top];
            discovered_[w] = true;
            parent_[w] = top;
            last_child_[top] = w;
            stack_.push_back(w);
            ++found_;
            step();
            --found_;
            stack_.pop_back();
            last_child_[top] = previous;
            parent_[w] = kNoVertex;
            discovered_[w] = false;
            if (stopped_) return;
        }
        if (!blocked) {
            stack_.pop_back();
            step();
            stack_.push_back(top);
        }
    }

    const Graph& g_;
    const std::function<bool(const RootedTree&)>& visit_;
    std::vector<Vertex> parent_;
    std::vector<bool> discovered_;
    std::vector<Vertex> last_child_;
    std::vector<Vertex> stack_;
    std::size_t found_ = 0;
    bool stopped_ = false;
};

} // namespace

void for_each_dfs_tree(const Graph& g, const std::function<bool(const RootedTree&)>& visit,
                       std::size_t vertex_limit) {
    if (g.vertex_count() > vertex_limit) {
        throw OracleLimitExceeded("exhaustive enumeration refused: " + std::to_string(g.vertex_count()) +
                                  " vertices exceeds oracle limit " + std::to_string(vertex_limit));
    }
    DfsTreeEnumerator enumerator(g, visit);
    for (Vertex r = 0; r < g.vertex_count(); ++r) {
        if (!enumerator.run_from(r)) return;
    }
}

std::vector<RootedTree> enumerate_dfs_trees(const Graph& g, std::size_t vertex_limit) {
    std::vector<RootedTree> out;
    for_each_dfs_tree(g, [&](const RootedTree& t) {
        out.push_back(t);
        return true;
    }, vertex_limit);
    return out;
}

InternalCountProfile internal_profile(const Graph& g, std::size_t vertex_limit) {
    InternalCountProfile profile;
    for_each_dfs_tree(g, [&](const RootedTree& t) {
        profile.insert(internal_vertices(t).size());
        return true;
    }, vertex_limit);
    return profile;
}

} // namespace lineal
