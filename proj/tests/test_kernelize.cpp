#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lineal/generate.hpp"
#include "lineal/kernelize.hpp"
#include "support.hpp"

using namespace lineal;

namespace {

bool profile_answer(const Graph& g, Variant variant, std::size_t k) {
    if (g.vertex_count() == 0 || !is_connected(g)) return false;
    for (std::size_t t : internal_profile(g, 12))
        if (meets_threshold(variant, k, g.vertex_count(), t)) return true;
    return false;
}

bool kernel_answer(const KernelOutcome& out) {
    if (out.decided()) return out.decision().answer;
    const auto& inst = out.reduced().instance;
    return profile_answer(inst.graph, inst.variant, inst.k);
}

std::vector<Vertex> removed_vertices(const ReductionTrace& trace) {
    std::vector<Vertex> out;
    for (const auto& e : trace.events)
        std::visit([&](const auto& ev) { out.push_back(ev.removed); }, e);
    return out;
}

// cover {0,1}; vertices 2..8 adjacent to both
Graph seven_common() {
    std::vector<Edge> edges{{0, 1}};
    for (Vertex w = 2; w <= 8; ++w) {
        edges.emplace_back(0, w);
        edges.emplace_back(1, w);
    }
    return Graph::from_edges(9, edges);
}

std::vector<Graph> corpus() {
    auto graphs = testing::small_connected_corpus(6);
    auto extra = testing::random_connected_corpus(60, 7, 8, 99);
    graphs.insert(graphs.end(), extra.begin(), extra.end());
    return graphs;
}

} // namespace

TEST_CASE("variant names") {
    CHECK(parse_variant("dual-min") == Variant::DualMinLLT);
    CHECK(parse_variant("max-llt") == Variant::MaxLLT);
    CHECK_FALSE(parse_variant("minimum").has_value());
    for (Variant v : {Variant::MinLLT, Variant::MaxLLT, Variant::DualMinLLT, Variant::DualMaxLLT})
        CHECK(parse_variant(to_string(v)) == v);
}

TEST_CASE("rule1") {
    Graph star = star_graph(5);
    Reduction r = rule1(star, {0});
    CHECK(r.graph == star_graph(3));
    CHECK(r.trace.survivors == std::vector<Vertex>{0, 1, 2});
    CHECK(r.trace.events == std::vector<ReductionEvent>{PendantDeleted{0, 3}, PendantDeleted{0, 4}});

    Graph p3 = path_graph(3);
    Reduction same = rule1(p3, {1});
    CHECK(same.graph == p3);
    CHECK(same.trace.events.empty());

    // two pendants per cover vertex: threshold not met
    Graph two = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    CHECK(rule1(two, {0, 1}).trace.events.empty());

    CHECK_THROWS_AS(rule1(p3, {0}), std::invalid_argument);
}

TEST_CASE("rule2") {
    Reduction r = rule2(seven_common(), {0, 1});
    CHECK(r.graph.vertex_count() == 6);
    CHECK(r.trace.survivors == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
    CHECK(r.trace.unlabeled_deletions() == 3);
    CHECK(removed_vertices(r.trace) == std::vector<Vertex>{6, 7, 8});

    Graph c4 = cycle_graph(4);
    CHECK(rule2(c4, {0, 2}).trace.events.empty());

    SUBCASE("a label from any pair keeps the vertex") {
        // cover {0,1,2} (s=3, 2s=6); W_01 = {3..9}; 9 also sees 2, so W_02 = {9}
        std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 9}};
        for (Vertex w = 3; w <= 9; ++w) {
            edges.emplace_back(0, w);
            edges.emplace_back(1, w);
        }
        Graph g = Graph::from_edges(10, edges);
        Reduction red = rule2(g, {0, 1, 2});
        CHECK(removed_vertices(red.trace).empty());
        CHECK(red.graph == g);
        CHECK(internal_profile(red.graph) == internal_profile(g));

        // without the edge to 2, vertex 9 is the seventh member of W_01 only
        std::vector<Edge> fewer(edges.begin(), edges.end());
        fewer.erase(std::find(fewer.begin(), fewer.end(), Edge{2, 9}));
        fewer.emplace_back(2, 3);
        Graph h = Graph::from_edges(10, fewer);
        CHECK(removed_vertices(rule2(h, {0, 1, 2}).trace) == std::vector<Vertex>{9});
    }
}

TEST_CASE("kernel_vertex_bound") {
    CHECK(kernel_vertex_bound(1) == 3);
    CHECK(kernel_vertex_bound(2) == 10);
    CHECK(kernel_vertex_bound(3) == 27);
    CHECK(kernel_vertex_bound(4) == 60);
}

TEST_CASE("reduce_with_cover examples") {
    Reduction star = reduce_with_cover(star_graph(6), {0});
    CHECK(star.graph == star_graph(3));
    CHECK(internal_profile(star.graph) == InternalCountProfile{1, 2});

    Reduction two = reduce_with_cover(seven_common(), {0, 1});
    CHECK(two.graph.vertex_count() <= 10);
    CHECK(internal_profile(two.graph) == internal_profile(seven_common()));

    Graph big = bounded_cover(60, 3, 0.6, 5);
    Reduction three = reduce_with_cover(big, {0, 1, 2});
    CHECK(three.graph.vertex_count() <= 27);
}

TEST_CASE("kernel_min_llt") {
    auto star = kernel_min_llt({star_graph(6), 2, Variant::MinLLT});
    REQUIRE(star.decided());
    CHECK_FALSE(star.decision().answer);
    CHECK(star.stats.n_after == 4);

    auto split = kernel_min_llt({Graph(2), 3, Variant::MinLLT});
    REQUIRE(split.decided());
    CHECK_FALSE(split.decision().answer);

    auto c4 = kernel_min_llt({cycle_graph(4), 1, Variant::MinLLT});
    REQUIRE_FALSE(c4.decided());
    CHECK(c4.reduced().instance.graph == cycle_graph(4));
    CHECK(c4.reduced().instance.k == 1);
    CHECK(kernel_answer(c4));
}

TEST_CASE("kernel_max_llt") {
    auto star = kernel_max_llt({star_graph(6), 5, Variant::MaxLLT});
    REQUIRE_FALSE(star.decided());
    CHECK(star.reduced().instance.k == 3);
    CHECK(star.reduced().instance.graph.vertex_count() == 4);
    CHECK(kernel_answer(star));

    auto one = kernel_max_llt({cycle_graph(5), 1, Variant::MaxLLT});
    REQUIRE(one.decided());
    CHECK(one.decision().answer);

    auto split = kernel_max_llt({Graph(2), 1, Variant::MaxLLT});
    REQUIRE(split.decided());
    CHECK_FALSE(split.decision().answer);
}

TEST_CASE("kernel_dual_min") {
    auto star = kernel_dual_min({star_graph(6), 2, Variant::DualMinLLT});
    REQUIRE_FALSE(star.decided());
    CHECK(star.reduced().instance.graph == star_graph(3));
    CHECK(star.reduced().instance.k == 2);
    CHECK(kernel_answer(star));

    auto p4 = kernel_dual_min({path_graph(4), 3, Variant::DualMinLLT});
    REQUIRE(p4.decided());
    CHECK(p4.decision().answer);

    auto zero = kernel_dual_min({cycle_graph(6), 0, Variant::DualMinLLT});
    REQUIRE(zero.decided());
    CHECK(zero.decision().answer);

    // rooting the first search at a leaf already gives 2 internal vertices
    auto rooted = kernel_dual_min({star_graph(6), 2, Variant::DualMinLLT}, KernelOptions{3});
    REQUIRE(rooted.decided());
    CHECK(rooted.decision().answer);

    CHECK_THROWS_AS(kernel_dual_min({path_graph(3), 1, Variant::MinLLT}), std::invalid_argument);
}

TEST_CASE("kernel_dual_max") {
    auto p4 = kernel_dual_max({path_graph(4), 1, Variant::DualMaxLLT});
    REQUIRE(p4.decided());
    CHECK_FALSE(p4.decision().answer);

    auto star = kernel_dual_max({star_graph(6), 1, Variant::DualMaxLLT});
    REQUIRE_FALSE(star.decided());
    CHECK(internal_profile(star.reduced().instance.graph) == InternalCountProfile{1, 2});
    CHECK(kernel_answer(star));

    auto single = kernelize({Graph(1), 0, Variant::DualMaxLLT});
    CHECK(kernel_answer(single));
}

TEST_CASE("reduction preserves profiles, respects the bound and the post-rule structure") {
    for (const Graph& g : corpus()) {
        const std::size_t n = g.vertex_count();
        if (n < 2) continue;
        const InternalCountProfile profile = internal_profile(g);
        std::vector<VertexSet> covers = testing::minimum_vertex_covers(g);
        covers.resize(std::min<std::size_t>(covers.size(), 3));
        covers.push_back(greedy_cover(g).second);
        for (const VertexSet& cover : covers) {
            const std::size_t s = cover.size();
            Reduction r = reduce_with_cover(g, cover);
            CHECK(internal_profile(r.graph) == profile);
            CHECK(r.graph.vertex_count() <= kernel_vertex_bound(s));
            CHECK(is_connected(r.graph));
            CHECK(is_vertex_cover(r.graph, r.cover));

            // deleted vertices lie outside the cover and are distinct
            auto removed = removed_vertices(r.trace);
            std::set<Vertex> distinct(removed.begin(), removed.end());
            CHECK(distinct.size() == removed.size());
            for (Vertex v : removed) CHECK_FALSE(std::binary_search(cover.begin(), cover.end(), v));
            CHECK(removed.size() + r.trace.survivors.size() == n);

            // at most two pendants per cover vertex, at most 2s per cover pair
            std::size_t pendants = 0, heavy = 0;
            std::vector<bool> in_cover(r.graph.vertex_count());
            for (Vertex c : r.cover) in_cover[c] = true;
            for (Vertex v = 0; v < r.graph.vertex_count(); ++v) {
                if (in_cover[v]) continue;
                if (r.graph.degree(v) == 1) ++pendants;
                if (r.graph.degree(v) >= 2) ++heavy;
            }
            CHECK(pendants <= 2 * s);
            CHECK(heavy <= s * s * (s - 1));

            // idempotence
            Reduction again = reduce_with_cover(r.graph, r.cover);
            CHECK(again.graph == r.graph);
            CHECK(again.trace.events.empty());
        }
    }
}

TEST_CASE("lifted trees are DFS trees with the same internal count") {
    for (const Graph& g : corpus()) {
        if (g.vertex_count() < 2) continue;
        Reduction r = reduce_with_cover(g, greedy_cover(g).second);
        for_each_dfs_tree(r.graph, [&](const RootedTree& t) {
            RootedTree lifted = lift_tree(g, r.trace, t);
            CHECK(is_dfs_tree(g, lifted));
            CHECK(internal_vertices(lifted).size() == internal_vertices(t).size());
            return true;
        });
    }
}

TEST_CASE("kernel outcomes agree with the oracle for every variant") {
    for (const Graph& g : corpus()) {
        for (std::size_t k = 0; k <= 5; ++k) {
            for (Variant v : {Variant::MinLLT, Variant::MaxLLT, Variant::DualMinLLT, Variant::DualMaxLLT}) {
                KernelOutcome out = kernelize({g, k, v});
                INFO("variant " << to_string(v) << " k " << k << " n " << g.vertex_count());
                CHECK(kernel_answer(out) == profile_answer(g, v, k));
                if (out.stats.reduction_ran) CHECK(out.stats.n_after <= out.stats.bound);
            }
        }
    }
}
