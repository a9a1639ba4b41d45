#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lineal/generate.hpp"
#include "lineal/io.hpp"
#include "support.hpp"

using namespace lineal;

namespace {

ParseError parse_failure(std::string_view text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no parse error for: " << text);
    return ParseError(ParseError::Kind::Malformed, 0, "");
}

std::set<std::pair<Label, Label>> labelled_edges(const LabeledGraph& g) {
    std::set<std::pair<Label, Label>> out;
    for (auto [u, v] : g.graph.edges()) out.insert(std::minmax(g.labels[u], g.labels[v]));
    return out;
}

} // namespace

TEST_CASE("edge-list parsing") {
    LabeledGraph p3 = parse_graph("3 2\n0 1\n1 2");
    CHECK(p3.graph == path_graph(3));
    CHECK(p3.labels == std::vector<Label>{0, 1, 2});

    LabeledGraph one = parse_graph("1 0");
    CHECK(one.graph.vertex_count() == 1);
    CHECK(one.graph.edge_count() == 0);

    LabeledGraph commented = parse_graph("# a path\n3 2\n\n0 1   # first\n1 2\n");
    CHECK(commented.graph == path_graph(3));

    LabeledGraph sparse = parse_graph("4 2\n10 20\n20 30\n");
    CHECK(sparse.labels == std::vector<Label>{10, 20, 30, 0});
    CHECK(sparse.graph == Graph::from_edges(4, {{0, 1}, {1, 2}}));
    CHECK(sparse.id_of(30) == Vertex{2});
    CHECK_FALSE(sparse.id_of(5).has_value());
}

TEST_CASE("DIMACS parsing") {
    LabeledGraph k3 = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(k3.graph == Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(k3.labels == std::vector<Label>{1, 2, 3});
    LabeledGraph c = parse_graph("c hello\np edge 2 1\ne 2 1\n", GraphFormat::Dimacs);
    CHECK(c.graph.edge_count() == 1);
    CHECK(parse_format("dimacs") == GraphFormat::Dimacs);
    CHECK(parse_format("edgelist") == GraphFormat::EdgeList);
    CHECK_FALSE(parse_format("graphml").has_value());
}

TEST_CASE("each parse failure is a distinct kind with its line") {
    auto loop = parse_failure("3 2\n0 1\n2 2\n");
    CHECK(loop.kind() == ParseError::Kind::SelfLoop);
    CHECK(loop.line() == 3);
    CHECK(std::string(loop.what()).rfind("line 3:", 0) == 0);

    auto dup = parse_failure("3 2\n0 1\n1 0\n");
    CHECK(dup.kind() == ParseError::Kind::DuplicateEdge);
    CHECK(dup.line() == 3);

    auto junk = parse_failure("3 2\n0 x\n1 2\n");
    CHECK(junk.kind() == ParseError::Kind::Malformed);
    CHECK(junk.line() == 2);

    auto too_many = parse_failure("2 2\n0 5\n5 7\n");
    CHECK(too_many.kind() == ParseError::Kind::LabelOverflow);

    auto huge = parse_failure("2 1\n0 99999999999999999999999\n");
    CHECK(huge.kind() == ParseError::Kind::LabelOverflow);
    CHECK(huge.line() == 2);

    auto dimacs_range = parse_failure("p edge 3 1\ne 1 4\n");
    CHECK(dimacs_range.kind() == ParseError::Kind::LabelOverflow);
    CHECK(dimacs_range.line() == 2);

    auto count = parse_failure("3 2\n0 1\n");
    CHECK(count.kind() == ParseError::Kind::Malformed);

    CHECK(parse_failure("").kind() == ParseError::Kind::Malformed);
}

TEST_CASE("serialize then parse gives the same labelled edge set") {
    std::vector<LabeledGraph> docs;
    for (const Graph& g : testing::small_connected_corpus(5)) docs.push_back(identity_labels(g));
    docs.push_back(parse_graph("5 3\n100 7\n7 42\n42 100\n"));
    docs.push_back(parse_graph("p edge 4 2\ne 1 4\ne 2 3\n"));
    for (const auto& g : testing::random_connected_corpus(20, 6, 30, 5)) docs.push_back(identity_labels(g));

    for (const LabeledGraph& doc : docs) {
        LabeledGraph again = parse_graph(write_edgelist(doc), GraphFormat::EdgeList);
        CHECK(labelled_edges(again) == labelled_edges(doc));
        CHECK(again.graph.vertex_count() == doc.graph.vertex_count());

        LabeledGraph dimacs = parse_graph(write_dimacs(doc.graph));
        CHECK(dimacs.graph == doc.graph);
    }
}

TEST_CASE("generators") {
    CHECK(star_graph(4) == Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(cycle_graph(4) == Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    CHECK(path_graph(1).vertex_count() == 1);
    CHECK(bounded_cover(20, 3, 0.5, 7) == bounded_cover(20, 3, 0.5, 7));
    CHECK(gnp(15, 0.3, 11) == gnp(15, 0.3, 11));
    CHECK_THROWS_AS(gnp(5, 0.0, 1), GeneratorError);
    CHECK_THROWS_AS(cycle_graph(2), GeneratorError);
    CHECK_THROWS_AS(parse_family("tree"), GeneratorError);
    CHECK(parse_family("bounded-cover") == Family::BoundedCover);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = bounded_cover(40, 4, 0.3, seed);
        CHECK(is_connected(g));
        VertexSet planted{0, 1, 2, 3};
        CHECK(is_vertex_cover(g, planted));
        CHECK(is_connected(gnp(12, 0.25, seed)));
    }
    GeneratorParams params;
    params.n = 6;
    CHECK(generate(Family::Cycle, params, 0) == cycle_graph(6));
}
