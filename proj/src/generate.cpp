#include "lineal/generate.hpp"

#include <random>
#include <vector>

namespace lineal {

namespace {

constexpr int kConnectAttempts = 100;

// Bernoulli draw from the raw 64-bit stream so results do not depend on the
// standard library's distribution implementations.
bool coin(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

std::size_t below(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw GeneratorError("edge probability must lie in [0, 1]");
}

} // namespace

Family parse_family(std::string_view name) {
    if (name == "gnp") return Family::Gnp;
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "star") return Family::Star;
    if (name == "bounded_cover" || name == "bounded-cover") return Family::BoundedCover;
    throw GeneratorError("unknown graph family '" + std::string(name) + "'");
}

std::string_view to_string(Family f) {
    switch (f) {
        case Family::Gnp: return "gnp";
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Star: return "star";
        case Family::BoundedCover: return "bounded_cover";
    }
    return "unknown";
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
    check_probability(p);
    if (n > 1 && p == 0.0) throw GeneratorError("gnp with p = 0 cannot be connected for n > 1");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kConnectAttempts; ++attempt) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng, p)) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        if (is_connected(g)) return g;
    }
    throw GeneratorError("gnp(" + std::to_string(n) + ", " + std::to_string(p) + ") stayed disconnected after " +
                         std::to_string(kConnectAttempts) + " attempts");
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw GeneratorError("a simple cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    edges.emplace_back(0, static_cast<Vertex>(n - 1));
    return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(n, edges);
}

Graph bounded_cover(std::size_t n, std::size_t s, double p, std::uint64_t seed) {
    check_probability(p);
    if (s > n) throw GeneratorError("planted cover larger than the graph");
    if (s == 0 && n > 1) throw GeneratorError("an empty cover only fits graphs with at most one vertex");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kConnectAttempts; ++attempt) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < s; ++u)
            for (Vertex v = u + 1; v < s; ++v)
                if (coin(rng, p)) edges.emplace_back(u, v);
        for (Vertex x = static_cast<Vertex>(s); x < n; ++x) {
            bool wired = false;
            for (Vertex c = 0; c < s; ++c) {
                if (coin(rng, p)) {
                    edges.emplace_back(c, x);
                    wired = true;
                }
            }
            if (!wired) edges.emplace_back(static_cast<Vertex>(below(rng, s)), x);
        }
        Graph g = Graph::from_edges(n, edges);
        if (is_connected(g)) return g;
    }
    throw GeneratorError("bounded_cover stayed disconnected after " + std::to_string(kConnectAttempts) +
                         " attempts");
}

Graph generate(Family family, const GeneratorParams& params, std::uint64_t seed) {
    switch (family) {
        case Family::Gnp: return gnp(params.n, params.p, seed);
        case Family::Path: return path_graph(params.n);
        case Family::Cycle: return cycle_graph(params.n);
        case Family::Star: return star_graph(params.n);
        case Family::BoundedCover: return bounded_cover(params.n, params.s, params.p, seed);
    }
    throw GeneratorError("unknown family");
}

} // namespace lineal
