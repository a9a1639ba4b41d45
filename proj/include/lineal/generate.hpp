#pragma once

#include "lineal/graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lineal {

class GeneratorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Family { Gnp, Path, Cycle, Star, BoundedCover };

Family parse_family(std::string_view name);  // throws GeneratorError
std::string_view to_string(Family f);

struct GeneratorParams {
    std::size_t n = 0;
    double p = 0.5;
    /// Planted cover size for BoundedCover.
    std::size_t s = 0;
};

/// Connected G(n, p); redrawn up to 100 times until connected.
Graph gnp(std::size_t n, double p, std::uint64_t seed);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Center 0 with n - 1 leaves.
Graph star_graph(std::size_t n);
/// Vertices 0..s-1 form a vertex cover: edges among them appear with
/// probability p, every other vertex is joined to each cover vertex with
/// probability p and to at least one. Redrawn until connected (100 tries).
Graph bounded_cover(std::size_t n, std::size_t s, double p, std::uint64_t seed);

Graph generate(Family family, const GeneratorParams& params, std::uint64_t seed);

} // namespace lineal
