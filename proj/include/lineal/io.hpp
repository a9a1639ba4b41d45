#pragma once

#include "lineal/dfs_tree.hpp"
#include "lineal/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lineal {

using Label = std::uint64_t;

enum class GraphFormat { EdgeList, Dimacs };

std::optional<GraphFormat> parse_format(std::string_view text);

/// A graph plus the file label of each dense vertex id.
struct LabeledGraph {
    Graph graph;
    std::vector<Label> labels;

    std::optional<Vertex> id_of(Label label) const;
};

/// Dense ids for a plain graph: vertex v is labelled v.
LabeledGraph identity_labels(Graph g);

class ParseError : public std::runtime_error {
public:
    enum class Kind { Malformed, SelfLoop, DuplicateEdge, LabelOverflow };

    ParseError(Kind kind, std::size_t line, const std::string& what);

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

/// Edge list: optional '#' comments, a header "n m", then m lines "u v" of
/// non-negative integer labels. Labels all below n are used as ids directly;
/// otherwise distinct labels are numbered in ascending order and any
/// remaining vertices become isolated with the smallest unused labels.
///
/// DIMACS: 'c' comments, "p edge n m", then "e u v" with labels 1..n.
///
/// Without an explicit format the first non-comment line decides: a leading
/// 'p' means DIMACS.
LabeledGraph parse_graph(std::string_view text, std::optional<GraphFormat> format = std::nullopt);

std::string write_edgelist(const LabeledGraph& g);
std::string write_dimacs(const Graph& g);

} // namespace lineal
