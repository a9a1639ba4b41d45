#include "lineal/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace lineal {

std::optional<GraphFormat> parse_format(std::string_view text) {
    if (text == "edgelist") return GraphFormat::EdgeList;
    if (text == "dimacs") return GraphFormat::Dimacs;
    return std::nullopt;
}

std::optional<Vertex> LabeledGraph::id_of(Label label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) return std::nullopt;
    return static_cast<Vertex>(it - labels.begin());
}

LabeledGraph identity_labels(Graph g) {
    std::vector<Label> labels(g.vertex_count());
    for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = v;
    return {std::move(g), std::move(labels)};
}

ParseError::ParseError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

namespace {

using Kind = ParseError::Kind;

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text, char comment) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++number;
        start = end + 1;

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            if (j > i && comment == '#' && raw[i] == '#') break;  // trailing comment
            if (j > i) line.tokens.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (line.tokens.empty() || line.tokens.front().front() == comment) continue;
        lines.push_back(std::move(line));
    }
    return lines;
}

Label to_label(std::string_view token, std::size_t line) {
    Label value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(Kind::LabelOverflow, line, "label '" + std::string(token) + "' does not fit in 64 bits");
    if (ec != std::errc() || end != token.data() + token.size())
        throw ParseError(Kind::Malformed, line, "expected a non-negative integer, got '" + std::string(token) + "'");
    return value;
}

std::size_t to_count(std::string_view token, std::size_t line, const char* what) {
    Label value = to_label(token, line);
    if (value >= std::numeric_limits<Vertex>::max())
        throw ParseError(Kind::Malformed, line, std::string(what) + " too large");
    return static_cast<std::size_t>(value);
}

struct RawEdges {
    std::size_t declared_n = 0;
    std::vector<std::pair<Label, Label>> edges;
};

void add_edge(RawEdges& raw, std::set<std::pair<Label, Label>>& seen, Label u, Label v, std::size_t line) {
    if (u == v) throw ParseError(Kind::SelfLoop, line, "self-loop on " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.emplace(key.first, key.second).second) {
        throw ParseError(Kind::DuplicateEdge, line,
                         "duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second));
    }
    raw.edges.emplace_back(u, v);
}

void check_edge_count(const RawEdges& raw, std::size_t declared_m, std::size_t line) {
    if (raw.edges.size() != declared_m) {
        throw ParseError(Kind::Malformed, line,
                         "header declares " + std::to_string(declared_m) + " edges, found " +
                             std::to_string(raw.edges.size()));
    }
}

LabeledGraph build(const RawEdges& raw, std::size_t last_line) {
    const std::size_t n = raw.declared_n;
    bool dense = true;
    std::set<Label> distinct;
    for (auto [u, v] : raw.edges) {
        distinct.insert(u);
        distinct.insert(v);
        dense = dense && u < n && v < n;
    }
    LabeledGraph out;
    if (dense) {
        out.labels.resize(n);
        for (std::size_t v = 0; v < n; ++v) out.labels[v] = v;
    } else {
        if (distinct.size() > n) {
            throw ParseError(Kind::LabelOverflow, last_line,
                             std::to_string(distinct.size()) + " distinct labels but header declares " +
                                 std::to_string(n) + " vertices");
        }
        out.labels.assign(distinct.begin(), distinct.end());
        for (Label fresh = 0; out.labels.size() < n; ++fresh)
            if (!distinct.count(fresh)) out.labels.push_back(fresh);
    }
    std::unordered_map<Label, Vertex> index;
    for (std::size_t v = 0; v < out.labels.size(); ++v) index.emplace(out.labels[v], static_cast<Vertex>(v));
    std::vector<Edge> edges;
    edges.reserve(raw.edges.size());
    for (auto [u, v] : raw.edges) edges.emplace_back(index.at(u), index.at(v));
    out.graph = Graph::from_edges(n, edges);
    return out;
}

LabeledGraph parse_edgelist(const std::vector<Line>& lines, std::size_t last_line) {
    if (lines.empty()) throw ParseError(Kind::Malformed, last_line, "missing header");
    const Line& header = lines.front();
    if (header.tokens.size() != 2)
        throw ParseError(Kind::Malformed, header.number, "header must be 'vertex_count edge_count'");
    RawEdges raw;
    raw.declared_n = to_count(header.tokens[0], header.number, "vertex count");
    const std::size_t m = to_count(header.tokens[1], header.number, "edge count");

    std::set<std::pair<Label, Label>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 2) throw ParseError(Kind::Malformed, line.number, "edge line needs two labels");
        add_edge(raw, seen, to_label(line.tokens[0], line.number), to_label(line.tokens[1], line.number),
                 line.number);
    }
    check_edge_count(raw, m, last_line);
    return build(raw, last_line);
}

LabeledGraph parse_dimacs(const std::vector<Line>& lines, std::size_t last_line) {
    RawEdges raw;
    std::optional<std::size_t> declared_m;
    std::set<std::pair<Label, Label>> seen;
    for (const Line& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "p") {
            if (declared_m) throw ParseError(Kind::Malformed, line.number, "second problem line");
            if (t.size() != 4) throw ParseError(Kind::Malformed, line.number, "problem line must be 'p edge n m'");
            raw.declared_n = to_count(t[2], line.number, "vertex count");
            declared_m = to_count(t[3], line.number, "edge count");
        } else if (t[0] == "e") {
            if (!declared_m) throw ParseError(Kind::Malformed, line.number, "edge before problem line");
            if (t.size() != 3) throw ParseError(Kind::Malformed, line.number, "edge line must be 'e u v'");
            Label u = to_label(t[1], line.number);
            Label v = to_label(t[2], line.number);
            for (Label l : {u, v}) {
                if (l == 0 || l > raw.declared_n)
                    throw ParseError(Kind::LabelOverflow, line.number, "label " + std::to_string(l) + " outside 1..n");
            }
            add_edge(raw, seen, u, v, line.number);
        } else {
            throw ParseError(Kind::Malformed, line.number, "unknown line type '" + std::string(t[0]) + "'");
        }
    }
    if (!declared_m) throw ParseError(Kind::Malformed, last_line, "missing problem line");
    check_edge_count(raw, *declared_m, last_line);

    LabeledGraph out;
    out.labels.resize(raw.declared_n);
    for (std::size_t v = 0; v < raw.declared_n; ++v) out.labels[v] = v + 1;
    std::vector<Edge> edges;
    for (auto [u, v] : raw.edges) edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    out.graph = Graph::from_edges(raw.declared_n, edges);
    return out;
}

} // namespace

LabeledGraph parse_graph(std::string_view text, std::optional<GraphFormat> format) {
    const std::size_t last_line = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
    if (!format) {
        auto probe = tokenize(text, '#');
        bool dimacs = false;
        for (const auto& line : probe) {
            if (line.tokens.front() == "c") continue;
            dimacs = line.tokens.front() == "p";
            break;
        }
        format = dimacs ? GraphFormat::Dimacs : GraphFormat::EdgeList;
    }
    if (*format == GraphFormat::Dimacs) return parse_dimacs(tokenize(text, 'c'), last_line);
    return parse_edgelist(tokenize(text, '#'), last_line);
}

std::string write_edgelist(const LabeledGraph& g) {
    std::ostringstream out;
    out << g.graph.vertex_count() << ' ' << g.graph.edge_count() << '\n';
    for (auto [u, v] : g.graph.edges()) out << g.labels[u] << ' ' << g.labels[v] << '\n';
    return out.str();
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

} // namespace lineal
