#include "lineal/cli.hpp"

#include "lineal/generate.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lineal::cli {

using nlohmann::json;

json to_json(const RunReport& r) {
    json doc;
    doc["instance"] = r.instance;
    doc["variant"] = std::string(to_string(r.variant));
    doc["k"] = r.k;
    doc["outcome"] = r.outcome;
    doc["reason"] = r.reason;
    doc["solver"] = r.solver;
    doc["tuples_examined"] = r.tuples_examined;
    if (r.witness) {
        json parent = json::array();
        for (auto [child, p] : r.witness->parent) parent.push_back({child, p});
        doc["witness"] = {{"root", r.witness->root}, {"parent", parent}};
    } else {
        doc["witness"] = nullptr;
    }
    if (r.kernel) {
        const KernelStats& s = *r.kernel;
        doc["kernel"] = {{"n_before", s.n_before},       {"n_after", s.n_after},
                         {"cover_size", s.cover_size},   {"bound", s.bound},
                         {"rule1_deleted", s.rule1_deleted}, {"rule2_deleted", s.rule2_deleted},
                         {"reduction_ran", s.reduction_ran}};
        if (r.kernel_k) doc["kernel"]["k"] = *r.kernel_k;
    } else {
        doc["kernel"] = nullptr;
    }
    if (r.kernel_graph) {
        json edges = json::array();
        for (auto [u, v] : r.kernel_graph->graph.edges())
            edges.push_back({r.kernel_graph->labels[u], r.kernel_graph->labels[v]});
        doc["kernel_graph"] = {{"vertices", r.kernel_graph->labels}, {"edges", edges}};
    }
    doc["timings_ms"] = {{"kernelize", r.kernelize_ms}, {"solve", r.solve_ms}};
    return doc;
}

WitnessRecord witness_record(const LabeledGraph& g, const RootedTree& t) {
    WitnessRecord rec;
    rec.root = g.labels[t.root()];
    for (Vertex v = 0; v < t.host_size(); ++v)
        if (t.parent(v) != kNoVertex) rec.parent.emplace_back(g.labels[v], g.labels[t.parent(v)]);
    return rec;
}

RootedTree witness_from_json(const LabeledGraph& g, const json& doc) {
    using Kind = ParseError::Kind;
    const json& w = doc.contains("witness") ? doc.at("witness") : doc;
    if (!w.is_object() || !w.contains("root") || !w.contains("parent") || !w.at("parent").is_array())
        throw ParseError(Kind::Malformed, 1, "witness needs 'root' and a 'parent' array");

    auto vertex = [&](const json& label) {
        if (!label.is_number_unsigned()) throw ParseError(Kind::Malformed, 1, "witness labels must be integers");
        auto id = g.id_of(label.get<Label>());
        if (!id) throw ParseError(Kind::Malformed, 1, "witness names unknown label " + label.dump());
        return *id;
    };
    Vertex root = vertex(w.at("root"));
    std::vector<Vertex> parent(g.graph.vertex_count(), kNoVertex);
    for (const json& link : w.at("parent")) {
        if (!link.is_array() || link.size() != 2)
            throw ParseError(Kind::Malformed, 1, "parent entries must be [child, parent]");
        Vertex child = vertex(link[0]);
        if (parent[child] != kNoVertex) throw ParseError(Kind::Malformed, 1, "child listed twice");
        parent[child] = vertex(link[1]);
    }
    try {
        return RootedTree::from_parents(root, std::move(parent));
    } catch (const TreeError& e) {
        throw ParseError(Kind::Malformed, 1, std::string("witness is not a rooted tree: ") + e.what());
    }
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input = "-";
    std::string format;
    std::string variant;
    std::size_t k = 0;
    std::uint64_t seed = 1;
    std::uint64_t budget_tuples = 100'000'000;
    double time_limit = 300.0;
    unsigned threads = 1;
    std::string output;
    std::string witness;
    Label root_label = 0;
    bool root_given = false;

    std::string family = "gnp";
    std::size_t n = 10;
    double p = 0.5;
    std::size_t s = 3;
    std::vector<std::size_t> n_values;
    std::vector<std::size_t> k_values;
    std::vector<std::string> variants;
};

std::optional<GraphFormat> format_of(const Options& o) {
    if (o.format.empty()) return std::nullopt;
    auto f = parse_format(o.format);
    if (!f) throw UsageError("unknown format '" + o.format + "'");
    return f;
}

Variant variant_of(const std::string& text) {
    auto v = parse_variant(text);
    if (!v) throw UsageError("unknown variant '" + text + "' (expected min, max, dual-min or dual-max)");
    return *v;
}

SolverBudget budget_of(const Options& o) {
    SolverBudget b;
    b.max_tuple_count = o.budget_tuples;
    b.time_limit = std::chrono::milliseconds(static_cast<long long>(o.time_limit * 1000.0));
    b.threads = o.threads;
    return b;
}

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_text(const std::string& path) {
    if (path == "-") return read_all(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return read_all(in);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

std::string serialize(const LabeledGraph& g, std::optional<GraphFormat> format) {
    return format == GraphFormat::Dimacs ? write_dimacs(g.graph) : write_edgelist(g);
}

LabeledGraph load(const Options& o) { return parse_graph(read_text(o.input), format_of(o)); }

int exit_for(const std::string& outcome) {
    if (outcome == "yes") return kExitYes;
    if (outcome == "no") return kExitNo;
    return kExitUndecided;
}

LabeledGraph kernel_labels(const LabeledGraph& g, const Reduced& red) {
    LabeledGraph out{red.instance.graph, {}};
    for (Vertex v : red.trace.survivors) out.labels.push_back(g.labels[v]);
    return out;
}

KernelOptions kernel_options(const Options& o, const LabeledGraph& g) {
    KernelOptions opts;
    if (o.root_given) {
        auto id = g.id_of(o.root_label);
        if (!id) throw UsageError("--root names an unknown label");
        opts.dual_min_root = *id;
    }
    return opts;
}

RunReport report_for(const Options& o, Variant variant, std::size_t k) {
    RunReport r;
    r.instance = o.input;
    r.variant = variant;
    r.k = k;
    return r;
}

void fill_decision(RunReport& r, const LabeledGraph& g, const Decision& d) {
    r.outcome = d.answer ? "yes" : "no";
    r.tuples_examined = d.tuples_examined;
    if (d.witness) r.witness = witness_record(g, *d.witness);
}

int cmd_kernelize(const Options& o, std::ostream& out) {
    LabeledGraph g = load(o);
    RunReport r = report_for(o, variant_of(o.variant), o.k);
    r.solver = "kernel";
    auto start = Clock::now();
    KernelOutcome outcome = kernelize(ProblemInstance{g.graph, o.k, r.variant}, kernel_options(o, g));
    r.kernelize_ms = elapsed_ms(start);
    r.kernel = outcome.stats;
    if (outcome.decided()) {
        r.outcome = outcome.decision().answer ? "yes" : "no";
        r.reason = outcome.decision().reason;
    } else {
        const Reduced& red = outcome.reduced();
        r.reason = "reduced instance";
        r.kernel_k = red.instance.k;
        r.kernel_graph = kernel_labels(g, red);
        if (!o.output.empty()) write_text(o.output, serialize(*r.kernel_graph, format_of(o)));
    }
    out << to_json(r).dump(2) << '\n';
    return exit_for(r.outcome);
}

RunReport solve_report(const Options& o, const LabeledGraph& g, Variant variant, std::size_t k) {
    RunReport r = report_for(o, variant, k);
    const SolverBudget budget = budget_of(o);
    const ProblemInstance inst{g.graph, k, variant};
    try {
        if (variant == Variant::DualMinLLT || variant == Variant::DualMaxLLT) {
            r.solver = "fpt";
            auto start = Clock::now();
            KernelOutcome outcome = kernelize(inst, kernel_options(o, g));
            r.kernelize_ms = elapsed_ms(start);
            r.kernel = outcome.stats;
            start = Clock::now();
            Decision d = solve_dual_fpt(inst, outcome, budget);
            r.solve_ms = elapsed_ms(start);
            fill_decision(r, g, d);
            r.reason = outcome.decided() ? outcome.decision().reason : "tuple search on kernel";
            if (!outcome.decided()) r.kernel_k = outcome.reduced().instance.k;
            return r;
        }
        r.solver = "kernel+oracle";
        auto start = Clock::now();
        KernelOutcome outcome = kernelize(inst);
        r.kernelize_ms = elapsed_ms(start);
        r.kernel = outcome.stats;
        if (outcome.decided()) {
            r.outcome = outcome.decision().answer ? "yes" : "no";
            r.reason = outcome.decision().reason;
            return r;
        }
        const Reduced& red = outcome.reduced();
        r.kernel_k = red.instance.k;
        start = Clock::now();
        Decision d = solve_exact_oracle(red.instance, budget);
        r.solve_ms = elapsed_ms(start);
        if (d.witness) d.witness = lift_tree(g.graph, red.trace, *d.witness);
        fill_decision(r, g, d);
        r.reason = "exhaustive search on kernel";
    } catch (const BudgetExhausted& e) {
        r.outcome = "undecided";
        r.reason = std::string("budget: ") + e.what();
    } catch (const OracleLimitExceeded& e) {
        r.outcome = "undecided";
        r.reason = e.what();
    }
    return r;
}

int cmd_solve(const Options& o, std::ostream& out) {
    LabeledGraph g = load(o);
    RunReport r = solve_report(o, g, variant_of(o.variant), o.k);
    out << to_json(r).dump(2) << '\n';
    return exit_for(r.outcome);
}

int cmd_oracle(const Options& o, std::ostream& out) {
    LabeledGraph g = load(o);
    RunReport r = report_for(o, variant_of(o.variant), o.k);
    r.solver = "oracle";
    SolverBudget budget = budget_of(o);
    auto start = Clock::now();
    try {
        Decision d = solve_exact_oracle(ProblemInstance{g.graph, o.k, r.variant}, budget);
        fill_decision(r, g, d);
        r.reason = "exhaustive search";
    } catch (const OracleLimitExceeded& e) {
        r.reason = e.what();
    }
    r.solve_ms = elapsed_ms(start);
    out << to_json(r).dump(2) << '\n';
    return exit_for(r.outcome);
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    LabeledGraph g = load(o);
    if (o.witness.empty()) throw UsageError("verify needs --witness");
    json doc;
    try {
        doc = json::parse(read_text(o.witness));
    } catch (const json::parse_error& e) {
        throw ParseError(ParseError::Kind::Malformed, 1, std::string("witness JSON: ") + e.what());
    }
    RootedTree t = witness_from_json(g, doc);

    json report = {{"instance", o.input}, {"witness", o.witness}};
    std::string problem;
    for (Vertex v = 0; v < t.host_size() && problem.empty(); ++v) {
        Vertex p = t.parent(v);
        if (p != kNoVertex && !g.graph.has_edge(v, p)) {
            problem = "not a spanning tree: link " + std::to_string(g.labels[p]) + "–" +
                      std::to_string(g.labels[v]) + " is not an edge";
        }
    }
    if (problem.empty()) {
        AncestorIndex idx(t);
        for (auto [u, v] : g.graph.edges()) {
            if (!idx.comparable(u, v)) {
                problem = "not a DFS tree: edge " + std::to_string(g.labels[u]) + "–" +
                          std::to_string(g.labels[v]) + " incomparable";
                break;
            }
        }
    }
    const std::size_t internal = internal_vertices(t).size();
    report["internal"] = internal;
    report["leaves"] = g.graph.vertex_count() - internal;
    if (problem.empty() && !o.variant.empty()) {
        Variant variant = variant_of(o.variant);
        report["variant"] = std::string(to_string(variant));
        report["k"] = o.k;
        if (!meets_threshold(variant, o.k, g.graph.vertex_count(), internal)) {
            problem = "threshold not met: " + std::to_string(internal) + " internal, " +
                      std::to_string(g.graph.vertex_count() - internal) + " leaves";
        }
    }
    report["valid"] = problem.empty();
    report["reason"] = problem;
    out << report.dump(2) << '\n';
    if (!problem.empty()) {
        err << problem << '\n';
        return kExitNo;
    }
    return kExitYes;
}

GeneratorParams params_of(const Options& o, std::size_t n) {
    GeneratorParams params;
    params.n = n;
    params.p = o.p;
    params.s = o.s;
    return params;
}

int cmd_gen(const Options& o, std::ostream& out) {
    Graph g = generate(parse_family(o.family), params_of(o, o.n), o.seed);
    std::string text = serialize(identity_labels(std::move(g)), format_of(o));
    if (o.output.empty()) {
        out << text;
    } else {
        write_text(o.output, text);
    }
    return kExitYes;
}

int cmd_bench(const Options& o, std::ostream& out) {
    const Family family = parse_family(o.family);
    std::vector<Variant> variants;
    for (const auto& name : o.variants) variants.push_back(variant_of(name));
    if (variants.empty()) variants = {Variant::DualMinLLT, Variant::DualMaxLLT};
    std::vector<std::size_t> ns = o.n_values.empty() ? std::vector<std::size_t>{o.n} : o.n_values;
    std::vector<std::size_t> ks = o.k_values.empty() ? std::vector<std::size_t>{o.k} : o.k_values;

    std::ostringstream csv;
    csv << "index,n,m,variant,k,s,kernel_n,bound,answer,kernelize_ms,solve_ms\n";
    std::size_t index = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const std::size_t n = ns[i];
        // one graph per n so rows for different k and variants are comparable
        const LabeledGraph g = identity_labels(generate(family, params_of(o, n), o.seed + i));
        for (std::size_t k : ks) {
            for (Variant variant : variants) {
                RunReport r = solve_report(o, g, variant, k);
                const KernelStats stats = r.kernel.value_or(KernelStats{});
                csv << index << ',' << n << ',' << g.graph.edge_count() << ',' << to_string(variant) << ',' << k
                    << ',' << stats.cover_size << ',' << stats.n_after << ',' << stats.bound << ',' << r.outcome
                    << ',' << r.kernelize_ms << ',' << r.solve_ms << '\n';
                ++index;
            }
        }
    }
    if (o.output.empty()) {
        out << csv.str();
    } else {
        write_text(o.output, csv.str());
    }
    return kExitYes;
}

void add_input(CLI::App* sub, Options& o) {
    sub->add_option("input", o.input, "Graph file ('-' for stdin)");
    sub->add_option("--format", o.format, "Input/output format: edgelist or dimacs (default: detect)");
}

void add_problem(CLI::App* sub, Options& o, bool required) {
    auto* variant = sub->add_option("--variant", o.variant, "min, max, dual-min or dual-max");
    auto* k = sub->add_option("-k", o.k, "Threshold parameter");
    if (required) {
        variant->required();
        k->required();
    }
}

void add_budget(CLI::App* sub, Options& o) {
    sub->add_option("--budget-tuples", o.budget_tuples, "Maximum tuples examined by the tuple solver");
    sub->add_option("--time-limit", o.time_limit, "Solver time limit in seconds");
    sub->add_option("--threads", o.threads, "Worker threads for tuple search")->check(CLI::PositiveNumber);
}

void add_family(CLI::App* sub, Options& o) {
    sub->add_option("--family", o.family, "gnp, path, cycle, star or bounded_cover");
    sub->add_option("--n", o.n, "Vertex count");
    sub->add_option("--p", o.p, "Edge probability");
    sub->add_option("--s", o.s, "Planted cover size (bounded_cover)");
    sub->add_option("--seed", o.seed, "Random seed");
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Kernels and solvers for DFS trees with few or many leaves", "lineal"};
    app.require_subcommand(1);

    auto* kern = app.add_subcommand("kernelize", "Reduce an instance and report the kernel");
    add_input(kern, o);
    add_problem(kern, o, true);
    kern->add_option("--output", o.output, "Write the kernel graph here");
    kern->add_option("--root", o.root_label, "Start vertex (label) of the dual-min search tree")
        ->each([&](const std::string&) { o.root_given = true; });

    auto* solve = app.add_subcommand("solve", "Kernelize, then solve (tuple search or exhaustive on the kernel)");
    add_input(solve, o);
    add_problem(solve, o, true);
    add_budget(solve, o);

    auto* oracle = app.add_subcommand("oracle", "Solve by enumerating every DFS tree");
    add_input(oracle, o);
    add_problem(oracle, o, true);

    auto* verify = app.add_subcommand("verify", "Check a root + parent-array witness");
    add_input(verify, o);
    add_problem(verify, o, false);
    verify->add_option("--witness", o.witness, "Witness JSON (report or {root, parent})")->required();

    auto* gen = app.add_subcommand("gen", "Write a generated graph");
    add_family(gen, o);
    gen->add_option("--format", o.format, "edgelist or dimacs");
    gen->add_option("--output", o.output, "Output file (default: stdout)");

    auto* bench = app.add_subcommand("bench", "Sweep generated instances and emit CSV");
    add_family(bench, o);
    add_budget(bench, o);
    bench->add_option("--n-values", o.n_values, "Vertex counts")->delimiter(',');
    bench->add_option("--k-values", o.k_values, "Parameters")->delimiter(',');
    bench->add_option("--variants", o.variants, "Variants (default: dual-min,dual-max)")->delimiter(',');
    bench->add_option("--output", o.output, "Output file (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << "lineal: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (kern->parsed()) return cmd_kernelize(o, out);
        if (solve->parsed()) return cmd_solve(o, out);
        if (oracle->parsed()) return cmd_oracle(o, out);
        if (verify->parsed()) return cmd_verify(o, out, err);
        if (gen->parsed()) return cmd_gen(o, out);
        if (bench->parsed()) return cmd_bench(o, out);
    } catch (const ParseError& e) {
        err << "lineal: parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const GraphError& e) {
        err << "lineal: parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const UsageError& e) {
        err << "lineal: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GeneratorError& e) {
        err << "lineal: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "lineal: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace lineal::cli
