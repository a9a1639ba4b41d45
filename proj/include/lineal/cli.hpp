#pragma once

#include "lineal/io.hpp"
#include "lineal/kernelize.hpp"
#include "lineal/solve.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lineal::cli {

enum ExitCode : int {
    kExitYes = 0,
    kExitNo = 1,
    kExitUndecided = 2,
    kExitUsage = 64,
    kExitParse = 65,
};

struct WitnessRecord {
    Label root = 0;
    /// (child, parent) label pairs ordered by child vertex id.
    std::vector<std::pair<Label, Label>> parent;
};

struct RunReport {
    std::string instance;
    Variant variant = Variant::MinLLT;
    std::size_t k = 0;
    std::string outcome = "undecided";  // yes | no | undecided
    std::string reason;
    std::string solver;
    std::optional<WitnessRecord> witness;
    std::optional<KernelStats> kernel;
    std::optional<std::size_t> kernel_k;
    std::optional<LabeledGraph> kernel_graph;
    std::uint64_t tuples_examined = 0;
    double kernelize_ms = 0.0;
    double solve_ms = 0.0;
};

/// Timings live under "timings_ms" only, so reports from identical runs
/// differ in nothing else.
nlohmann::json to_json(const RunReport& report);

WitnessRecord witness_record(const LabeledGraph& g, const RootedTree& t);

/// Inverse of witness_record; throws ParseError on unknown labels or
/// malformed links.
RootedTree witness_from_json(const LabeledGraph& g, const nlohmann::json& doc);

/// Entry point behind the `lineal` executable. `args` excludes the program
/// name. Machine output goes to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lineal::cli
