#include "lineal/solve.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace lineal {

std::optional<RootedTree> dual_min_tuple_accepts(const Graph& g, std::span<const Vertex> tuple) {
    auto partial = tree_respecting_ordering(g, tuple);
    if (partial && extendable_all_internal(g, *partial)) return partial;
    return std::nullopt;
}

std::optional<RootedTree> dual_max_tuple_accepts(const Graph& g, std::span<const Vertex> tuple) {
    auto partial = tree_respecting_ordering(g, tuple);
    if (partial && extendable_all_leaves(g, *partial)) return partial;
    return std::nullopt;
}

namespace {

using Acceptor = std::optional<RootedTree> (*)(const Graph&, std::span<const Vertex>);

struct TupleHit {
    std::vector<Vertex> tuple;
    RootedTree partial;
};

// Lexicographic search over ordered k-tuples of distinct vertices. Tuples in
// which some vertex has no neighbor among its predecessors are skipped: no
// DFS tree can discover a vertex before its parent.
class TupleSearch {
public:
    TupleSearch(const Graph& g, std::size_t k, const SolverBudget& budget, Acceptor accept)
        : g_(g), k_(k), budget_(budget), accept_(accept),
          deadline_(std::chrono::steady_clock::now() + budget.time_limit) {}

    std::optional<TupleHit> run() {
        const std::size_t n = g_.vertex_count();
        const unsigned workers = std::max(1u, std::min<unsigned>(budget_.threads, static_cast<unsigned>(n)));
        std::vector<std::optional<TupleHit>> hits(n);
        std::atomic<Vertex> next_first{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;

        auto work = [&] {
            Worker w(*this);
            try {
                for (Vertex first = next_first++; first < n; first = next_first++) {
                    if (first > best_first_.load()) break;
                    if (auto hit = w.search_from(first)) {
                        hits[first] = std::move(hit);
                        Vertex current = best_first_.load();
                        while (first < current && !best_first_.compare_exchange_weak(current, first)) {
                        }
                    }
                    if (abort_.load()) break;
                }
            } catch (...) {
                abort_ = true;
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        };

        if (workers == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
            for (auto& t : pool) t.join();
        }
        if (failure) std::rethrow_exception(failure);
        Vertex best = best_first_.load();
        if (best == kNoVertex) return std::nullopt;
        return std::move(hits[best]);
    }

    std::uint64_t examined() const { return examined_.load(); }

private:
    class Worker {
    public:
        explicit Worker(TupleSearch& s)
            : s_(s), used_(s.g_.vertex_count(), false), linked_(s.g_.vertex_count(), 0) {}

        std::optional<TupleHit> search_from(Vertex first) {
            tuple_.clear();
            push(first);
            auto hit = extend(first);
            pop();
            return hit;
        }

    private:
        std::optional<TupleHit> extend(Vertex first) {
            if (tuple_.size() == s_.k_) return evaluate();
            if (s_.abort_.load() || s_.best_first_.load() < first) return std::nullopt;
            for (Vertex v = 0; v < s_.g_.vertex_count(); ++v) {
                if (used_[v] || linked_[v] == 0) continue;
                push(v);
                auto hit = extend(first);
                pop();
                if (hit) return hit;
            }
            return std::nullopt;
        }

        std::optional<TupleHit> evaluate() {
            const std::uint64_t count = ++s_.examined_;
            if (count > s_.budget_.max_tuple_count) {
                throw BudgetExhausted("tuple budget of " + std::to_string(s_.budget_.max_tuple_count) +
                                      " exhausted");
            }
            if ((count & 1023u) == 0 && std::chrono::steady_clock::now() > s_.deadline_) {
                throw BudgetExhausted("time limit exhausted after " + std::to_string(count) + " tuples");
            }
            if (auto partial = s_.accept_(s_.g_, tuple_)) return TupleHit{tuple_, std::move(*partial)};
            return std::nullopt;
        }

        void push(Vertex v) {
            tuple_.push_back(v);
            used_[v] = true;
            for (Vertex w : s_.g_.neighbors(v)) ++linked_[w];
        }

        void pop() {
            Vertex v = tuple_.back();
            tuple_.pop_back();
            used_[v] = false;
            for (Vertex w : s_.g_.neighbors(v)) --linked_[w];
        }

        TupleSearch& s_;
        std::vector<Vertex> tuple_;
        std::vector<bool> used_;
        std::vector<std::uint32_t> linked_;
    };

    const Graph& g_;
    std::size_t k_;
    const SolverBudget& budget_;
    Acceptor accept_;
    std::chrono::steady_clock::time_point deadline_;
    std::atomic<std::uint64_t> examined_{0};
    std::atomic<Vertex> best_first_{kNoVertex};
    std::atomic<bool> abort_{false};
};

void check_witness(const Graph& g, const RootedTree& witness, Variant variant, std::size_t k) {
    if (!is_dfs_tree(g, witness) ||
        !meets_threshold(variant, k, g.vertex_count(), internal_vertices(witness).size())) {
        throw std::logic_error("constructed witness fails validation");
    }
}

} // namespace

Decision solve_dual_min_xp(const Graph& g, std::size_t k, const SolverBudget& budget) {
    const std::size_t n = g.vertex_count();
    Decision d;
    if (n == 0 || !is_connected(g)) return d;
    if (k == 0) {
        d.answer = true;
        d.witness = dfs_any(g, 0);
        return d;
    }
    // a tree on n <= k vertices has at most n - 1 < k internal vertices
    if (n <= k) return d;

    TupleSearch search(g, k, budget, &dual_min_tuple_accepts);
    auto hit = search.run();
    d.tuples_examined = search.examined();
    if (!hit) return d;
    d.answer = true;
    d.accepted_tuple = std::move(hit->tuple);
    d.witness = extend_to_dfs_tree(g, hit->partial);
    check_witness(g, *d.witness, Variant::DualMinLLT, k);
    return d;
}

Decision solve_dual_max_xp(const Graph& g, std::size_t k, const SolverBudget& budget) {
    const std::size_t n = g.vertex_count();
    Decision d;
    if (n == 0 || !is_connected(g)) return d;
    if (n <= k || n == 1) {
        d.answer = true;
        d.witness = dfs_any(g, 0);
        return d;
    }
    // n >= 2 from here, so every DFS tree has an internal vertex
    if (k == 0) return d;

    TupleSearch search(g, k, budget, &dual_max_tuple_accepts);
    auto hit = search.run();
    d.tuples_examined = search.examined();
    if (!hit) return d;
    d.answer = true;
    d.accepted_tuple = std::move(hit->tuple);

    RootedTree witness = hit->partial;
    AncestorIndex idx(hit->partial);
    for (Vertex v = 0; v < n; ++v) {
        if (hit->partial.covers(v)) continue;
        auto nbrs = g.neighbors(v);
        Vertex anchor = *std::max_element(nbrs.begin(), nbrs.end(),
                                          [&](Vertex a, Vertex b) { return idx.depth_key(a) < idx.depth_key(b); });
        witness.attach(v, anchor);
    }
    check_witness(g, witness, Variant::DualMaxLLT, k);
    d.witness = std::move(witness);
    return d;
}

Decision solve_dual_fpt(const ProblemInstance& inst, const SolverBudget& budget) {
    if (inst.variant != Variant::DualMinLLT && inst.variant != Variant::DualMaxLLT)
        throw std::invalid_argument("solve_dual_fpt handles the dual variants only");
    return solve_dual_fpt(inst, kernelize(inst), budget);
}

Decision solve_dual_fpt(const ProblemInstance& inst, const KernelOutcome& outcome, const SolverBudget& budget) {
    if (outcome.decided()) {
        Decision d;
        d.answer = outcome.decision().answer;
        // the dual-min kernel says yes after finding a plain DFS tree with
        // enough internal vertices; rebuild one as the witness
        if (d.answer && inst.variant == Variant::DualMinLLT) {
            for (Vertex r = 0; r < inst.graph.vertex_count() && !d.witness; ++r) {
                RootedTree t = dfs_any(inst.graph, r);
                if (internal_vertices(t).size() >= inst.k) d.witness = std::move(t);
            }
            if (d.witness) check_witness(inst.graph, *d.witness, inst.variant, inst.k);
        }
        return d;
    }
    const Reduced& red = outcome.reduced();
    Decision d = inst.variant == Variant::DualMinLLT ? solve_dual_min_xp(red.instance.graph, red.instance.k, budget)
                                                     : solve_dual_max_xp(red.instance.graph, red.instance.k, budget);
    for (Vertex& v : d.accepted_tuple) v = red.trace.survivors[v];
    if (d.witness) {
        d.witness = lift_tree(inst.graph, red.trace, *d.witness);
        check_witness(inst.graph, *d.witness, inst.variant, inst.k);
    }
    return d;
}

Decision solve_exact_oracle(const ProblemInstance& inst, const SolverBudget& budget) {
    const std::size_t n = inst.graph.vertex_count();
    Decision d;
    for_each_dfs_tree(inst.graph, [&](const RootedTree& t) {
        if (!meets_threshold(inst.variant, inst.k, n, internal_vertices(t).size())) return true;
        d.answer = true;
        d.witness = t;
        return false;
    }, budget.oracle_vertex_limit);
    return d;
}

} // namespace lineal
