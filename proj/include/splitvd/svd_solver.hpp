#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <vector>

#include "graph.hpp"
#include "instance.hpp"
#include "oracle.hpp"
#include "partition_gen.hpp"
#include "split_recognition.hpp"
#include "svd_kernel.hpp"
#include "vc_solver.hpp"

namespace splitvd {

/// Deleted vertices plus a certificate for what remains. The certificate's sides live in the
/// input graph's universe and exclude the deleted vertices.
struct deletion_solution {
    vertex_set deleted;
    split_certificate certificate;
};

enum class engine { partition, baseline, oracle };

inline std::string_view to_string(engine e) {
    switch (e) {
    case engine::partition:
        return "partition";
    case engine::baseline:
        return "baseline";
    case engine::oracle:
        return "oracle";
    }
    return "?";
}

struct solve_options {
    engine method = engine::partition;
    bool kernelize = true;
    /// Skip generator states whose committed sides alone already need more than the budget.
    bool prune = true;
    unsigned threads = 1;
};

struct solve_stats {
    std::uint64_t partitions_tried = 0;
    std::uint64_t vc_calls = 0;
    std::uint64_t prune_checks = 0;
    std::uint64_t generator_nodes = 0;
    std::uint64_t pruned_states = 0;
    std::uint64_t baseline_nodes = 0;
    std::size_t max_depth = 0;
    bool kernel_ran = false;
    kernel_verdict kernel_outcome = kernel_verdict::reduced;
    kernel_stats kernel;
    double kernel_ms = 0;
    double search_ms = 0;
    double elapsed_ms = 0;
};

struct solve_outcome {
    std::optional<deletion_solution> solution;
    solve_stats stats;

    bool feasible() const { return solution.has_value(); }
};

/// Vertex Cover instance for one partition: complement(G[V_C]) followed by G[V_I].
struct vc_reduction {
    graph g;
    std::size_t budget = 0;
    /// Vertex i of g stands for vertex to_original[i] of the input graph.
    std::vector<vertex> to_original;

    vertex_set lift(const vertex_set& cover, std::size_t universe) const {
        vertex_set out(universe);
        for (vertex v : cover)
            out.insert(to_original.at(v));
        return out;
    }
};

/// A cover of the result within budget is exactly a deletion set that leaves V_C a clique and
/// V_I an independent set.
inline vc_reduction build_vc_instance(const graph& g, const partition& p, std::size_t budget) {
    if (p.clique_side.intersects(p.independent_side))
        throw std::invalid_argument("partition sides overlap");
    auto c = induced_subgraph(g, p.clique_side);
    auto i = induced_subgraph(g, p.independent_side);
    vc_reduction r;
    r.g = disjoint_union(complement(c.g), i.g);
    r.budget = budget;
    r.to_original = std::move(c.to_parent);
    r.to_original.insert(r.to_original.end(), i.to_parent.begin(), i.to_parent.end());
    return r;
}

/// Reverse reduction from Vertex Cover: G plus a disjoint clique on k + 2 vertices.
inline svd_instance vc_to_svd_reduction(const graph& g, std::size_t k) {
    return {disjoint_union(g, complete_graph(k + 2)), k};
}

namespace detail {

using clock = std::chrono::steady_clock;

inline double ms_since(clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
}

inline deletion_solution certify(const graph& g, const vertex_set& deleted) {
    auto rest = induced_subgraph(g, g.vertices() - deleted);
    auto rec = recognize_split(rest.g);
    const auto* cert = std::get_if<split_certificate>(&rec);
    if (!cert)
        throw std::logic_error("deletion set does not leave a split graph");
    return {deleted, {rest.lift(cert->clique_side, g.num_vertices()), rest.lift(cert->independent_side, g.num_vertices())}};
}

/// Deletion set of size <= budget making `clique_part` a clique and `indep_part` independent,
/// never deleting a vertex of `undeletable`.
inline std::optional<vertex_set> solve_sides(const graph& g, const partition& sides, std::size_t budget,
                                             const vertex_set& undeletable, std::atomic<std::uint64_t>& vc_calls) {
    auto red = build_vc_instance(g, sides, budget);
    const std::size_t m = red.g.num_vertices();
    vertex_set fixed(m);
    for (vertex i = 0; i < m; ++i)
        if (undeletable.contains(red.to_original[i]))
            fixed.insert(i);
    vertex_set forced(m);
    for (vertex i : fixed) {
        if (red.g.neighbors(i).intersects(fixed))
            return std::nullopt;
        forced |= red.g.neighbors(i);
    }
    if (forced.size() > budget)
        return std::nullopt;
    auto rest = induced_subgraph(red.g, ~(fixed | forced));
    vc_calls.fetch_add(1, std::memory_order_relaxed);
    auto cover = vc_solve(rest.g, budget - forced.size());
    if (!cover)
        return std::nullopt;
    forced |= rest.lift(*cover, m);
    return red.lift(forced, g.num_vertices());
}

/// Runs the partition engine on g with the given budget.
inline std::optional<vertex_set> partition_search(const graph& g, std::size_t budget, const vertex_set& undeletable,
                                                  const solve_options& opts, solve_stats& stats) {
    std::atomic<bool> done{false};
    std::mutex mu;
    std::optional<vertex_set> found;
    std::atomic<std::uint64_t> tried{0}, vc_calls{0}, prune_checks{0}, prune_vc_calls{0};

    auto visit = [&](const partition& p) {
        if (done.load(std::memory_order_relaxed))
            return false;
        tried.fetch_add(1, std::memory_order_relaxed);
        if (auto d = solve_sides(g, p, budget, undeletable, vc_calls)) {
            std::lock_guard lock(mu);
            if (!found)
                found = std::move(d);
            done = true;
            return false;
        }
        return true;
    };
    auto prune = [&](const generator_state& s) {
        if (done.load(std::memory_order_relaxed))
            return true;
        if (!opts.prune || s.depth == 0)
            return false;
        prune_checks.fetch_add(1, std::memory_order_relaxed);
        partition committed{s.assigned_clique, s.assigned_independent};
        return !solve_sides(g, committed, budget, undeletable, prune_vc_calls).has_value();
    };

    generation_stats gen;
    if (opts.threads <= 1) {
        gen = generate_partitions(g, visit, prune);
    } else {
        // root emissions first, then the root's subtrees are shared among workers
        auto root = root_state(g);
        ++gen.nodes;
        gen.emitted += 2;
        if (visit(partition{root.active, root.assigned_independent}) &&
            visit(partition{root.assigned_clique, root.active})) {
            auto children = root_children(g);
            if (!children.empty()) {
                gen.branched = true;
                gen.max_branching_depth = 0;
            }
            std::atomic<std::size_t> next{0};
            std::vector<generation_stats> per_worker(opts.threads);
            std::vector<std::thread> workers;
            for (unsigned t = 0; t < opts.threads; ++t)
                workers.emplace_back([&, t] {
                    for (;;) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= children.size() || done.load())
                            return;
                        generate_from(g, children[i], visit, per_worker[t], prune);
                    }
                });
            for (auto& w : workers)
                w.join();
            for (const auto& s : per_worker)
                gen.merge(s);
        }
    }
    stats.partitions_tried += tried.load();
    stats.vc_calls += vc_calls.load();
    stats.prune_checks += prune_checks.load();
    stats.generator_nodes += gen.nodes;
    stats.pruned_states += gen.pruned;
    stats.max_depth = std::max(stats.max_depth, gen.max_depth);
    return found;
}

inline bool baseline_branch(const graph& g, vertex_set& alive, std::size_t budget, vertex_set& deleted,
                            solve_stats& stats) {
    ++stats.baseline_nodes;
    auto w = find_forbidden_subgraph(g, alive);
    if (!w)
        return true;
    if (budget == 0)
        return false;
    for (vertex v : w->vertices) {
        alive.erase(v);
        deleted.insert(v);
        if (baseline_branch(g, alive, budget - 1, deleted, stats))
            return true;
        deleted.erase(v);
        alive.insert(v);
    }
    return false;
}

} // namespace detail

/// Branching on forbidden induced subgraphs: delete one of the at most five vertices of the
/// first 2K2, C4 or C5 found and recurse with one less budget.
inline solve_outcome svd_solve_baseline(const svd_instance& inst) {
    auto t0 = detail::clock::now();
    solve_outcome out;
    vertex_set alive = inst.g.vertices();
    vertex_set deleted = inst.g.empty_set();
    if (detail::baseline_branch(inst.g, alive, inst.budget, deleted, out.stats))
        out.solution = detail::certify(inst.g, deleted);
    out.stats.search_ms = out.stats.elapsed_ms = detail::ms_since(t0);
    return out;
}

/// Ground truth by exhaustive search (n <= 12).
inline solve_outcome svd_solve_oracle(const svd_instance& inst) {
    auto t0 = detail::clock::now();
    solve_outcome out;
    auto ans = oracle_min_svd(inst.g);
    if (ans.minimum <= inst.budget)
        out.solution = detail::certify(inst.g, ans.witness);
    out.stats.search_ms = out.stats.elapsed_ms = detail::ms_since(t0);
    return out;
}

/// Kernelize (optional), then stream partitions; for each one solve Vertex Cover on
/// complement(G[V_C]) + G[V_I] and stop at the first cover within budget. The deletion set is
/// lifted back through the kernel and certified by recognition on the remaining graph.
inline solve_outcome svd_solve_partition(const svd_instance& inst, const solve_options& opts = {}) {
    auto t0 = detail::clock::now();
    solve_outcome out;
    const graph& g = inst.g;
    const std::size_t n = g.num_vertices();

    if (inst.budget >= n) {
        out.solution = detail::certify(g, g.vertices());
        out.stats.elapsed_ms = detail::ms_since(t0);
        return out;
    }

    if (opts.kernelize) {
        auto tk = detail::clock::now();
        auto kr = svd_kernelize(inst);
        out.stats.kernel_ms = detail::ms_since(tk);
        out.stats.kernel_ran = true;
        out.stats.kernel_outcome = kr.verdict;
        out.stats.kernel = kr.stats;
        if (kr.verdict == kernel_verdict::no) {
            out.stats.elapsed_ms = detail::ms_since(t0);
            return out;
        }
        if (kr.verdict == kernel_verdict::yes) {
            out.solution = detail::certify(g, kr.forced_deletions);
            out.stats.elapsed_ms = detail::ms_since(t0);
            return out;
        }
        auto ts = detail::clock::now();
        auto d = detail::partition_search(kr.reduced.g, kr.reduced.budget, kr.undeletable, opts, out.stats);
        out.stats.search_ms = detail::ms_since(ts);
        if (d)
            out.solution = detail::certify(g, kr.lift(*d));
    } else {
        auto ts = detail::clock::now();
        auto d = detail::partition_search(g, inst.budget, g.empty_set(), opts, out.stats);
        out.stats.search_ms = detail::ms_since(ts);
        if (d)
            out.solution = detail::certify(g, *d);
    }
    out.stats.elapsed_ms = detail::ms_since(t0);
    return out;
}

inline solve_outcome svd_solve(const svd_instance& inst, const solve_options& opts = {}) {
    switch (opts.method) {
    case engine::partition:
        return svd_solve_partition(inst, opts);
    case engine::baseline:
        return svd_solve_baseline(inst);
    case engine::oracle:
        return svd_solve_oracle(inst);
    }
    throw std::invalid_argument("unknown engine");
}

/// Smallest budget with a solution, trying k = 0, 1, 2, ...; stats accumulate over all attempts.
inline std::pair<std::size_t, solve_outcome> svd_minimize(const graph& g, const solve_options& opts = {}) {
    solve_stats total;
    for (std::size_t k = 0;; ++k) {
        auto out = svd_solve({g, k}, opts);
        total.partitions_tried += out.stats.partitions_tried;
        total.vc_calls += out.stats.vc_calls;
        total.prune_checks += out.stats.prune_checks;
        total.generator_nodes += out.stats.generator_nodes;
        total.pruned_states += out.stats.pruned_states;
        total.baseline_nodes += out.stats.baseline_nodes;
        total.max_depth = std::max(total.max_depth, out.stats.max_depth);
        total.kernel_ran = total.kernel_ran || out.stats.kernel_ran;
        total.kernel_outcome = out.stats.kernel_outcome;
        total.kernel = out.stats.kernel;
        total.kernel_ms += out.stats.kernel_ms;
        total.search_ms += out.stats.search_ms;
        total.elapsed_ms += out.stats.elapsed_ms;
        if (out.feasible()) {
            out.stats = total;
            return {k, std::move(out)};
        }
    }
}

} // namespace splitvd
