#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace splitvd {

struct vc_stats {
    std::uint64_t search_nodes = 0;
    std::uint64_t folds = 0;
};

enum class vc_kernel_verdict { reduced, no };

/// Result of the degree-0 / degree-1 / high-degree rules applied to a fixed point.
struct vc_kernel_result {
    vc_kernel_verdict verdict = vc_kernel_verdict::reduced;
    induced_result reduced;
    std::size_t reduced_budget = 0;
    /// Vertices of the input graph that every cover within budget may be assumed to contain.
    vertex_set forced;
};

namespace detail {

/// Mutable working copy for branch-and-reduce. Adjacency rows only ever contain live vertices.
/// Degree-2 folds reuse the slot of one neighbour for the merged vertex.
class vc_work {
public:
    vc_work(const graph& g, std::size_t budget)
        : adj_(g.num_vertices(), vertex_set(g.num_vertices())), alive_(g.vertices()), cover_(g.empty_set()),
          budget_(static_cast<std::int64_t>(budget)) {
        for (vertex v = 0; v < g.num_vertices(); ++v)
            adj_[v] = g.neighbors(v);
    }

    std::int64_t budget() const { return budget_; }
    const vertex_set& alive() const { return alive_; }
    const vertex_set& neighbors(vertex v) const { return adj_[v]; }

    void take(vertex x) {
        cover_.insert(x);
        drop(x);
        --budget_;
    }

    void take_all(const vertex_set& s) {
        for (vertex x : s)
            take(x);
    }

    /// Low-degree and high-degree rules to a fixed point; optionally degree-2 folding.
    /// Returns false when the budget is provably insufficient.
    bool reduce(bool allow_fold, vc_stats* stats) {
        for (;;) {
            if (budget_ < 0)
                return false;
            bool changed = false;
            for (vertex v : alive_) {
                if (!alive_.contains(v))
                    continue;
                const std::size_t d = adj_[v].size();
                if (d == 0) {
                    alive_.erase(v);
                } else if (d == 1) {
                    take(adj_[v].first());
                    changed = true;
                } else if (static_cast<std::int64_t>(d) > budget_) {
                    take(v);
                    changed = true;
                }
                if (budget_ < 0)
                    return false;
            }
            if (changed)
                continue;

            std::size_t twice_edges = 0;
            for (vertex v : alive_)
                twice_edges += adj_[v].size();
            // every vertex now has degree <= budget
            if (twice_edges / 2 > static_cast<std::size_t>(budget_ * budget_))
                return false;

            if (!allow_fold)
                return true;
            for (vertex v : alive_) {
                if (adj_[v].size() != 2)
                    continue;
                auto it = adj_[v].begin();
                vertex u = *it++;
                vertex w = *it;
                if (adj_[u].contains(w)) {
                    take(u);
                    take(w);
                } else {
                    fold(v, u, w);
                    if (stats)
                        ++stats->folds;
                }
                changed = true;
                break;
            }
            if (!changed)
                return true;
        }
    }

    /// Vertex of maximum degree, smallest id on ties.
    vertex max_degree_vertex() const {
        vertex best = static_cast<vertex>(adj_.size());
        std::size_t best_deg = 0;
        for (vertex v : alive_)
            if (adj_[v].size() > best_deg) {
                best = v;
                best_deg = adj_[v].size();
            }
        return best;
    }

    bool edgeless() const {
        for (vertex v : alive_)
            if (!adj_[v].empty())
                return false;
        return true;
    }

    /// Cover in the ids of the original graph, undoing folds latest first.
    vertex_set unfolded_cover() const {
        vertex_set c = cover_;
        for (auto it = folds_.rbegin(); it != folds_.rend(); ++it) {
            if (c.contains(it->u))
                c.insert(it->w);
            else
                c.insert(it->v);
        }
        return c;
    }

    const vertex_set& raw_cover() const { return cover_; }

private:
    struct fold_record {
        vertex v, u, w;
    };

    void drop(vertex x) {
        for (vertex y : adj_[x])
            adj_[y].erase(x);
        adj_[x].clear();
        alive_.erase(x);
    }

    // v has exactly the non-adjacent neighbours u and w; u's slot becomes the merged vertex.
    void fold(vertex v, vertex u, vertex w) {
        auto merged = adj_[u] | adj_[w];
        merged.erase(v);
        merged.erase(u);
        merged.erase(w);
        drop(v);
        drop(w);
        for (vertex y : adj_[u])
            adj_[y].erase(u);
        adj_[u] = merged;
        for (vertex y : merged)
            adj_[y].insert(u);
        folds_.push_back({v, u, w});
        --budget_;
    }

    std::vector<vertex_set> adj_;
    vertex_set alive_;
    vertex_set cover_;
    std::vector<fold_record> folds_;
    std::int64_t budget_;
};

inline std::optional<vertex_set> vc_branch(vc_work w, vc_stats* stats) {
    if (stats)
        ++stats->search_nodes;
    if (!w.reduce(true, stats))
        return std::nullopt;
    if (w.edgeless())
        return w.unfolded_cover();
    // after reduction every live vertex with an edge has degree >= 3
    vertex v = w.max_degree_vertex();
    {
        vc_work take_v = w;
        take_v.take(v);
        if (auto r = vc_branch(std::move(take_v), stats))
            return r;
    }
    auto nb = w.neighbors(v);
    if (static_cast<std::int64_t>(nb.size()) > w.budget())
        return std::nullopt;
    w.take_all(nb);
    return vc_branch(std::move(w), stats);
}

} // namespace detail

/// Decides whether g has a vertex cover of at most `budget` vertices and returns one.
/// Branch-and-reduce: degree-0/1 and high-degree rules, an edge-count bound, degree-2 folding
/// (triangles take both neighbours), then branching on a maximum-degree vertex v: take v, or take N(v).
inline std::optional<vertex_set> vc_solve(const graph& g, std::size_t budget, vc_stats* stats = nullptr) {
    return detail::vc_branch(detail::vc_work(g, budget), stats);
}

/// Smallest cover, found by increasing the budget.
inline vertex_set vc_minimum(const graph& g) {
    for (std::size_t k = 0;; ++k)
        if (auto c = vc_solve(g, k))
            return *c;
}

inline bool is_vertex_cover(const graph& g, const vertex_set& c) {
    for (auto [u, v] : g.edges())
        if (!c.contains(u) && !c.contains(v))
            return false;
    return true;
}

inline vc_kernel_result vc_kernelize(const graph& g, std::size_t budget) {
    detail::vc_work w(g, budget);
    vc_kernel_result r;
    r.forced = w.raw_cover();
    if (!w.reduce(false, nullptr)) {
        r.verdict = vc_kernel_verdict::no;
        r.forced = w.raw_cover();
        return r;
    }
    r.forced = w.raw_cover();
    vertex_set keep = g.empty_set();
    for (vertex v : w.alive())
        if (!w.neighbors(v).empty())
            keep.insert(v);
    r.reduced = induced_subgraph(g, keep);
    r.reduced_budget = static_cast<std::size_t>(w.budget());
    return r;
}

} // namespace splitvd
