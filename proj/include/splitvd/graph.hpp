#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace splitvd {

using edge = std::pair<vertex, vertex>;

/// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class graph {
public:
    graph() = default;

    /// Edgeless graph on n vertices.
    explicit graph(std::size_t n) : adj_(n, vertex_set(n)) {}

    /// Duplicate edges collapse. Throws on self-loops and out-of-range endpoints.
    graph(std::size_t n, std::span<const edge> edges) : graph(n) {
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw std::out_of_range("edge endpoint out of range");
            if (u == v)
                throw std::invalid_argument("self-loop");
            adj_[u].insert(v);
            adj_[v].insert(u);
        }
        count_edges();
    }

    graph(std::size_t n, std::initializer_list<edge> edges) : graph(n, std::span<const edge>(edges.begin(), edges.size())) {}

    /// Adopts adjacency rows after checking symmetry, range and loop-freeness.
    static graph from_adjacency(std::vector<vertex_set> rows) {
        const std::size_t n = rows.size();
        for (vertex v = 0; v < n; ++v) {
            if (rows[v].universe() != n)
                throw std::invalid_argument("adjacency row universe mismatch");
            if (rows[v].contains(v))
                throw std::invalid_argument("self-loop");
            for (vertex u : rows[v])
                if (!rows[u].contains(v))
                    throw std::invalid_argument("asymmetric adjacency");
        }
        graph g;
        g.adj_ = std::move(rows);
        g.count_edges();
        return g;
    }

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return m_; }

    bool adjacent(vertex u, vertex v) const { return adj_.at(u).contains(v); }
    const vertex_set& neighbors(vertex v) const { return adj_.at(v); }
    std::size_t degree(vertex v) const { return adj_.at(v).size(); }

    vertex_set closed_neighbors(vertex v) const {
        auto s = adj_.at(v);
        s.insert(v);
        return s;
    }

    vertex_set vertices() const { return vertex_set::full(num_vertices()); }
    vertex_set empty_set() const { return vertex_set(num_vertices()); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<edge> edges() const {
        std::vector<edge> out;
        out.reserve(m_);
        for (vertex u = 0; u < adj_.size(); ++u)
            for (vertex v : adj_[u])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const graph& a, const graph& b) { return a.adj_ == b.adj_; }

private:
    void count_edges() {
        std::size_t twice = 0;
        for (const auto& row : adj_)
            twice += row.size();
        m_ = twice / 2;
    }

    std::vector<vertex_set> adj_;
    std::size_t m_ = 0;
};

/// Induced subgraph together with the map from new ids back to ids of the parent graph.
struct induced_result {
    graph g;
    std::vector<vertex> to_parent;

    /// Maps a set over the subgraph back to the parent's universe.
    vertex_set lift(const vertex_set& s, std::size_t parent_universe) const {
        vertex_set out(parent_universe);
        for (vertex v : s)
            out.insert(to_parent.at(v));
        return out;
    }
};

inline induced_result induced_subgraph(const graph& g, const vertex_set& keep) {
    if (keep.universe() != g.num_vertices())
        throw std::out_of_range("vertex set universe does not match graph");
    induced_result r;
    r.to_parent = keep.to_vector();
    const std::size_t k = r.to_parent.size();
    std::vector<vertex> to_child(g.num_vertices(), 0);
    for (vertex i = 0; i < k; ++i)
        to_child[r.to_parent[i]] = i;
    std::vector<vertex_set> rows(k, vertex_set(k));
    for (vertex i = 0; i < k; ++i)
        for (vertex u : g.neighbors(r.to_parent[i]) & keep)
            rows[i].insert(to_child[u]);
    r.g = graph::from_adjacency(std::move(rows));
    return r;
}

inline graph complement(const graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<vertex_set> rows;
    rows.reserve(n);
    for (vertex v = 0; v < n; ++v) {
        auto row = ~g.neighbors(v);
        row.erase(v);
        rows.push_back(std::move(row));
    }
    return graph::from_adjacency(std::move(rows));
}

/// Vertices of b are shifted by a.num_vertices(); no edges across.
inline graph disjoint_union(const graph& a, const graph& b) {
    const std::size_t na = a.num_vertices();
    const std::size_t n = na + b.num_vertices();
    std::vector<vertex_set> rows(n, vertex_set(n));
    for (vertex v = 0; v < na; ++v)
        for (vertex u : a.neighbors(v))
            rows[v].insert(u);
    for (vertex v = 0; v < b.num_vertices(); ++v)
        for (vertex u : b.neighbors(v))
            rows[na + v].insert(static_cast<vertex>(na + u));
    return graph::from_adjacency(std::move(rows));
}

inline graph complete_graph(std::size_t n) { return complement(graph(n)); }

inline bool is_clique(const graph& g, const vertex_set& s) {
    if (s.universe() != g.num_vertices())
        throw std::out_of_range("vertex set universe does not match graph");
    const std::size_t want = s.size() - 1;
    for (vertex v : s)
        if (g.neighbors(v).intersection_size(s) != want)
            return false;
    return true;
}

inline bool is_independent(const graph& g, const vertex_set& s) {
    if (s.universe() != g.num_vertices())
        throw std::out_of_range("vertex set universe does not match graph");
    for (vertex v : s)
        if (g.neighbors(v).intersects(s))
            return false;
    return true;
}

} // namespace splitvd
