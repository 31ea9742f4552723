#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <limits>
#include <random>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "instance.hpp"

// Brute-force ground truth and instance generators. Nothing here calls the solvers it is
// meant to check.

namespace splitvd {

struct oracle_answer {
    std::size_t minimum = 0;
    vertex_set witness;
};

namespace detail {

inline std::vector<std::uint32_t> mask_adjacency(const graph& g) {
    std::vector<std::uint32_t> adj(g.num_vertices(), 0);
    for (vertex v = 0; v < g.num_vertices(); ++v)
        for (vertex u : g.neighbors(v))
            adj[v] |= std::uint32_t{1} << u;
    return adj;
}

inline vertex_set from_mask(std::size_t n, std::uint32_t mask) {
    vertex_set s(n);
    for (vertex v = 0; v < n; ++v)
        if (mask >> v & 1U)
            s.insert(v);
    return s;
}

/// Calls f(mask) for every n-bit mask with exactly k bits set, in increasing numeric order.
template <class F>
bool for_each_mask_of_size(std::size_t n, std::size_t k, F&& f) {
    if (k > n)
        return true;
    if (k == 0)
        return f(std::uint32_t{0});
    std::uint32_t m = (std::uint32_t{1} << k) - 1;
    const std::uint32_t limit = std::uint32_t{1} << n;
    while (m < limit) {
        if (!f(m))
            return false;
        std::uint32_t c = m & -m;
        std::uint32_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return true;
}

} // namespace detail

/// Exact minimum number of deletions leaving a split graph, by trying deletion sets in order of
/// size and testing every clique/independent bipartition of the remainder. n <= 12.
inline oracle_answer oracle_min_svd(const graph& g) {
    const std::size_t n = g.num_vertices();
    if (n > 12)
        throw std::invalid_argument("split deletion oracle limited to 12 vertices");
    const auto adj = detail::mask_adjacency(g);
    const std::uint32_t size = std::uint32_t{1} << n;
    std::vector<char> clique(size, 1), independent(size, 1);
    for (std::uint32_t m = 1; m < size; ++m) {
        auto low = static_cast<std::size_t>(std::countr_zero(m));
        std::uint32_t rest = m & (m - 1);
        clique[m] = clique[rest] && (adj[low] & rest) == rest;
        independent[m] = independent[rest] && (adj[low] & rest) == 0;
    }
    auto split = [&](std::uint32_t x) {
        for (std::uint32_t c = x;; c = (c - 1) & x) {
            if (clique[c] && independent[x ^ c])
                return true;
            if (c == 0)
                return false;
        }
    };
    const std::uint32_t full = size - 1;
    for (std::size_t k = 0; k <= n; ++k) {
        std::optional<std::uint32_t> hit;
        detail::for_each_mask_of_size(n, k, [&](std::uint32_t d) {
            if (split(full ^ d)) {
                hit = d;
                return false;
            }
            return true;
        });
        if (hit)
            return {k, detail::from_mask(n, *hit)};
    }
    throw std::logic_error("unreachable: the empty graph is split");
}

/// Exact minimum vertex cover by subset enumeration in order of size. n <= 14.
inline oracle_answer oracle_min_vc(const graph& g) {
    const std::size_t n = g.num_vertices();
    if (n > 14)
        throw std::invalid_argument("vertex cover oracle limited to 14 vertices");
    std::vector<std::uint32_t> edge_masks;
    for (auto [u, v] : g.edges())
        edge_masks.push_back((std::uint32_t{1} << u) | (std::uint32_t{1} << v));
    for (std::size_t k = 0; k <= n; ++k) {
        std::optional<std::uint32_t> hit;
        detail::for_each_mask_of_size(n, k, [&](std::uint32_t c) {
            for (auto e : edge_masks)
                if ((e & c) == 0)
                    return true;
            hit = c;
            return false;
        });
        if (hit)
            return {k, detail::from_mask(n, *hit)};
    }
    throw std::logic_error("unreachable: all vertices form a cover");
}

/// Every labeled graph on n <= 6 vertices, ordered by edge bitmask; bit i of the mask is the
/// i-th pair (u, v), u < v, in lexicographic order. visit may return false to stop.
template <class Visit>
void enumerate_small_graphs(std::size_t n, Visit&& visit) {
    if (n > 6)
        throw std::invalid_argument("labeled graph enumeration limited to 6 vertices");
    std::vector<edge> pairs;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    const std::uint64_t count = std::uint64_t{1} << pairs.size();
    std::vector<edge> edges;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        edges.clear();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1U)
                edges.push_back(pairs[i]);
        graph g(n, edges);
        if constexpr (std::is_void_v<std::invoke_result_t<Visit&, const graph&>>) {
            visit(std::as_const(g));
        } else {
            if (!visit(std::as_const(g)))
                return;
        }
    }
}

struct planted_spec {
    std::size_t split_core_size = 0;
    std::size_t noise = 0;
};

struct random_instance_spec {
    std::size_t n = 0;
    double edge_probability = 0.5;
    /// When set, split_core_size + noise must equal n.
    std::optional<planted_spec> planted;
    std::uint64_t seed = 0;
    /// Budget of the produced instance in G(n, p) mode; planted mode uses the noise count.
    std::size_t budget = 0;
};

/// Portable stream of random values from std::mt19937_64, whose output sequence is fixed by the
/// standard. Distribution objects are avoided because their algorithms are implementation-defined.
class portable_rng {
public:
    explicit portable_rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 bits of precision.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform() < p; }
    /// Uniform in [0, bound), bound > 0, by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        for (;;) {
            std::uint64_t x = engine_();
            if (x < limit)
                return x % bound;
        }
    }

private:
    std::mt19937_64 engine_;
};

/// G(n, p), or a planted instance: a random split graph on split_core_size vertices (each vertex
/// joins the clique side with probability 1/2, clique/independent pairs are adjacent with
/// probability p) plus `noise` vertices adjacent to every other vertex with probability p.
/// Vertex labels are shuffled. Deleting the noise vertices restores the split core.
inline svd_instance generate_random_instance(const random_instance_spec& spec) {
    if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    const std::size_t n = spec.n;
    portable_rng rng(spec.seed);
    std::vector<edge> edges;

    if (!spec.planted) {
        for (vertex u = 0; u < n; ++u)
            for (vertex v = u + 1; v < n; ++v)
                if (rng.bernoulli(spec.edge_probability))
                    edges.emplace_back(u, v);
        return {graph(n, edges), std::min(spec.budget, n)};
    }

    const auto& pl = *spec.planted;
    if (pl.split_core_size + pl.noise != n)
        throw std::invalid_argument("planted core size plus noise must equal n");
    std::vector<char> in_clique(n, 0);
    for (std::size_t v = 0; v < pl.split_core_size; ++v)
        in_clique[v] = rng.bernoulli(0.5) ? 1 : 0;
    std::vector<vertex> label(n);
    for (vertex v = 0; v < n; ++v)
        label[v] = v;
    for (std::size_t i = n; i > 1; --i)
        std::swap(label[i - 1], label[rng.below(i)]);

    for (vertex u = 0; u < n; ++u) {
        for (vertex v = u + 1; v < n; ++v) {
            bool adjacent = false;
            if (v >= pl.split_core_size) {
                adjacent = rng.bernoulli(spec.edge_probability);
            } else if (in_clique[u] && in_clique[v]) {
                adjacent = true;
            } else if (in_clique[u] != in_clique[v]) {
                adjacent = rng.bernoulli(spec.edge_probability);
            }
            if (adjacent)
                edges.emplace_back(label[u], label[v]);
        }
    }
    return {graph(n, edges), pl.noise};
}

} // namespace splitvd
