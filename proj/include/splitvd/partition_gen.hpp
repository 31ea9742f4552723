#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace splitvd {

/// Two-sided split (V_C, V_I) of the vertex set.
struct partition {
    vertex_set clique_side;
    vertex_set independent_side;

    friend bool operator==(const partition&, const partition&) = default;
};

/// Tri-partition (assigned clique side, assigned independent side, active) plus recursion depth.
struct generator_state {
    vertex_set assigned_clique;
    vertex_set assigned_independent;
    vertex_set active;
    std::size_t depth = 0;

    friend bool operator==(const generator_state&, const generator_state&) = default;
};

/// 2*floor(log2 n) + 1 for n >= 1; 0 for the empty graph.
constexpr std::size_t depth_bound(std::size_t n) {
    if (n == 0)
        return 0;
    return 2 * (static_cast<std::size_t>(std::bit_width(n)) - 1) + 1;
}

/// 4 * (2n)^depth_bound(n), saturating at uint64 max. The empty graph emits exactly 2.
constexpr std::uint64_t family_size_bound(std::size_t n) {
    if (n == 0)
        return 2;
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t r = 4;
    const std::uint64_t base = 2 * static_cast<std::uint64_t>(n);
    for (std::size_t i = 0; i < depth_bound(n); ++i) {
        if (r > cap / base)
            return cap;
        r *= base;
    }
    return r;
}

inline generator_state root_state(const graph& g) {
    return {g.empty_set(), g.empty_set(), g.vertices(), 0};
}

inline bool is_valid_state(const graph& g, const generator_state& s) {
    const auto& c = s.assigned_clique;
    const auto& i = s.assigned_independent;
    const auto& a = s.active;
    const std::size_t n = g.num_vertices();
    if (c.universe() != n || i.universe() != n || a.universe() != n)
        return false;
    if (c.intersects(i) || c.intersects(a) || i.intersects(a))
        return false;
    return (c | i | a) == g.vertices() && s.depth <= depth_bound(n);
}

/// v goes to the clique side; its active non-neighbours are forced to the independent side.
inline generator_state child_state_clique(const graph& g, const generator_state& s, vertex v) {
    if (!s.active.contains(v))
        throw std::invalid_argument("branching vertex is not active");
    generator_state c = s;
    c.assigned_clique.insert(v);
    c.assigned_independent |= s.active - g.closed_neighbors(v);
    c.active &= g.neighbors(v);
    c.depth = s.depth + 1;
    return c;
}

/// v goes to the independent side; its active neighbours are forced to the clique side.
inline generator_state child_state_independent(const graph& g, const generator_state& s, vertex v) {
    if (!s.active.contains(v))
        throw std::invalid_argument("branching vertex is not active");
    generator_state c = s;
    c.assigned_clique |= s.active & g.neighbors(v);
    c.assigned_independent.insert(v);
    c.active -= g.closed_neighbors(v);
    c.depth = s.depth + 1;
    return c;
}

struct generation_stats {
    std::uint64_t emitted = 0;
    std::uint64_t nodes = 0;
    std::uint64_t pruned = 0;
    std::size_t max_depth = 0;
    /// Deepest state from which children were created.
    std::size_t max_branching_depth = 0;
    bool branched = false;
    bool stopped = false;

    void merge(const generation_stats& o) {
        emitted += o.emitted;
        nodes += o.nodes;
        pruned += o.pruned;
        max_depth = std::max(max_depth, o.max_depth);
        if (o.branched) {
            max_branching_depth = branched ? std::max(max_branching_depth, o.max_branching_depth)
                                           : o.max_branching_depth;
            branched = true;
        }
        stopped = stopped || o.stopped;
    }
};

struct never_prune {
    bool operator()(const generator_state&) const { return false; }
};

namespace detail {

template <class Visit>
bool emit(Visit& visit, partition p) {
    if constexpr (std::is_void_v<std::invoke_result_t<Visit&, const partition&>>) {
        visit(std::as_const(p));
        return true;
    } else {
        return static_cast<bool>(visit(std::as_const(p)));
    }
}

} // namespace detail

/// Runs the generator from `s`: emits (V_C0 + A, V_I0) and (V_C0, V_I0 + A), then, while the
/// depth is below the bound, recurses into the clique child and the independent child of every
/// active vertex in increasing id order. A visitor returning false stops the traversal; a prune
/// predicate returning true skips a state together with everything below it.
/// Returns false iff stopped by the visitor.
template <class Visit, class Prune = never_prune>
bool generate_from(const graph& g, const generator_state& s, Visit&& visit, generation_stats& stats,
                   Prune&& prune = Prune{}) {
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, s.depth);
    if (prune(s)) {
        ++stats.pruned;
        return true;
    }
    ++stats.emitted;
    if (!detail::emit(visit, partition{s.assigned_clique | s.active, s.assigned_independent})) {
        stats.stopped = true;
        return false;
    }
    ++stats.emitted;
    if (!detail::emit(visit, partition{s.assigned_clique, s.assigned_independent | s.active})) {
        stats.stopped = true;
        return false;
    }
    if (s.depth >= depth_bound(g.num_vertices()) || s.active.empty())
        return true;
    stats.max_branching_depth = stats.branched ? std::max(stats.max_branching_depth, s.depth) : s.depth;
    stats.branched = true;
    for (vertex v : s.active) {
        if (!generate_from(g, child_state_clique(g, s, v), visit, stats, prune))
            return false;
        if (!generate_from(g, child_state_independent(g, s, v), visit, stats, prune))
            return false;
    }
    return true;
}

/// Streams the partition family of g depth-first, in polynomial space, with possible repetitions.
template <class Visit, class Prune = never_prune>
generation_stats generate_partitions(const graph& g, Visit&& visit, Prune&& prune = Prune{}) {
    generation_stats stats;
    generate_from(g, root_state(g), visit, stats, prune);
    return stats;
}

/// The root's children in generation order: (v0 -> C), (v0 -> I), (v1 -> C), ...
/// Empty when the root does not branch.
inline std::vector<generator_state> root_children(const graph& g) {
    std::vector<generator_state> out;
    auto root = root_state(g);
    if (depth_bound(g.num_vertices()) == 0)
        return out;
    for (vertex v : root.active) {
        out.push_back(child_state_clique(g, root, v));
        out.push_back(child_state_independent(g, root, v));
    }
    return out;
}

/// Materializes the stream. Only sensible for small graphs.
inline std::vector<partition> collect_partitions(const graph& g) {
    std::vector<partition> out;
    generate_partitions(g, [&](const partition& p) { out.push_back(p); });
    return out;
}

/// Checks that every disjoint pair (X_C clique, X_I independent set) lies inside some added
/// partition (X_C within V_C, X_I within V_I). Distinct clique sides are stored as bitmasks,
/// so memory is 2^n bits; n is limited to 16.
class coverage_checker {
public:
    static constexpr std::size_t max_vertices = 16;

    explicit coverage_checker(const graph& g) : n_(g.num_vertices()) {
        if (n_ > max_vertices)
            throw std::invalid_argument("coverage check limited to 16 vertices");
        seen_.assign(std::size_t{1} << n_, false);
        adj_.resize(n_);
        for (vertex v = 0; v < n_; ++v)
            for (vertex u : g.neighbors(v))
                adj_[v] |= std::uint32_t{1} << u;
    }

    void add(const partition& p) {
        std::uint32_t mask = 0;
        for (vertex v : p.clique_side)
            mask |= std::uint32_t{1} << v;
        seen_[mask] = true;
    }

    /// First uncovered (X_C, X_I) as bitmasks, or nullopt when everything is covered.
    std::optional<std::pair<std::uint32_t, std::uint32_t>> first_uncovered() const {
        const std::uint32_t full = (std::uint32_t{1} << n_) - 1;
        const std::size_t size = std::size_t{1} << n_;
        std::vector<char> down(size);
        for (std::uint32_t xc = 0; xc <= full; ++xc) {
            if (!clique(xc))
                continue;
            // down[y]: some seen clique side M with xc inside M and y disjoint from M.
            for (std::uint32_t y = 0; y <= full; ++y)
                down[y] = seen_[full ^ y] && (y & xc) == 0;
            for (std::size_t bit = 0; bit < n_; ++bit)
                for (std::uint32_t y = 0; y <= full; ++y)
                    if ((y >> bit & 1U) == 0 && down[y | (std::uint32_t{1} << bit)])
                        down[y] = 1;
            for (std::uint32_t xi = 0; xi <= full; ++xi)
                if ((xi & xc) == 0 && !down[xi] && independent(xi))
                    return std::make_pair(xc, xi);
        }
        return std::nullopt;
    }

    bool all_covered() const { return !first_uncovered().has_value(); }

private:
    bool clique(std::uint32_t s) const {
        for (std::uint32_t r = s; r != 0; r &= r - 1) {
            auto v = static_cast<std::size_t>(std::countr_zero(r));
            if ((s & ~adj_[v] & ~(std::uint32_t{1} << v)) != 0)
                return false;
        }
        return true;
    }
    bool independent(std::uint32_t s) const {
        for (std::uint32_t r = s; r != 0; r &= r - 1)
            if ((adj_[static_cast<std::size_t>(std::countr_zero(r))] & s) != 0)
                return false;
        return true;
    }

    std::size_t n_;
    std::vector<bool> seen_;
    std::vector<std::uint32_t> adj_;
};

template <class Range>
bool verify_coverage(const graph& g, const Range& partitions) {
    coverage_checker checker(g);
    for (const auto& p : partitions)
        checker.add(p);
    return checker.all_covered();
}

/// Streams the generator straight into a coverage check.
inline bool verify_coverage(const graph& g) {
    coverage_checker checker(g);
    generate_partitions(g, [&](const partition& p) { checker.add(p); });
    return checker.all_covered();
}

} // namespace splitvd
