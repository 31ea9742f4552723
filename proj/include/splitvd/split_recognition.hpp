#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "graph.hpp"

namespace splitvd {

/// Witness partition of a split graph: clique_side is a clique, independent_side an independent set.
struct split_certificate {
    vertex_set clique_side;
    vertex_set independent_side;
};

enum class forbidden_kind { two_k2, c4, c5 };

inline std::string_view to_string(forbidden_kind k) {
    switch (k) {
    case forbidden_kind::two_k2:
        return "2K2";
    case forbidden_kind::c4:
        return "C4";
    case forbidden_kind::c5:
        return "C5";
    }
    return "?";
}

/// Induced 2K2, C4 or C5. For 2K2 the order (a,b,c,d) has edges ab and cd; for cycles the
/// order is the cycle order starting at the smallest id, continuing to its smaller neighbour.
struct forbidden_witness {
    forbidden_kind kind;
    std::vector<vertex> vertices;

    friend bool operator==(const forbidden_witness&, const forbidden_witness&) = default;
};

using recognition_result = std::variant<split_certificate, forbidden_witness>;

inline bool validate_certificate(const graph& g, const split_certificate& c) {
    const std::size_t n = g.num_vertices();
    if (c.clique_side.universe() != n || c.independent_side.universe() != n)
        return false;
    if (c.clique_side.intersects(c.independent_side))
        return false;
    if ((c.clique_side | c.independent_side) != g.vertices())
        return false;
    return is_clique(g, c.clique_side) && is_independent(g, c.independent_side);
}

inline bool validate_witness(const graph& g, const forbidden_witness& w) {
    const auto& vs = w.vertices;
    const std::size_t want = w.kind == forbidden_kind::c5 ? 5 : 4;
    if (vs.size() != want)
        return false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] >= g.num_vertices())
            return false;
        for (std::size_t j = 0; j < i; ++j)
            if (vs[i] == vs[j])
                return false;
    }
    auto expect_edge = [&](std::size_t i, std::size_t j) {
        if (w.kind == forbidden_kind::two_k2)
            return (i / 2 == j / 2);
        std::size_t d = i > j ? i - j : j - i;
        return d == 1 || d == vs.size() - 1;
    };
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j]) != expect_edge(i, j))
                return false;
    return true;
}

namespace detail {

inline forbidden_witness canonical_witness(const graph& g, std::span<const vertex> sorted, forbidden_kind kind) {
    std::vector<vertex> order;
    order.reserve(sorted.size());
    if (kind == forbidden_kind::two_k2) {
        std::vector<vertex> rest(sorted.begin(), sorted.end());
        while (!rest.empty()) {
            vertex a = rest.front();
            auto it = std::find_if(rest.begin() + 1, rest.end(), [&](vertex x) { return g.adjacent(a, x); });
            vertex b = *it;
            order.push_back(a);
            order.push_back(b);
            rest.erase(it);
            rest.erase(rest.begin());
        }
    } else {
        vertex start = sorted.front();
        vertex prev = start;
        vertex cur = start;
        order.push_back(start);
        for (std::size_t step = 1; step < sorted.size(); ++step) {
            vertex next = static_cast<vertex>(-1);
            for (vertex x : sorted)
                if (x != prev && x != cur && g.adjacent(cur, x) && (step > 1 || x < next)) {
                    next = x;
                    if (step > 1)
                        break;
                }
            prev = cur;
            cur = next;
            order.push_back(cur);
        }
    }
    return {kind, std::move(order)};
}

/// Visits every subset of `pool` (sorted ids) of the given size in lexicographic order whose
/// induced degrees are at most 2, classifying 2-regular / 1-regular ones. Stops when visit returns false.
template <class Visit>
bool scan_forbidden(const graph& g, const std::vector<vertex>& pool, std::size_t size, Visit&& visit) {
    std::array<vertex, 5> chosen{};
    std::array<int, 5> deg{};

    auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> bool {
        if (depth == size) {
            bool all1 = true, all2 = true;
            for (std::size_t i = 0; i < size; ++i) {
                all1 = all1 && deg[i] == 1;
                all2 = all2 && deg[i] == 2;
            }
            if (size == 4 && all1)
                return visit(canonical_witness(g, std::span(chosen.data(), size), forbidden_kind::two_k2));
            if (all2)
                return visit(canonical_witness(g, std::span(chosen.data(), size),
                                               size == 4 ? forbidden_kind::c4 : forbidden_kind::c5));
            return true;
        }
        for (std::size_t i = from; i + (size - depth) <= pool.size(); ++i) {
            vertex v = pool[i];
            int dv = 0;
            bool ok = true;
            for (std::size_t j = 0; j < depth; ++j) {
                if (g.adjacent(v, chosen[j])) {
                    ++dv;
                    if (++deg[j] > 2)
                        ok = false;
                }
            }
            deg[depth] = dv;
            chosen[depth] = v;
            bool keep_going = true;
            if (ok && dv <= 2)
                keep_going = self(self, depth + 1, i + 1);
            for (std::size_t j = 0; j < depth; ++j)
                if (g.adjacent(v, chosen[j]))
                    --deg[j];
            if (!keep_going)
                return false;
        }
        return true;
    };
    return rec(rec, 0, 0);
}

} // namespace detail

/// Degree-ordering candidate: the longest prefix of vertices sorted by non-increasing degree
/// (ties by id) with d_i >= i-1 becomes the clique side. Valid iff the graph restricted to
/// `within` is split.
inline split_certificate greedy_split_candidate(const graph& g, const vertex_set& within) {
    std::vector<std::pair<std::size_t, vertex>> by_degree;
    for (vertex v : within)
        by_degree.emplace_back(g.neighbors(v).intersection_size(within), v);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::size_t m = 0;
    while (m < by_degree.size() && by_degree[m].first >= m)
        ++m;
    split_certificate c{vertex_set(g.num_vertices()), within};
    for (std::size_t i = 0; i < m; ++i) {
        c.clique_side.insert(by_degree[i].second);
        c.independent_side.erase(by_degree[i].second);
    }
    return c;
}

/// First forbidden induced subgraph within `within`: 4-subsets in lexicographic order, then 5-subsets.
inline std::optional<forbidden_witness> find_forbidden_subgraph(const graph& g, const vertex_set& within) {
    auto cand = greedy_split_candidate(g, within);
    if (is_clique(g, cand.clique_side) && is_independent(g, cand.independent_side))
        return std::nullopt;
    std::optional<forbidden_witness> found;
    auto pool = within.to_vector();
    for (std::size_t size : {4U, 5U}) {
        detail::scan_forbidden(g, pool, size, [&](forbidden_witness w) {
            found = std::move(w);
            return false;
        });
        if (found)
            return found;
    }
    throw std::logic_error("graph is not split but has no induced 2K2, C4 or C5");
}

inline std::optional<forbidden_witness> find_forbidden_subgraph(const graph& g) {
    return find_forbidden_subgraph(g, g.vertices());
}

inline recognition_result recognize_split(const graph& g) {
    auto cand = greedy_split_candidate(g, g.vertices());
    if (is_clique(g, cand.clique_side) && is_independent(g, cand.independent_side))
        return cand;
    return *find_forbidden_subgraph(g);
}

inline bool is_split(const graph& g) { return std::holds_alternative<split_certificate>(recognize_split(g)); }

/// Calls visit(const forbidden_witness&) once per vertex set inducing 2K2, C4 or C5.
/// Four-vertex sets come first, each group in lexicographic order. visit may return
/// false to stop early; a void-returning visitor sees everything.
template <class Visit>
void enumerate_forbidden_subgraphs(const graph& g, Visit&& visit) {
    auto pool = g.vertices().to_vector();
    auto wrapped = [&](const forbidden_witness& w) {
        if constexpr (std::is_void_v<std::invoke_result_t<Visit&, const forbidden_witness&>>) {
            visit(w);
            return true;
        } else {
            return static_cast<bool>(visit(w));
        }
    };
    if (!detail::scan_forbidden(g, pool, 4, wrapped))
        return;
    detail::scan_forbidden(g, pool, 5, wrapped);
}

inline std::vector<forbidden_witness> all_forbidden_subgraphs(const graph& g) {
    std::vector<forbidden_witness> out;
    enumerate_forbidden_subgraphs(g, [&](const forbidden_witness& w) { out.push_back(w); });
    return out;
}

} // namespace splitvd
