#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <bit>
#include <span>
#include <string_view>
#include <unordered_map>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "instance.hpp"
#include "split_recognition.hpp"

namespace splitvd {

enum class kernel_verdict { reduced, yes, no };

inline std::string_view to_string(kernel_verdict v) {
    switch (v) {
    case kernel_verdict::reduced:
        return "reduced";
    case kernel_verdict::yes:
        return "yes";
    case kernel_verdict::no:
        return "no";
    }
    return "?";
}

struct kernel_stats {
    std::size_t constraints_found = 0;
    std::size_t forced_vertices = 0;
    std::size_t cores_added = 0;
    std::size_t isolated_removed = 0;
    std::size_t universal_removed = 0;
    std::size_t passes = 0;
    std::size_t remaining_constraints = 0;
    std::size_t remaining_constraint_vertices = 0;

    std::size_t rules_fired() const { return forced_vertices + cores_added + isolated_removed + universal_removed; }
};

/// Every hitting set of size at most k of a family of sets of size at most 5 with no sunflower
/// of more than k petals (as found by the greedy extraction) touches at most 600 * k^5 vertices.
constexpr std::uint64_t kernel_vertex_bound(std::size_t k) {
    std::uint64_t r = 600;
    for (int i = 0; i < 5; ++i)
        r *= k;
    return r;
}

struct kernel_result {
    kernel_verdict verdict = kernel_verdict::reduced;
    /// The reduced instance; its vertex i is vertex to_original[i] of the input.
    svd_instance reduced;
    std::vector<vertex> to_original;
    /// Input vertices contained in every solution within budget.
    vertex_set forced_deletions;
    /// Reduced-instance vertices outside every remaining constraint. Some solution avoids all of them.
    vertex_set undeletable;
    kernel_stats stats;

    /// Maps a deletion set of the reduced instance to one of the input instance.
    vertex_set lift(const vertex_set& reduced_deletions) const {
        vertex_set out = forced_deletions;
        for (vertex v : reduced_deletions)
            out.insert(to_original.at(v));
        return out;
    }
};

namespace detail {

/// Hitting-set family over the forbidden vertex sets, kept as an antichain.
class constraint_family {
public:
    struct constraint {
        std::array<vertex, 5> v{};
        std::uint8_t size = 0;
        bool alive = true;

        bool contains(vertex x) const { return std::find(v.begin(), v.begin() + size, x) != v.begin() + size; }
    };

    explicit constraint_family(std::size_t n) : occurs_(n) {}

    void add(std::span<const vertex> members) {
        constraint c;
        c.size = static_cast<std::uint8_t>(members.size());
        std::copy(members.begin(), members.end(), c.v.begin());
        std::sort(c.v.begin(), c.v.begin() + c.size);
        const auto id = static_cast<std::uint32_t>(sets_.size());
        for (std::size_t i = 0; i < c.size; ++i)
            occurs_[c.v[i]].push_back(id);
        sets_.push_back(c);
        ++live_;
    }

    void kill(std::uint32_t id) {
        if (sets_[id].alive) {
            sets_[id].alive = false;
            --live_;
        }
    }

    std::size_t live() const { return live_; }
    const std::vector<constraint>& sets() const { return sets_; }
    const std::vector<std::uint32_t>& occurrences(vertex v) const { return occurs_[v]; }

    void compact_occurrences(vertex v) {
        auto& o = occurs_[v];
        o.erase(std::remove_if(o.begin(), o.end(), [&](std::uint32_t id) { return !sets_[id].alive; }), o.end());
    }

private:
    std::vector<constraint> sets_;
    std::vector<std::vector<std::uint32_t>> occurs_;
    std::size_t live_ = 0;
};

inline bool contains_all(const constraint_family::constraint& t, std::span<const vertex> core) {
    return std::all_of(core.begin(), core.end(), [&](vertex x) { return t.contains(x); });
}

/// Greedy pairwise-disjoint petals among live sets strictly containing `core`; stops after limit+1.
inline std::size_t greedy_petals(const constraint_family& fam, std::span<const vertex> core, std::vector<char>& used,
                                 std::size_t limit) {
    std::size_t petals = 0;
    std::vector<vertex> touched;
    auto scan = [&](const std::vector<std::uint32_t>& ids) {
        for (std::uint32_t id : ids) {
            const auto& t = fam.sets()[id];
            if (!t.alive || t.size <= core.size() || !contains_all(t, core))
                continue;
            bool disjoint = true;
            for (std::size_t i = 0; i < t.size && disjoint; ++i)
                if (used[t.v[i]] && std::find(core.begin(), core.end(), t.v[i]) == core.end())
                    disjoint = false;
            if (!disjoint)
                continue;
            for (std::size_t i = 0; i < t.size; ++i)
                if (std::find(core.begin(), core.end(), t.v[i]) == core.end()) {
                    used[t.v[i]] = 1;
                    touched.push_back(t.v[i]);
                }
            if (++petals > limit)
                return;
        }
    };
    scan(fam.occurrences(core.front()));
    for (vertex x : touched)
        used[x] = 0;
    return petals;
}

} // namespace detail

/// Shrinks an instance by treating every induced 2K2, C4 and C5 as a hitting-set constraint.
///
/// Rules, applied in passes until none fires:
///  - more than `budget` pairwise disjoint constraints: verdict no;
///  - a vertex v whose constraints have more than `budget` petals disjoint outside v: v is forced
///    into the deletion set and the budget drops by one;
///  - a core S with 2 <= |S| <= 4 and more than `budget` petals: the constraints containing S are
///    replaced by S itself.
/// The remaining graph is G minus the forced vertices, followed by repeated removal of isolated
/// and universal vertices (neither lies in any forbidden subgraph). Vertices outside every
/// remaining constraint are reported as undeletable.
inline kernel_result svd_kernelize(const svd_instance& inst) {
    const graph& g = inst.g;
    const std::size_t n = g.num_vertices();
    if (n >= (std::size_t{1} << 16))
        throw std::invalid_argument("kernelization supports fewer than 65536 vertices");

    kernel_result r;
    r.forced_deletions = g.empty_set();
    auto budget = static_cast<std::int64_t>(inst.budget);

    detail::constraint_family fam(n);
    enumerate_forbidden_subgraphs(g, [&](const forbidden_witness& w) { fam.add(w.vertices); });
    r.stats.constraints_found = fam.live();

    std::vector<char> used(n, 0);
    bool infeasible = false;

    auto force = [&](vertex v) {
        r.forced_deletions.insert(v);
        ++r.stats.forced_vertices;
        --budget;
        for (std::uint32_t id : fam.occurrences(v))
            fam.kill(id);
        fam.compact_occurrences(v);
    };

    while (!infeasible) {
        ++r.stats.passes;
        if (budget < 0) {
            infeasible = true;
            break;
        }
        if (fam.live() == 0)
            break;

        // empty core
        {
            std::size_t disjoint = 0;
            std::vector<char> hit(n, 0);
            for (const auto& t : fam.sets()) {
                if (!t.alive)
                    continue;
                bool free = std::none_of(t.v.begin(), t.v.begin() + t.size, [&](vertex x) { return hit[x] != 0; });
                if (!free)
                    continue;
                for (std::size_t i = 0; i < t.size; ++i)
                    hit[t.v[i]] = 1;
                ++disjoint;
            }
            if (static_cast<std::int64_t>(disjoint) > budget) {
                infeasible = true;
                break;
            }
        }

        bool fired = false;
        for (vertex v = 0; v < n && !infeasible; ++v) {
            fam.compact_occurrences(v);
            if (static_cast<std::int64_t>(fam.occurrences(v).size()) <= budget)
                continue;
            std::array<vertex, 1> core{v};
            auto petals = detail::greedy_petals(fam, core, used, static_cast<std::size_t>(budget));
            if (static_cast<std::int64_t>(petals) > budget) {
                force(v);
                fired = true;
                if (budget < 0)
                    infeasible = true;
            }
        }
        if (infeasible)
            break;
        if (fired)
            continue;

        for (std::size_t core_size = 2; core_size <= 4 && !fired; ++core_size) {
            // count candidate cores among live sets that strictly contain them
            std::unordered_map<std::uint64_t, std::size_t> counts;
            for (const auto& t : fam.sets()) {
                if (!t.alive || t.size <= core_size)
                    continue;
                const unsigned full = (1U << t.size) - 1;
                for (unsigned mask = 1; mask <= full; ++mask) {
                    if (static_cast<std::size_t>(std::popcount(mask)) != core_size)
                        continue;
                    std::uint64_t key = 0;
                    for (std::size_t i = t.size; i-- > 0;)
                        if (mask >> i & 1U)
                            key = key << 16 | t.v[i];
                    ++counts[key];
                }
            }
            std::vector<std::uint64_t> candidates;
            for (const auto& [key, count] : counts)
                if (static_cast<std::int64_t>(count) > budget)
                    candidates.push_back(key);
            std::sort(candidates.begin(), candidates.end());
            for (std::uint64_t packed : candidates) {
                std::array<vertex, 4> key{};
                for (std::size_t i = 0; i < core_size; ++i)
                    key[i] = static_cast<vertex>(packed >> (16 * i) & 0xFFFFU);
                std::span<const vertex> core(key.data(), core_size);
                auto petals = detail::greedy_petals(fam, core, used, static_cast<std::size_t>(budget));
                if (static_cast<std::int64_t>(petals) <= budget)
                    continue;
                for (std::uint32_t id : fam.occurrences(core.front()))
                    if (fam.sets()[id].alive && detail::contains_all(fam.sets()[id], core))
                        fam.kill(id);
                fam.add(core);
                ++r.stats.cores_added;
                fired = true;
            }
        }
        if (!fired)
            break;
    }

    if (infeasible) {
        r.verdict = kernel_verdict::no;
        return r;
    }

    vertex_set constrained = g.empty_set();
    for (const auto& t : fam.sets())
        if (t.alive) {
            ++r.stats.remaining_constraints;
            for (std::size_t i = 0; i < t.size; ++i)
                constrained.insert(t.v[i]);
        }
    r.stats.remaining_constraint_vertices = constrained.size();

    vertex_set keep = g.vertices() - r.forced_deletions;
    for (bool shrunk = true; shrunk;) {
        shrunk = false;
        const std::size_t alive = keep.size();
        for (vertex v : keep) {
            std::size_t d = g.neighbors(v).intersection_size(keep);
            if (d == 0) {
                keep.erase(v);
                ++r.stats.isolated_removed;
                shrunk = true;
            } else if (d + 1 == alive) {
                keep.erase(v);
                ++r.stats.universal_removed;
                shrunk = true;
            }
            if (shrunk)
                break;
        }
    }

    auto sub = induced_subgraph(g, keep);
    r.to_original = std::move(sub.to_parent);
    r.reduced.g = std::move(sub.g);
    r.reduced.budget = static_cast<std::size_t>(budget);
    r.undeletable = vertex_set(r.to_original.size());
    for (vertex i = 0; i < r.to_original.size(); ++i)
        if (!constrained.contains(r.to_original[i]))
            r.undeletable.insert(i);
    r.verdict = fam.live() == 0 ? kernel_verdict::yes : kernel_verdict::reduced;
    return r;
}

} // namespace splitvd
