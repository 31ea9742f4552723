#include <gtest/gtest.h>

#include <splitvd/graph_io.hpp>
#include <splitvd/oracle.hpp>
#include <splitvd/svd_kernel.hpp>

#include "named_graphs.hpp"

using namespace splitvd;
using namespace splitvd::testing;

namespace {

bool leaves_split(const graph& g, const vertex_set& deleted) {
    return oracle_min_svd(induced_subgraph(g, g.vertices() - deleted).g).minimum == 0;
}

// Some deletion set of size <= budget avoiding `avoid` leaves a split graph.
bool brute_force_avoiding(const graph& g, std::size_t budget, const vertex_set& avoid) {
    const std::size_t n = g.num_vertices();
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
        if (static_cast<std::size_t>(std::popcount(m)) > budget)
            continue;
        auto d = detail::from_mask(n, m);
        if (!d.intersects(avoid) && leaves_split(g, d))
            return true;
    }
    return false;
}

// Clique c_0..c_{m-1}; pendant pair i_j, i'_j on each c_j; one extra vertex v adjacent to all
// pendants. Every forbidden subgraph goes through v, and deleting v leaves a split graph.
graph pendant_windmill(std::size_t m) {
    std::vector<edge> e;
    const vertex v = static_cast<vertex>(3 * m);
    for (vertex a = 0; a < m; ++a) {
        for (vertex b = a + 1; b < m; ++b)
            e.emplace_back(a, b);
        e.emplace_back(a, m + 2 * a);
        e.emplace_back(a, m + 2 * a + 1);
        e.emplace_back(v, m + 2 * a);
        e.emplace_back(v, m + 2 * a + 1);
    }
    return graph(3 * m + 1, e);
}

} // namespace

TEST(SvdKernel, SplitGraphIsYes) {
    auto r = svd_kernelize({star_graph(6), 0});
    EXPECT_EQ(r.verdict, kernel_verdict::yes);
    EXPECT_TRUE(r.forced_deletions.empty());
    EXPECT_EQ(r.stats.constraints_found, 0U);
}

TEST(SvdKernel, DisjointC4sOverBudget) {
    for (std::size_t k = 0; k <= 3; ++k) {
        graph g(0);
        for (std::size_t i = 0; i <= k; ++i)
            g = disjoint_union(g, cycle_graph(4));
        EXPECT_EQ(svd_kernelize({g, k}).verdict, kernel_verdict::no) << "k=" << k;
    }
}

TEST(SvdKernel, C5WithBudgetOne) {
    auto r = svd_kernelize({cycle_graph(5), 1});
    EXPECT_EQ(r.verdict, kernel_verdict::reduced);
    EXPECT_EQ(r.reduced.budget, 1U);
    EXPECT_EQ(r.reduced.g.num_vertices(), 5U);
    EXPECT_TRUE(r.undeletable.empty());
    EXPECT_EQ(r.stats.constraints_found, 1U);
}

TEST(SvdKernel, ForcedVertexThroughSunflower) {
    auto g = pendant_windmill(6);
    ASSERT_FALSE(is_split(g));
    ASSERT_TRUE(is_split(induced_subgraph(g, g.vertices() - vertex_set(19, {18})).g));
    auto r = svd_kernelize({g, 1});
    EXPECT_EQ(r.verdict, kernel_verdict::yes);
    EXPECT_EQ(r.forced_deletions, vertex_set(19, {18}));
    EXPECT_GE(r.stats.forced_vertices, 1U);
    EXPECT_TRUE(is_split(induced_subgraph(g, g.vertices() - r.lift(r.reduced.g.empty_set())).g));
}

TEST(SvdKernel, IsolatedAndUniversalVerticesRemoved) {
    // C5 plus a universal vertex plus an isolated vertex
    std::vector<edge> e;
    for (vertex v = 0; v < 5; ++v) {
        e.emplace_back(v, (v + 1) % 5);
        e.emplace_back(v, 5);
    }
    graph g(7, e);
    auto r = svd_kernelize({g, 1});
    EXPECT_EQ(r.verdict, kernel_verdict::reduced);
    EXPECT_EQ(r.reduced.g.num_vertices(), 5U);
    EXPECT_EQ(r.stats.isolated_removed, 1U);
    EXPECT_EQ(r.stats.universal_removed, 1U);
    EXPECT_EQ(r.to_original, (std::vector<vertex>{0, 1, 2, 3, 4}));
}

TEST(SvdKernel, RejectsHugeGraphs) {
    EXPECT_THROW(svd_kernelize({graph(70000), 1}), std::invalid_argument);
}

TEST(SvdKernel, EquivalentToBruteForce) {
    std::uint64_t st = 2718;
    int reduced_seen = 0, yes_seen = 0, no_seen = 0;
    for (int iter = 0; iter < 500; ++iter) {
        auto g = random_graph(5 + iter % 4, 0.2 + 0.1 * (iter % 7), st);
        const std::size_t k = iter % 4;
        const bool yes = oracle_min_svd(g).minimum <= k;
        auto r = svd_kernelize({g, k});
        switch (r.verdict) {
        case kernel_verdict::no:
            ++no_seen;
            ASSERT_FALSE(yes) << to_edge_list(g) << "k=" << k;
            break;
        case kernel_verdict::yes:
            ++yes_seen;
            ASSERT_TRUE(yes);
            ASSERT_LE(r.forced_deletions.size(), k);
            ASSERT_TRUE(leaves_split(g, r.forced_deletions));
            break;
        case kernel_verdict::reduced: {
            ++reduced_seen;
            ASSERT_LE(r.reduced.budget, k);
            ASSERT_EQ(r.reduced.budget + r.forced_deletions.size(), k);
            ASSERT_LE(r.reduced.g.num_vertices(), g.num_vertices());
            ASSERT_LE(r.stats.remaining_constraint_vertices, kernel_vertex_bound(k));
            const auto& h = r.reduced.g;
            ASSERT_EQ(brute_force_avoiding(h, r.reduced.budget, r.undeletable), yes) << to_edge_list(g) << "k=" << k;
            auto d = oracle_min_svd(h);
            ASSERT_EQ(d.minimum <= r.reduced.budget, yes);
            if (yes) {
                ASSERT_TRUE(leaves_split(g, r.lift(d.witness)));
            }
            break;
        }
        }
    }
    EXPECT_GT(reduced_seen, 0);
    EXPECT_GT(yes_seen, 0);
    EXPECT_GT(no_seen, 0);
}

TEST(SvdKernel, ConstraintVerticesWithinBound) {
    std::uint64_t st = 3;
    for (int iter = 0; iter < 20; ++iter) {
        auto g = random_graph(30, 0.5, st);
        const std::size_t k = 1 + iter % 3;
        auto r = svd_kernelize({g, k});
        if (r.verdict == kernel_verdict::reduced) {
            EXPECT_LE(r.stats.remaining_constraint_vertices, kernel_vertex_bound(r.reduced.budget));
            EXPECT_LE(r.reduced.budget, k);
        }
    }
}

TEST(SvdKernel, VertexBound) {
    EXPECT_EQ(kernel_vertex_bound(0), 0U);
    EXPECT_EQ(kernel_vertex_bound(1), 600U);
    EXPECT_EQ(kernel_vertex_bound(2), 600U * 32U);
}
