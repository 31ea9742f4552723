#include <gtest/gtest.h>

#include <splitvd/graph_io.hpp>
#include <splitvd/oracle.hpp>
#include <splitvd/svd_solver.hpp>

#include "named_graphs.hpp"

using namespace splitvd;
using namespace splitvd::testing;

namespace {

void expect_valid(const graph& g, std::size_t k, const solve_outcome& out) {
    ASSERT_TRUE(out.solution);
    const auto& s = *out.solution;
    ASSERT_LE(s.deleted.size(), k);
    // certificate sides partition the remaining vertices
    ASSERT_FALSE(s.certificate.clique_side.intersects(s.certificate.independent_side));
    ASSERT_EQ(s.certificate.clique_side | s.certificate.independent_side, g.vertices() - s.deleted);
    ASSERT_TRUE(is_clique(g, s.certificate.clique_side));
    ASSERT_TRUE(is_independent(g, s.certificate.independent_side));
}

std::vector<solve_options> all_configurations() {
    std::vector<solve_options> out;
    for (bool kern : {false, true})
        for (bool prune : {false, true}) {
            solve_options o;
            o.kernelize = kern;
            o.prune = prune;
            out.push_back(o);
        }
    solve_options par;
    par.threads = 3;
    out.push_back(par);
    solve_options base;
    base.method = engine::baseline;
    out.push_back(base);
    return out;
}

} // namespace

TEST(BuildVcInstance, TriangleAllClique) {
    auto g = complete_graph(3);
    auto r = build_vc_instance(g, {g.vertices(), g.empty_set()}, 0);
    EXPECT_EQ(r.g, graph(3));
    EXPECT_TRUE(vc_solve(r.g, 0));
}

TEST(BuildVcInstance, C4SplitIntoTwoPairs) {
    // clique side {0, 2} is a non-edge, independent side {1, 3} is a non-edge too: one edge in total
    auto g = cycle_graph(4);
    auto r = build_vc_instance(g, {vertex_set(4, {0, 2}), vertex_set(4, {1, 3})}, 1);
    EXPECT_EQ(r.g.num_edges(), 1U);
    EXPECT_EQ(r.to_original, (std::vector<vertex>{0, 2, 1, 3}));
    auto c = vc_solve(r.g, 1);
    ASSERT_TRUE(c);
    auto d = r.lift(*c, 4);
    EXPECT_EQ(d.size(), 1U);
    EXPECT_TRUE(is_split(induced_subgraph(g, g.vertices() - d).g));
}

TEST(BuildVcInstance, TwoK2AllIndependent) {
    auto g = two_k2();
    auto r = build_vc_instance(g, {g.empty_set(), g.vertices()}, 2);
    EXPECT_EQ(r.g, g);
    EXPECT_THROW(build_vc_instance(g, {vertex_set(4, {0}), vertex_set(4, {0})}, 1), std::invalid_argument);
}

TEST(BuildVcInstance, CoversAreExactlyRepairs) {
    std::uint64_t st = 61;
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = 3 + iter % 6;
        auto g = random_graph(n, 0.5, st);
        auto c = random_subset(n, st);
        auto r = build_vc_instance(g, {c, g.vertices() - c}, n);
        auto any = random_subset(r.g.num_vertices(), st);
        auto d = r.lift(any, n);
        bool repairs = is_clique(g, c - d) && is_independent(g, (g.vertices() - c) - d);
        ASSERT_EQ(is_vertex_cover(r.g, any), repairs);
    }
}

TEST(SvdSolve, C5NeedsOneDeletion) {
    auto g = cycle_graph(5);
    EXPECT_FALSE(svd_solve({g, 0}).feasible());
    auto out = svd_solve({g, 1});
    expect_valid(g, 1, out);
    EXPECT_EQ(out.solution->deleted.size(), 1U);
}

TEST(SvdSolve, SplitGraphsNeedNothing) {
    for (const auto& g : {complete_graph(6), star_graph(5), path_graph(4), graph(3)}) {
        auto out = svd_solve({g, 0});
        expect_valid(g, 0, out);
        EXPECT_TRUE(out.solution->deleted.empty());
    }
}

TEST(SvdSolve, TwoK2) {
    auto g = two_k2();
    for (const auto& o : all_configurations()) {
        EXPECT_FALSE(svd_solve({g, 0}, o).feasible());
        expect_valid(g, 1, svd_solve({g, 1}, o));
    }
}

TEST(SvdSolve, TwoDisjointC4sNeedThree) {
    // one cycle keeps a P3, the other must shrink to an independent pair
    auto g = disjoint_union(cycle_graph(4), cycle_graph(4));
    ASSERT_EQ(oracle_min_svd(g).minimum, 3U);
    for (const auto& o : all_configurations()) {
        EXPECT_FALSE(svd_solve({g, 1}, o).feasible());
        EXPECT_FALSE(svd_solve({g, 2}, o).feasible());
        expect_valid(g, 3, svd_solve({g, 3}, o));
    }
}

TEST(SvdSolve, BudgetAtLeastNDeletesEverything) {
    auto g = cycle_graph(5);
    auto out = svd_solve({g, 7});
    expect_valid(g, 7, out);
}

TEST(SvdSolve, OracleEngine) {
    solve_options o;
    o.method = engine::oracle;
    auto g = petersen();
    auto want = oracle_min_svd(g).minimum;
    EXPECT_FALSE(svd_solve({g, want - 1}, o).feasible());
    expect_valid(g, want, svd_solve({g, want}, o));
    expect_valid(g, want, svd_solve({g, want}));
}

TEST(ReverseReduction, Examples) {
    EXPECT_TRUE(svd_solve(vc_to_svd_reduction(complete_graph(2), 1)).feasible());
    EXPECT_FALSE(svd_solve(vc_to_svd_reduction(complete_graph(3), 1)).feasible());
    EXPECT_TRUE(svd_solve(vc_to_svd_reduction(graph(4), 0)).feasible());
    auto inst = vc_to_svd_reduction(path_graph(3), 1);
    EXPECT_EQ(inst.g.num_vertices(), 6U);
    EXPECT_EQ(inst.budget, 1U);
}

TEST(ReverseReduction, MatchesVertexCoverOracle) {
    std::uint64_t st = 123;
    for (int iter = 0; iter < 120; ++iter) {
        auto g = random_graph(3 + iter % 5, 0.4, st);
        const std::size_t k = iter % 4;
        bool vc = oracle_min_vc(g).minimum <= k;
        ASSERT_EQ(svd_solve(vc_to_svd_reduction(g, k)).feasible(), vc) << to_edge_list(g) << k;
        solve_options base;
        base.method = engine::baseline;
        ASSERT_EQ(svd_solve(vc_to_svd_reduction(g, k), base).feasible(), vc);
    }
}

TEST(SvdSolve, AllConfigurationsAgreeWithOracle) {
    std::uint64_t st = 4711;
    const auto configs = all_configurations();
    for (int iter = 0; iter < 150; ++iter) {
        auto g = random_graph(6 + iter % 5, 0.2 + 0.1 * (iter % 6), st);
        const std::size_t opt = oracle_min_svd(g).minimum;
        for (const auto& o : configs) {
            for (std::size_t k : {opt > 0 ? opt - 1 : 0, opt}) {
                auto out = svd_solve({g, k}, o);
                ASSERT_EQ(out.feasible(), opt <= k) << to_edge_list(g) << "k=" << k;
                if (out.feasible()) {
                    expect_valid(g, k, out);
                }
            }
        }
    }
}

TEST(SvdSolve, StatsAreFilled) {
    solve_options o;
    o.kernelize = false;
    auto out = svd_solve({petersen(), 3}, o);
    EXPECT_GT(out.stats.partitions_tried, 0U);
    EXPECT_GT(out.stats.vc_calls, 0U);
    EXPECT_GT(out.stats.generator_nodes, 0U);
    EXPECT_FALSE(out.stats.kernel_ran);
    EXPECT_LE(out.stats.max_depth, depth_bound(10));
    solve_options base;
    base.method = engine::baseline;
    EXPECT_GT(svd_solve({petersen(), 3}, base).stats.baseline_nodes, 0U);
}

TEST(SvdMinimize, FindsOptimum) {
    std::uint64_t st = 8;
    for (int iter = 0; iter < 40; ++iter) {
        auto g = random_graph(9, 0.5, st);
        auto [k, out] = svd_minimize(g);
        EXPECT_EQ(k, oracle_min_svd(g).minimum);
        expect_valid(g, k, out);
    }
}
