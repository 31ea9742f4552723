#include <gtest/gtest.h>

#include <splitvd/graph.hpp>
#include <splitvd/graph_io.hpp>

#include "named_graphs.hpp"

using namespace splitvd;
using namespace splitvd::testing;

namespace {

bool well_formed(const graph& g) {
    const std::size_t n = g.num_vertices();
    std::size_t twice = 0;
    for (vertex v = 0; v < n; ++v) {
        if (g.neighbors(v).universe() != n || g.adjacent(v, v))
            return false;
        for (vertex u : g.neighbors(v))
            if (!g.adjacent(u, v))
                return false;
        twice += g.degree(v);
    }
    return twice == 2 * g.num_edges();
}

} // namespace

TEST(VertexSet, BasicOperations) {
    vertex_set a(70, {1, 5, 64, 69});
    vertex_set b(70, {5, 64});
    EXPECT_EQ(a.size(), 4U);
    EXPECT_TRUE(b.is_subset_of(a));
    EXPECT_FALSE(a.is_subset_of(b));
    EXPECT_EQ((a - b).to_vector(), (std::vector<vertex>{1, 69}));
    EXPECT_EQ((~a).size(), 66U);
    EXPECT_EQ(a.first(), 1U);
    EXPECT_EQ(vertex_set(70).first(), 70U);
    EXPECT_THROW(a.insert(70), std::out_of_range);
    EXPECT_THROW((void)(a & vertex_set(71)), std::invalid_argument);
}

TEST(ParseGraph, PathOnThreeVertices) {
    auto g = parse_graph("p 3 2\ne 1 2\ne 2 3");
    EXPECT_EQ(g, path_graph(3));
}

TEST(ParseGraph, SingleIsolatedVertex) {
    auto g = parse_graph("p 1 0");
    EXPECT_EQ(g.num_vertices(), 1U);
    EXPECT_EQ(g.num_edges(), 0U);
}

TEST(ParseGraph, SelfLoopIsAnError) { EXPECT_THROW(parse_graph("p 2 1\ne 1 1"), parse_error); }

TEST(ParseGraph, CommentsBlankLinesAndDuplicates) {
    auto g = parse_graph("c hello\n\np 3 3\ne 1 2\nc mid\ne 2 1\r\ne 2 3\n");
    EXPECT_EQ(g, path_graph(3));
    EXPECT_EQ(parse_graph("p edge 3 2\ne 1 2\ne 2 3\n"), path_graph(3));
}

TEST(ParseGraph, Errors) {
    EXPECT_THROW(parse_graph("p 3 1\ne 1 4"), parse_error);
    EXPECT_THROW(parse_graph("p 3 1\ne 0 1"), parse_error);
    EXPECT_THROW(parse_graph("e 1 2\np 3 1"), parse_error);
    EXPECT_THROW(parse_graph("p 3 1\ne 1"), parse_error);
    EXPECT_THROW(parse_graph("p 3 1\nx 1 2"), parse_error);
    EXPECT_THROW(parse_graph("p 3 x"), parse_error);
    EXPECT_THROW(parse_graph("c only"), parse_error);
    EXPECT_THROW(parse_graph("p 3 2\ne 1 2"), parse_error);
    EXPECT_THROW(parse_graph("p 3 0\np 3 0"), parse_error);
    try {
        parse_graph("p 2 1\n\ne 1 1");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.line(), 3U);
    }
}

TEST(ParseGraph, WriteThenParseRoundTrip) {
    std::uint64_t st = 7;
    for (int i = 0; i < 50; ++i) {
        auto g = random_graph(1 + i % 12, 0.4, st);
        EXPECT_EQ(parse_graph(to_edge_list(g)), g);
    }
}

TEST(GraphConstruction, RejectsInvalidInput) {
    EXPECT_THROW(graph(2, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(graph(2, {{0, 2}}), std::out_of_range);
    std::vector<vertex_set> rows{vertex_set(2, {1}), vertex_set(2)};
    EXPECT_THROW(graph::from_adjacency(rows), std::invalid_argument);
}

TEST(InducedSubgraph, AdjacentPairOfC4IsK2) {
    auto r = induced_subgraph(cycle_graph(4), vertex_set(4, {0, 1}));
    EXPECT_EQ(r.g, complete_graph(2));
    EXPECT_EQ(r.to_parent, (std::vector<vertex>{0, 1}));
}

TEST(InducedSubgraph, FourConsecutiveC5VerticesInduceP4) {
    auto c5 = cycle_graph(5);
    for (vertex start = 0; start < 5; ++start) {
        // order the kept vertices along the cycle, then compare pairwise adjacency against P4
        std::vector<vertex> along;
        for (vertex i = 0; i < 4; ++i)
            along.push_back((start + i) % 5);
        auto r = induced_subgraph(c5, vertex_set::from_range(5, along));
        EXPECT_EQ(r.g.num_edges(), 3U);
        for (vertex i = 0; i < 4; ++i)
            for (vertex j = i + 1; j < 4; ++j)
                EXPECT_EQ(c5.adjacent(along[i], along[j]), j == i + 1);
    }
}

TEST(InducedSubgraph, EmptySet) {
    auto r = induced_subgraph(petersen(), vertex_set(10));
    EXPECT_EQ(r.g.num_vertices(), 0U);
    EXPECT_THROW(induced_subgraph(petersen(), vertex_set(9)), std::out_of_range);
}

TEST(Complement, CompleteAndEmpty) {
    EXPECT_EQ(complement(complete_graph(3)), graph(3));
    EXPECT_EQ(complement(graph(3)), complete_graph(3));
    EXPECT_EQ(complete_graph(3).num_edges(), 3U);
}

TEST(DisjointUnion, Definitions) {
    auto u = disjoint_union(complete_graph(2), complete_graph(2));
    EXPECT_EQ(u, two_k2());
    EXPECT_EQ(disjoint_union(petersen(), graph(0)), petersen());
    auto v = disjoint_union(graph(0), petersen());
    EXPECT_EQ(v, petersen());
}

TEST(CliqueIndependent, Examples) {
    auto c4 = cycle_graph(4);
    auto c5 = cycle_graph(5);
    EXPECT_TRUE(is_clique(c4, vertex_set(4)));
    EXPECT_TRUE(is_clique(c4, vertex_set(4, {2})));
    EXPECT_TRUE(is_independent(c4, vertex_set(4)));
    EXPECT_TRUE(is_clique(c4, vertex_set(4, {0, 1})));
    EXPECT_FALSE(is_independent(c4, vertex_set(4, {0, 1})));
    EXPECT_TRUE(is_independent(c5, vertex_set(5, {0, 2})));
    EXPECT_FALSE(is_clique(c5, vertex_set(5, {0, 2})));
    EXPECT_THROW((void)is_clique(c5, vertex_set(4)), std::out_of_range);
}

TEST(GraphProperties, InvariantsUnderAllOperations) {
    std::uint64_t st = 12345;
    for (int iter = 0; iter < 400; ++iter) {
        std::size_t n = iter % 9;
        auto g = random_graph(n, 0.5, st);
        auto h = random_graph((iter * 7) % 9, 0.3, st);
        auto s = random_subset(n, st);
        ASSERT_TRUE(well_formed(g));
        ASSERT_TRUE(well_formed(complement(g)));
        ASSERT_TRUE(well_formed(induced_subgraph(g, s).g));
        auto u = disjoint_union(g, h);
        ASSERT_TRUE(well_formed(u));
        EXPECT_EQ(u.num_edges(), g.num_edges() + h.num_edges());
        EXPECT_EQ(complement(complement(g)), g);
        EXPECT_EQ(induced_subgraph(g, g.vertices()).g, g);
        EXPECT_EQ(is_clique(g, s), is_independent(complement(g), s));
        EXPECT_EQ(complement(g).num_edges() + g.num_edges(), n * (n - (n > 0 ? 1 : 0)) / 2);
    }
}
