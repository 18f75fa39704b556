#include "partgraph/invariants.hpp"

#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace partgraph {
namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

TEST(LocalDimensionTest, Examples) {
    const auto g4 = build_graph(4);
    EXPECT_EQ(local_dimension(g4, g4.index_of(P({3, 1}))), 2);
    EXPECT_EQ(local_dimension(build_graph(1), 0), 0);

    const auto g6 = build_graph(6);
    std::vector<int> got;
    for (VertexId v = 0; v < g6.vertex_count(); ++v)
        got.push_back(local_dimension(g6, v));
    // frozen from an all-cliques enumeration of G_6
    EXPECT_EQ(got, (std::vector<int>{1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1}));
}

TEST(LocalDimensionTest, MatchesAllCliquesOracle) {
    for (int n = 1; n <= 10; ++n) {
        const auto g = build_graph(n);
        const auto adj = oracle::brute_force_adjacency(oracle::all_partitions(n));
        const auto expected = oracle::all_cliques_local_dimension(adj);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            EXPECT_EQ(local_dimension(g, v), expected[v]) << "n=" << n << " " << g.vertex(v);
    }
}

TEST(MaxCliqueSolverTest, RandomGraphsAgreeWithEnumeration) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t k = 1 + rng() % 14;
        const unsigned density = 20 + rng() % 70;
        std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
        std::vector<char> flat(k * k, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (rng() % 100 < density)
                    adj[i][j] = adj[j][i] = flat[i * k + j] = flat[j * k + i] = 1;
        const auto per_vertex = oracle::all_cliques_local_dimension(adj);
        const int omega = *std::max_element(per_vertex.begin(), per_vertex.end()) + 1;
        EXPECT_EQ(MaxCliqueSolver(k, flat).solve(), static_cast<std::size_t>(omega)) << "trial " << trial;
    }
}

TEST(InvariantTableTest, Rows) {
    const auto g4 = build_graph(4);
    const auto t4 = invariant_table(g4);
    const auto& r = t4[g4.index_of(P({3, 1}))];
    EXPECT_EQ(r.d, 3);
    EXPECT_EQ(r.delta, 2);
    EXPECT_EQ(r.sigma, 2);
    EXPECT_EQ(r.a, 3);
    EXPECT_EQ(r.b, 2);
    EXPECT_EQ(r.alpha, 1);
    EXPECT_EQ(r.adist, 1);

    const auto g1 = build_graph(1);
    const auto t1 = invariant_table(g1);
    const auto& one = t1[0];
    EXPECT_EQ(one.d, 0);
    EXPECT_EQ(one.delta, 0);
    EXPECT_EQ(one.sigma, 1);
    EXPECT_EQ(one.a, 1);
    EXPECT_EQ(one.b, 1);
    EXPECT_EQ(one.alpha, 0);
    EXPECT_EQ(one.adist, 0);

    const auto g8 = build_graph(8);
    const auto t8 = invariant_table(g8);
    EXPECT_EQ(t8[g8.index_of(P({4, 4}))].sigma, 1);
    EXPECT_EQ(t8[g8.index_of(P({4, 3, 1}))].sigma, 3);
}

TEST(InvariantTableTest, VertexBounds) {
    for (int n = 1; n <= 18; ++n) {
        const auto g = build_graph(n);
        const auto t = invariant_table(g);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const auto& r = t[v];
            EXPECT_LE(r.delta, r.d);
            EXPECT_GE(r.delta, 0);
            EXPECT_GE(r.sigma, 1);
            EXPECT_LE(r.sigma, std::min(r.a, r.b));
            EXPECT_EQ(r.adist, std::abs(r.alpha));
        }
    }
}

TEST(InvariantTableTest, RegistryAgreesWithDirectOperations) {
    const auto g = build_graph(12);
    const auto t = invariant_table(g);
    ASSERT_EQ(t.registry().size(), std::size(kInvariantNames));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& p = g.vertex(v);
        EXPECT_EQ(t.invariant("d")(v), static_cast<int>(degree(g, v)));
        EXPECT_EQ(t.invariant("delta")(v), local_dimension(g, v));
        EXPECT_EQ(t.invariant("sigma")(v), support_size(p));
        EXPECT_EQ(t.invariant("adist")(v), std::abs(p.largest_part() - p.length()));
        EXPECT_EQ(t.invariant("alpha")(v), p.largest_part() - p.length());
    }
    EXPECT_THROW(t.invariant("shell-depth"), std::invalid_argument);
}

TEST(InvariantTableTest, RealizedValues) {
    const auto g4 = build_graph(4);
    const auto t = invariant_table(g4);
    EXPECT_EQ(t.invariant("d").realized_values(), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(t.invariant("sigma").realized_values(), (std::vector<int>{1, 2}));
}

TEST(InvariantCsvTest, HeaderAndRows) {
    const auto g4 = build_graph(4);
    std::ostringstream os;
    write_invariant_csv(os, g4, invariant_table(g4));
    EXPECT_EQ(os.str(),
              "partition,d,delta,sigma,a,b,alpha,adist\n"
              "\"[4]\",1,1,1,4,1,3,3\n"
              "\"[3,1]\",3,2,2,3,2,1,1\n"
              "\"[2,2]\",2,2,1,2,2,0,0\n"
              "\"[2,1,1]\",3,2,2,2,3,-1,1\n"
              "\"[1,1,1,1]\",1,1,1,1,4,-3,3\n");
}

} // namespace
} // namespace partgraph
