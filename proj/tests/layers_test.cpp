#include "partgraph/layers.hpp"

#include <functional>
#include <random>

#include "gtest/gtest.h"

namespace partgraph {
namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

class LayersG4Test : public ::testing::Test {
protected:
    PartitionGraph g = build_graph(4);
    InvariantTable t = invariant_table(g);
    VertexId id(std::vector<int> p) { return g.index_of(P(std::move(p))); }
    UnorientedEdge un(std::vector<int> a, std::vector<int> b) {
        auto x = id(std::move(a));
        auto y = id(std::move(b));
        return {std::min(x, y), std::max(x, y)};
    }
};

TEST_F(LayersG4Test, DegreeBoundary) {
    const auto b = edge_boundary(g, t.invariant("d"), 2);
    EXPECT_EQ(b.edges, (std::vector{un({4}, {3, 1}), un({2, 1, 1}, {1, 1, 1, 1})}));
    EXPECT_EQ(b.count, 2u);
    EXPECT_EQ(b.count_plus, 2u);
    EXPECT_EQ(b.count_minus, 2u);
}

TEST_F(LayersG4Test, BoundaryBelowMinimumIsEmpty) {
    for (const auto& f : t.registry()) {
        const int lowest = f.realized_values().front();
        EXPECT_TRUE(edge_boundary(g, f, lowest).edges.empty()) << f.name;
        EXPECT_TRUE(edge_boundary(g, f, lowest - 5).edges.empty()) << f.name;
    }
}

TEST_F(LayersG4Test, LocalDimensionBoundary) {
    const auto b = edge_boundary(g, t.invariant("delta"), 2);
    EXPECT_EQ(b.edges, (std::vector{un({4}, {3, 1}), un({2, 1, 1}, {1, 1, 1, 1})}));
}

TEST_F(LayersG4Test, ThresholdLayersAreNested) {
    const auto& d = t.invariant("d");
    EXPECT_EQ(threshold_layer(d, 2).members, (std::vector<VertexId>{1, 2, 3}));
    for (int r = 0; r <= 4; ++r) {
        const auto upper = threshold_layer(d, r + 1).members;
        const auto lower = threshold_layer(d, r).members;
        EXPECT_TRUE(std::includes(lower.begin(), lower.end(), upper.begin(), upper.end()));
    }
}

TEST_F(LayersG4Test, DegreeGradient) {
    const auto dag = gradient_dag(g, t.invariant("d"));
    EXPECT_EQ(dag.directed.size(), 4u);
    EXPECT_EQ(dag.plateau, (std::vector{un({3, 1}, {2, 1, 1})}));
    const auto cert = check_acyclic(dag);
    EXPECT_TRUE(cert.acyclic);
    EXPECT_EQ(cert.order.size(), 5u);

    const auto path = longest_strict_path(dag);
    EXPECT_EQ(path.length, 1u);
    EXPECT_EQ(t.invariant("d").realized_values().size() - 1, 2u);
}

TEST_F(LayersG4Test, SupportGradientPathAttainsBound) {
    const auto dag = gradient_dag(g, t.invariant("sigma"));
    const auto path = longest_strict_path(dag);
    EXPECT_EQ(path.length, 1u);
    EXPECT_EQ(path.vertices, (std::vector{id({4}), id({3, 1})}));
    EXPECT_EQ(t.invariant("sigma").realized_values().size() - 1, 1u);
}

TEST_F(LayersG4Test, ConstantInvariantIsAllPlateau) {
    VertexInvariant flat{"flat", std::vector<int>(g.vertex_count(), 7)};
    const auto dag = gradient_dag(g, flat);
    EXPECT_TRUE(dag.directed.empty());
    EXPECT_EQ(dag.plateau.size(), g.edge_count());
    EXPECT_EQ(longest_strict_path(dag).length, 0u);
}

TEST(GradientDagTest, SingleVertexGraph) {
    const auto g = build_graph(1);
    const auto t = invariant_table(g);
    const auto path = longest_strict_path(gradient_dag(g, t.invariant("d")));
    EXPECT_EQ(path.length, 0u);
    EXPECT_EQ(path.vertices, std::vector<VertexId>{0});
}

TEST(GradientDagTest, CycleIsReported) {
    GradientDag dag;
    dag.invariant = "broken";
    dag.vertex_count = 3;
    dag.directed = {{0, 1}, {1, 2}, {2, 0}};
    dag.successors = {{1}, {2}, {0}};
    EXPECT_FALSE(check_acyclic(dag).acyclic);
    EXPECT_THROW(longest_strict_path(dag), ConsistencyError);
}

// Longest path by exhaustive DFS over all directed paths.
std::size_t brute_longest(const GradientDag& dag) {
    std::size_t best = 0;
    std::function<void(VertexId, std::size_t)> walk = [&](VertexId v, std::size_t len) {
        best = std::max(best, len);
        for (VertexId w : dag.successors[v])
            walk(w, len + 1);
    };
    for (VertexId v = 0; v < dag.vertex_count; ++v)
        walk(v, 0);
    return best;
}

TEST(GradientDagTest, LongestPathExactAndBounded) {
    for (int n = 1; n <= 18; ++n) {
        const auto g = build_graph(n);
        const auto t = invariant_table(g);
        for (const auto& f : t.registry()) {
            const auto dag = gradient_dag(g, f);
            ASSERT_EQ(2 * (dag.directed.size() + dag.plateau.size()), oriented_edges(g).size());
            const auto path = longest_strict_path(dag);
            ASSERT_LE(path.length + 1, f.realized_values().size()) << "n=" << n << " " << f.name;
            ASSERT_EQ(path.vertices.size(), path.length + 1);
            for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i)
                ASSERT_GT(f(path.vertices[i + 1]), f(path.vertices[i]));
            if (n <= 9)
                ASSERT_EQ(path.length, brute_longest(dag)) << "n=" << n << " " << f.name;
        }
    }
}

TEST(GradientDagTest, StrictEdgesAreUpwardCrossings) {
    for (int n = 1; n <= 14; ++n) {
        const auto g = build_graph(n);
        const auto t = invariant_table(g);
        for (const auto& f : t.registry()) {
            const auto values = f.realized_values();
            for (const auto& e : oriented_edges(g)) {
                bool up = false;
                for (int r = values.front() - 1; r <= values.back() + 1; ++r) {
                    const auto layer = threshold_layer(f, r).members;
                    const bool src_in = std::binary_search(layer.begin(), layer.end(), e.source);
                    const bool dst_in = std::binary_search(layer.begin(), layer.end(), e.target);
                    up |= !src_in && dst_in;
                }
                ASSERT_EQ(jump(e, f) > 0, up);
            }
        }
    }
}

TEST(BoundaryTest, OrientedCountsBalance) {
    for (int n = 1; n <= 14; ++n) {
        const auto g = build_graph(n);
        const auto t = invariant_table(g);
        for (const auto& f : t.registry()) {
            const auto values = f.realized_values();
            for (int r = values.front(); r <= values.back() + 1; ++r) {
                const auto b = edge_boundary(g, f, r);
                ASSERT_EQ(b.count_plus, b.count_minus);
                ASSERT_EQ(b.count_plus, b.count);
            }
        }
    }
}

TEST(ConeTest, ParseAndPrint) {
    const auto c = parse_cone("+-*");
    EXPECT_EQ(c.components[0], SignConstraint::nonnegative);
    EXPECT_EQ(c.components[1], SignConstraint::nonpositive);
    EXPECT_EQ(c.components[2], SignConstraint::any);
    EXPECT_FALSE(c.strict_somewhere);
    EXPECT_EQ(to_string(parse_cone("0!*/strict")), "0!*/strict");
    EXPECT_THROW(parse_cone("++"), std::invalid_argument);
    EXPECT_THROW(parse_cone("++x"), std::invalid_argument);
    EXPECT_THROW(parse_cone("+++/weak"), std::invalid_argument);
}

TEST(ConeTest, Membership) {
    EXPECT_TRUE(parse_cone("+++").contains({2, 1, 1}));
    EXPECT_TRUE(parse_cone("+++").contains({0, 0, 0}));
    EXPECT_FALSE(parse_cone("+++/strict").contains({0, 0, 0}));
    EXPECT_FALSE(parse_cone("+-*").contains({1, 1, 0}));
    EXPECT_TRUE(parse_cone("+-*").contains({1, -1, 5}));
    EXPECT_TRUE(parse_cone("!0*").contains({-3, 0, 2}));
    EXPECT_FALSE(parse_cone("!0*").contains({0, 0, 2}));
}

TEST_F(LayersG4Test, CorridorExamples) {
    const std::vector<VertexId> up{id({4}), id({3, 1})};
    EXPECT_TRUE(is_corridor(g, t, up, parse_cone("+++")).ok);

    const std::vector<VertexId> flat{id({3, 1}), id({2, 1, 1})};
    const auto check = is_corridor(g, t, flat, parse_cone("***/strict"));
    EXPECT_FALSE(check.ok);
    EXPECT_EQ(check.first_violation, 0u);
    EXPECT_EQ(check.violating_signature, (JumpSignature{0, 0, 0}));

    const std::vector<VertexId> single{id({2, 2})};
    EXPECT_TRUE(is_corridor(g, t, single, parse_cone("0!0/strict")).ok);
    EXPECT_TRUE(is_corridor(g, t, std::vector<VertexId>{}, parse_cone("+++")).ok);

    const std::vector<VertexId> jumpy{id({4}), id({2, 2})};
    EXPECT_THROW(is_corridor(g, t, jumpy, parse_cone("***")), InvalidPath);
}

TEST(CorridorTest, AgreesWithStepwiseRecheckOnRandomWalks) {
    const auto g = build_graph(10);
    const auto t = invariant_table(g);
    const char symbols[] = {'+', '-', '0', '*', '!'};
    std::mt19937 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        std::string spec;
        for (int i = 0; i < 3; ++i)
            spec += symbols[rng() % 5];
        if (rng() % 2)
            spec += "/strict";
        const auto cone = parse_cone(spec);

        std::vector<VertexId> path{static_cast<VertexId>(rng() % g.vertex_count())};
        const std::size_t steps = rng() % 6;
        for (std::size_t s = 0; s < steps; ++s) {
            auto adj = g.adjacent(path.back());
            if (adj.empty())
                break;
            path.push_back(adj[rng() % adj.size()]);
        }
        std::optional<std::size_t> first_bad;
        for (std::size_t i = 0; i + 1 < path.size() && !first_bad; ++i) {
            const auto& a = t[path[i]];
            const auto& b = t[path[i + 1]];
            const std::array<int, 3> j{b.d - a.d, b.delta - a.delta, b.sigma - a.sigma};
            bool ok = !cone.strict_somewhere || j != std::array<int, 3>{0, 0, 0};
            for (std::size_t k = 0; k < 3; ++k) {
                switch (spec[k]) {
                case '+':
                    ok &= j[k] >= 0;
                    break;
                case '-':
                    ok &= j[k] <= 0;
                    break;
                case '0':
                    ok &= j[k] == 0;
                    break;
                case '!':
                    ok &= j[k] != 0;
                    break;
                default:
                    break;
                }
            }
            if (!ok)
                first_bad = i;
        }
        const auto check = is_corridor(g, t, path, cone);
        EXPECT_EQ(check.ok, !first_bad.has_value()) << spec;
        EXPECT_EQ(check.first_violation, first_bad) << spec;
    }
}

TEST_F(LayersG4Test, AxialClasses) {
    const OrientedEdge in{id({4}), id({3, 1})};
    EXPECT_EQ(classify_axial(t, in), AxialClass::inward);
    EXPECT_EQ(classify_axial(t, in.reversed()), AxialClass::outward);
    const OrientedEdge level{id({3, 1}), id({2, 1, 1})};
    EXPECT_EQ(classify_axial(t, level), AxialClass::neutral);
    EXPECT_EQ(classify_axial(t, level.reversed()), AxialClass::neutral);
}

} // namespace
} // namespace partgraph
