#include "partgraph/partition.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace partgraph {
namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

TEST(PartitionTest, ConstructionChecksShape) {
    EXPECT_THROW(P({}), std::invalid_argument);
    EXPECT_THROW(P({1, 2}), std::invalid_argument);
    EXPECT_THROW(P({2, 0}), std::invalid_argument);
    const auto p = P({3, 3, 1});
    EXPECT_EQ(p.weight(), 7);
    EXPECT_EQ(p.largest_part(), 3);
    EXPECT_EQ(p.length(), 3);
    EXPECT_EQ(p.multiplicity(3), 2);
    EXPECT_EQ(p.multiplicity(2), 0);
    EXPECT_EQ(p.multiplicity(0), 0);
    EXPECT_EQ(p.multiplicity(99), 0);
}

TEST(PartitionTest, MultiplicityViewSumsToWeight) {
    for (int n = 1; n <= 15; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            int s = 0;
            for (int i = 1; i <= n; ++i)
                s += i * p.multiplicity(i);
            EXPECT_EQ(s, n) << p;
        }
}

TEST(EnumerateTest, PartitionsOfFourInCanonicalOrder) {
    EXPECT_EQ(enumerate_partitions(4), (std::vector{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})}));
}

TEST(EnumerateTest, SmallCases) {
    EXPECT_EQ(enumerate_partitions(1), std::vector{P({1})});
    EXPECT_EQ(enumerate_partitions(10).size(), 42u);
    EXPECT_THROW(enumerate_partitions(0), std::invalid_argument);
    EXPECT_THROW(enumerate_partitions(-3), std::invalid_argument);
}

TEST(EnumerateTest, CountsMatchPentagonalRecurrence) {
    const auto p = oracle::partition_counts(30);
    for (int n = 1; n <= 30; ++n)
        EXPECT_EQ(static_cast<std::int64_t>(enumerate_partitions(n).size()), p[static_cast<std::size_t>(n)]) << n;
}

TEST(EnumerateTest, StrictlyDescendingAndDistinct) {
    for (int n = 1; n <= 20; ++n) {
        const auto all = enumerate_partitions(n);
        for (std::size_t i = 1; i < all.size(); ++i)
            EXPECT_TRUE(canonical_before(all[i - 1], all[i])) << n << " at " << i;
        for (const auto& p : all)
            EXPECT_EQ(p.weight(), n);
    }
}

TEST(TransferTest, Examples) {
    EXPECT_EQ(apply_transfer(P({4, 4}), {4, 0}), P({4, 3, 1}));
    EXPECT_EQ(apply_transfer(P({2, 1, 1}), {1, 1}), P({2, 2}));
    // q = p − 1 just swaps two row sizes
    EXPECT_EQ(apply_transfer(P({2, 1}), {2, 1}), P({2, 1}));
    EXPECT_EQ(apply_transfer(P({2, 2}), {2, 2}), P({3, 1}));
}

TEST(TransferTest, IllegalTransfersRejected) {
    EXPECT_THROW(apply_transfer(P({3, 1}), {2, 0}), PreconditionError); // no part of size 2
    EXPECT_THROW(apply_transfer(P({3, 1}), {3, 2}), PreconditionError); // no recipient of size 2
    EXPECT_THROW(apply_transfer(P({3, 1}), {3, 3}), PreconditionError); // only one part of size 3
    EXPECT_THROW(apply_transfer(P({3, 1}), {0, 1}), PreconditionError);
    EXPECT_FALSE(is_legal(P({3, 1}), {3, -1}));
}

TEST(TransferTest, LegalTransfersExcludeIdentity) {
    EXPECT_TRUE(legal_transfers(P({1})).empty());
    EXPECT_EQ(legal_transfers(P({1, 1})), (std::vector<Transfer>{{1, 1}}));
    EXPECT_EQ(legal_transfers(P({2, 2})), (std::vector<Transfer>{{2, 0}, {2, 2}}));
}

// Every (p, q) pair with p, q in 0..n+1 is either illegal, an identity, or
// listed by legal_transfers.
TEST(TransferTest, LegalTransfersMatchExhaustiveScan) {
    for (int n = 1; n <= 10; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            std::set<Transfer> expected;
            for (int p = 0; p <= n + 1; ++p)
                for (int q = -1; q <= n + 1; ++q) {
                    Transfer t{p, q};
                    if (is_legal(lambda, t) && apply_transfer(lambda, t) != lambda)
                        expected.insert(t);
                }
            const auto got = legal_transfers(lambda);
            EXPECT_EQ(std::set<Transfer>(got.begin(), got.end()), expected) << lambda;
        }
}

TEST(NeighborsTest, Examples) {
    EXPECT_EQ(neighbors(P({3, 1})), (std::vector{P({4}), P({2, 2}), P({2, 1, 1})}));
    EXPECT_EQ(neighbors(P({5})), std::vector{P({4, 1})});
    EXPECT_TRUE(neighbors(P({1})).empty());
}

TEST(NeighborsTest, SymmetricWeightPreservingIrreflexive) {
    for (int n = 1; n <= 18; ++n) {
        const auto all = enumerate_partitions(n);
        std::set<std::pair<std::vector<int>, std::vector<int>>> arcs;
        for (const auto& l : all)
            for (const auto& m : neighbors(l)) {
                ASSERT_EQ(m.weight(), n);
                ASSERT_NE(m, l);
                arcs.insert({l.parts(), m.parts()});
            }
        for (const auto& [l, m] : arcs)
            ASSERT_TRUE(arcs.count({m, l})) << "n=" << n;
    }
}

TEST(NeighborsTest, MultiplicityChangesAreLocal) {
    for (int n = 1; n <= 14; ++n)
        for (const auto& l : enumerate_partitions(n))
            for (Transfer t : legal_transfers(l)) {
                const auto m = apply_transfer(l, t);
                for (int i = 1; i <= n; ++i) {
                    const bool affected = i == t.donor || i == t.recipient || i == t.donor - 1 || i == t.recipient + 1;
                    if (!affected) {
                        EXPECT_EQ(l.multiplicity(i), m.multiplicity(i)) << l << " -> " << m << " size " << i;
                    }
                }
            }
}

TEST(SupportTest, Examples) {
    EXPECT_EQ(support(P({3, 1})), (std::vector{1, 3}));
    EXPECT_EQ(support_size(P({3, 1})), 2);
    EXPECT_EQ(support(P({4})), std::vector{4});
    EXPECT_EQ(support_size(P({4})), 1);
    EXPECT_EQ(support(P({2, 2, 2})), std::vector{2});
    EXPECT_EQ(support_size(P({2, 2, 2})), 1);
}

TEST(FormatTest, ParseAndPrint) {
    EXPECT_EQ(to_string(P({3, 1})), "[3,1]");
    EXPECT_EQ(parse_partition("[3,1]"), P({3, 1}));
    EXPECT_EQ(parse_partition(" [ 4 , 4 ] "), P({4, 4}));
    EXPECT_THROW(parse_partition("[1,3]"), std::invalid_argument);
    EXPECT_THROW(parse_partition("[3,0]"), std::invalid_argument);
    EXPECT_THROW(parse_partition("[3,-1]"), std::invalid_argument);
    EXPECT_THROW(parse_partition("[]"), std::invalid_argument);
    EXPECT_THROW(parse_partition("3,1"), std::invalid_argument);
    EXPECT_THROW(parse_partition("[3,1"), std::invalid_argument);
    EXPECT_THROW(parse_partition("[3,1]x"), std::invalid_argument);
}

TEST(FormatTest, RoundTripRandomPartitions) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 25);
        const auto all = enumerate_partitions(n);
        const auto& p = all[rng() % all.size()];
        EXPECT_EQ(parse_partition(to_string(p)), p);
    }
}

} // namespace
} // namespace partgraph
