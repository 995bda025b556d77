#include <gtest/gtest.h>

#include <random>
#include <set>

#include "exotic/partitions.hpp"
#include "oracles.hpp"

using namespace exotic;

namespace {

std::set<std::pair<std::vector<int>, std::vector<int>>> as_raw(const std::vector<MarkedPartition>& mps)
{
    std::set<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& mp : mps)
        out.insert({std::vector<int>(mp.lambda().parts().begin(), mp.lambda().parts().end()),
                    std::vector<int>(mp.marks().begin(), mp.marks().end())});
    return out;
}

} // namespace

TEST(Partition, StripsTrailingZerosAndRejectsBadParts)
{
    EXPECT_EQ(Partition({2, 1, 0, 0}), (Partition{2, 1}));
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0, 1}), std::invalid_argument);
}

TEST(Partition, PartialSumsAgreeWithDirectSummation)
{
    const Partition p{4, 2, 2, 1};
    const std::vector<int> parts{4, 2, 2, 1};
    for (int i = 1; i <= 5; ++i) {
        int before = 0, through = 0, after = 0, from = 0;
        for (int j = 1; j <= 4; ++j) {
            const int v = parts[static_cast<std::size_t>(j - 1)];
            before += j < i ? v : 0;
            through += j <= i ? v : 0;
            after += j > i ? v : 0;
            from += j >= i ? v : 0;
        }
        EXPECT_EQ(p.sum_before(i), before) << i;
        EXPECT_EQ(p.sum_through(i), through) << i;
        EXPECT_EQ(p.sum_after(i), after) << i;
        EXPECT_EQ(p.sum_from(i), from) << i;
    }
    EXPECT_EQ(p.weight(), 9);
    EXPECT_EQ(p.part(0), 0);
    EXPECT_EQ(p.part(7), 0);
}

TEST(Partition, Transpose)
{
    EXPECT_EQ(transpose(Partition{2}), (Partition{1, 1}));
    EXPECT_EQ(transpose(Partition{}), Partition{});
    EXPECT_EQ(transpose(Partition{3, 1}), (Partition{2, 1, 1}));
    for (int n = 0; n <= 9; ++n)
        for (const auto& p : partitions_of(n))
            EXPECT_EQ(transpose(transpose(p)), p);
}

TEST(Partition, CountsMatchPentagonalRecurrence)
{
    for (int n = 0; n <= 20; ++n) {
        EXPECT_EQ(partition_count(n), oracle::partition_count(n)) << n;
        if (n <= 12) {
            EXPECT_EQ(static_cast<long long>(partitions_of(n).size()), oracle::partition_count(n)) << n;
        }
    }
}

TEST(Partition, EnumerationIsDescendingLexicographic)
{
    const auto ps = partitions_of(6);
    for (std::size_t i = 1; i < ps.size(); ++i)
        EXPECT_GT(ps[i - 1], ps[i]);
}

TEST(MarkedPartition, EachConditionIsEnforced)
{
    EXPECT_NO_THROW(MarkedPartition(Partition{2}, {1}));
    EXPECT_THROW(MarkedPartition(Partition{2}, {3}), std::invalid_argument);        // a_k <= lambda_k
    EXPECT_THROW(MarkedPartition(Partition{2}, {-1}), std::invalid_argument);       // a_k >= 0
    EXPECT_THROW(MarkedPartition(Partition{1, 1}, {1, 0}), std::invalid_argument);  // repeated part
    EXPECT_THROW(MarkedPartition(Partition{3, 1}, {1, 1}), std::invalid_argument);  // a_p - a_q > 0
    EXPECT_THROW(MarkedPartition(Partition{3, 2}, {3, 1}), std::invalid_argument);  // lambda_p - lambda_q > a_p - a_q
    EXPECT_NO_THROW(MarkedPartition(Partition{3, 1}, {2, 1}));
    EXPECT_THROW(MarkedPartition(Partition{2}, {1, 1}), std::invalid_argument); // longer than lambda
}

TEST(MarkedPartition, MarksArePaddedAndStripped)
{
    const MarkedPartition mp(Partition{3, 1}, {2});
    EXPECT_EQ(mp.mark(2), 0);
    EXPECT_EQ(mp.marks().size(), 2u);
    EXPECT_EQ(mp.stripped_marks(), std::vector<int>{2});
    EXPECT_EQ(to_string(mp), "((3,1),(2,0))");
}

TEST(MarkedPartition, EnumerationMatchesExhaustiveSearch)
{
    for (int n = 0; n <= 8; ++n)
        EXPECT_EQ(as_raw(enumerate_marked_partitions(n)), oracle::marked_partitions(n)) << "n=" << n;
}

TEST(MarkedPartition, SmallEnumerations)
{
    const auto zero = enumerate_marked_partitions(0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].lambda().empty());
    EXPECT_EQ(enumerate_marked_partitions(2).size(), 5u);
    EXPECT_EQ(enumerate_marked_partitions(3).size(), 10u);
}

TEST(MarkedPartition, EnumerationOrderAndNoDuplicates)
{
    const auto mps = enumerate_marked_partitions(7);
    for (std::size_t i = 1; i < mps.size(); ++i) {
        const auto& a = mps[i - 1];
        const auto& b = mps[i];
        if (a.lambda() == b.lambda()) {
            const std::vector<int> ma(a.marks().begin(), a.marks().end());
            const std::vector<int> mb(b.marks().begin(), b.marks().end());
            EXPECT_GT(ma, mb);
        } else {
            EXPECT_GT(a.lambda(), b.lambda());
        }
    }
}

TEST(BiPartition, Enumeration)
{
    const auto zero = enumerate_bipartitions(0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_EQ(zero[0], (BiPartition{Partition{}, Partition{}}));
    const auto one = enumerate_bipartitions(1);
    ASSERT_EQ(one.size(), 2u);
    EXPECT_EQ(one[0], (BiPartition{Partition{1}, Partition{}}));
    EXPECT_EQ(one[1], (BiPartition{Partition{}, Partition{1}}));
    EXPECT_EQ(enumerate_bipartitions(2).size(), 5u);
    for (int n = 0; n <= 10; ++n) {
        long long expected = 0;
        for (int k = 0; k <= n; ++k)
            expected += oracle::partition_count(k) * oracle::partition_count(n - k);
        EXPECT_EQ(static_cast<long long>(enumerate_bipartitions(n).size()), expected) << n;
    }
}

TEST(Bijection, ForwardExamples)
{
    EXPECT_EQ(to_bipartition(MarkedPartition(Partition{1, 1}, {0, 0})), (BiPartition{Partition{}, Partition{1, 1}}));
    EXPECT_EQ(to_bipartition(MarkedPartition(Partition{1, 1}, {0, 1})), (BiPartition{Partition{1, 1}, Partition{}}));
    EXPECT_EQ(to_bipartition(MarkedPartition(Partition{2}, {1})), (BiPartition{Partition{1}, Partition{1}}));
    EXPECT_EQ(to_bipartition(MarkedPartition(Partition{2}, {0})), (BiPartition{Partition{}, Partition{2}}));
}

TEST(Bijection, InverseExamples)
{
    EXPECT_EQ(from_bipartition({Partition{}, Partition{1, 1}}), MarkedPartition(Partition{1, 1}, {0, 0}));
    EXPECT_EQ(from_bipartition({Partition{2}, Partition{}}), MarkedPartition(Partition{2}, {2}));
    EXPECT_EQ(from_bipartition({Partition{1}, Partition{1}}), MarkedPartition(Partition{2}, {1}));
}

TEST(Bijection, BSequenceMatchesLiteralFormula)
{
    for (int n = 0; n <= 9; ++n) {
        for (const auto& mp : enumerate_marked_partitions(n)) {
            const std::vector<int> lambda(mp.lambda().parts().begin(), mp.lambda().parts().end());
            const std::vector<int> a(mp.marks().begin(), mp.marks().end());
            EXPECT_EQ(b_sequence(mp), oracle::b_sequence(lambda, a)) << to_string(mp);
        }
    }
}

TEST(Bijection, BijectiveUpToTen)
{
    for (int n = 0; n <= 10; ++n) {
        std::set<std::string> image;
        for (const auto& mp : enumerate_marked_partitions(n)) {
            const BiPartition bp = to_bipartition(mp);
            EXPECT_TRUE(image.insert(to_string(bp)).second) << to_string(mp);
            EXPECT_EQ(from_bipartition(bp), mp);
            for (int i = 1; i <= mp.lambda().length(); ++i)
                EXPECT_EQ(bp.mu.part(i) + bp.nu.part(i), mp.lambda().part(i)) << to_string(mp);
        }
        std::set<std::string> all;
        for (const auto& bp : enumerate_bipartitions(n))
            all.insert(to_string(bp));
        EXPECT_EQ(image, all) << "n=" << n;
    }
}

TEST(Bijection, RandomBipartitionsRoundTrip)
{
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = std::uniform_int_distribution<int>(0, 12)(rng);
        const auto bis = enumerate_bipartitions(n);
        const auto& bp = bis[std::uniform_int_distribution<std::size_t>(0, bis.size() - 1)(rng)];
        EXPECT_EQ(to_bipartition(from_bipartition(bp)), bp) << to_string(bp);
    }
}

TEST(Bijection, CanonicalOrderPutsLargerMuFirst)
{
    const auto bis = enumerate_bipartitions(4);
    for (std::size_t i = 1; i < bis.size(); ++i)
        EXPECT_TRUE(canonical_less(bis[i - 1], bis[i]));
}
