#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "redkron/partition.hpp"

using namespace redkron;

TEST(Partition, CanonicalForm)
{
    EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
    EXPECT_EQ(Partition().size(), 0);
    EXPECT_EQ(Partition({4, 2, 1, 1}).size(), 8);
    EXPECT_EQ(Partition({4, 2, 1, 1}).length(), 4);
    EXPECT_EQ(Partition().first(), 0);
    EXPECT_THROW(Partition({1, 2}), PreconditionError);
    EXPECT_THROW(Partition({2, -1}), PreconditionError);
    EXPECT_THROW(Partition({2, 0, 1}), PreconditionError);
}

TEST(Partition, Conjugate)
{
    EXPECT_EQ(conjugate({3, 1}), Partition({2, 1, 1}));
    EXPECT_EQ(conjugate({}), Partition());
    EXPECT_EQ(conjugate({4, 4, 2, 2}), Partition({4, 4, 2, 2}));
    for (int n = 0; n <= 12; ++n)
        for (const auto& p : enumerate_partitions(n))
            ASSERT_EQ(conjugate(conjugate(p)), p);
}

TEST(Partition, CombineExamples)
{
    Partition a{4, 4, 2, 2}, b{3, 2, 1};
    EXPECT_EQ(combine(a, b, CombineMode::cols), Partition({7, 6, 3, 2}));
    EXPECT_EQ(combine(a, b, CombineMode::rows), Partition({4, 4, 3, 2, 2, 2, 1}));
    EXPECT_EQ(combine(a, {}, CombineMode::cols), a);
    EXPECT_EQ(combine(a, {}, CombineMode::rows), a);
}

TEST(Partition, ConjugateSwapsCombineModes)
{
    auto parts = partitions_up_to(8);
    for (const auto& a : parts)
        for (const auto& b : parts)
            if (a.size() + b.size() <= 8) {
                ASSERT_EQ(conjugate(a + b), conjugate(a) | conjugate(b));
            }
}

TEST(Partition, CombineAssociativeCommutative)
{
    std::mt19937 rng(7);
    auto parts = partitions_up_to(5);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    for (int i = 0; i < 300; ++i) {
        const auto& a = parts[pick(rng)];
        const auto& b = parts[pick(rng)];
        const auto& c = parts[pick(rng)];
        for (auto mode : {CombineMode::cols, CombineMode::rows}) {
            ASSERT_EQ(combine(a, b, mode), combine(b, a, mode));
            ASSERT_EQ(combine(combine(a, b, mode), c, mode), combine(a, combine(b, c, mode), mode));
        }
    }
}

TEST(Partition, DistinctParts)
{
    EXPECT_EQ(dp({3, 2, 1}), 3);
    EXPECT_EQ(dp({2, 2}), 1);
    EXPECT_EQ(dp({}), 0);
}

TEST(Partition, Pad)
{
    auto a = pad({2, 1}, 7);
    EXPECT_EQ(a.composition, Composition({4, 2, 1}));
    EXPECT_TRUE(a.is_partition);
    auto b = pad({2, 1}, 4);
    EXPECT_EQ(b.composition, Composition({1, 2, 1}));
    EXPECT_FALSE(b.is_partition);
    EXPECT_THROW(b.partition(), PreconditionError);
    auto c = pad({}, 3);
    EXPECT_EQ(c.composition, Composition({3}));
    EXPECT_EQ(c.partition(), Partition({3}));
    EXPECT_THROW(pad({1}, -1), PreconditionError);
}

TEST(Partition, Staircase)
{
    EXPECT_EQ(staircase(3), Partition({3, 2, 1}));
    EXPECT_EQ(staircase(0), Partition());
    EXPECT_EQ(staircase(1), Partition({1}));
}

TEST(Partition, OneBox)
{
    EXPECT_TRUE(differs_by_one_box({2}, {1, 1}));
    EXPECT_FALSE(differs_by_one_box({3}, {1, 1, 1}));
    EXPECT_FALSE(differs_by_one_box({2, 1}, {2, 1}));
    EXPECT_TRUE(differs_by_one_box({}, {1}));
    EXPECT_TRUE(differs_by_one_box({2, 1}, {2}));
    EXPECT_FALSE(differs_by_one_box({2, 1}, {1}));
}

TEST(Partition, Enumerate)
{
    std::vector<Partition> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    EXPECT_EQ(enumerate_partitions(4), four);
    EXPECT_EQ(enumerate_partitions(0), std::vector<Partition>{Partition()});
    EXPECT_EQ(enumerate_partitions(13).size(), 101u);
    auto twelve = enumerate_partitions(12);
    for (std::size_t i = 1; i < twelve.size(); ++i)
        ASSERT_GT(twelve[i - 1], twelve[i]);
}

TEST(Partition, IsLarger)
{
    EXPECT_TRUE(is_larger({4, 2, 1, 1}, {3, 2, 1}));
    EXPECT_TRUE(is_larger({4, 3, 1}, {3, 2, 1}));
    EXPECT_FALSE(is_larger({2, 2}, {3}));
    EXPECT_TRUE(is_larger({3, 2, 1}, {3, 2, 1}));
    EXPECT_TRUE(is_larger({2, 1}, {}));
    EXPECT_FALSE(is_larger({3}, {2, 1}));
}

TEST(Partition, IsLargerProperties)
{
    auto parts = partitions_up_to(5);
    for (const auto& a : parts) {
        ASSERT_TRUE(is_larger(a, a));
        for (const auto& b : parts) {
            if (!is_larger(a, b))
                continue;
            ASSERT_GE(a.size(), b.size());
            ASSERT_GE(a.length(), b.length());
            ASSERT_GE(a.first(), b.first());
            for (const auto& c : parts)
                if (is_larger(b, c)) {
                    ASSERT_TRUE(is_larger(a, c)) << "transitivity";
                }
        }
    }
}

TEST(Partition, IsLargerMatchesSingleSteps)
{
    // Every one-step combination is found.
    auto parts = partitions_up_to(3);
    for (const auto& a : parts)
        for (const auto& t : parts) {
            if (t.empty())
                continue;
            ASSERT_TRUE(is_larger(a + t, a));
            ASSERT_TRUE(is_larger(a | t, a));
        }
}

TEST(Sequence, PaperTable)
{
    const std::int64_t g[] = {0, 1, 2, 5, 9, 17, 28, 47, 73, 114, 170, 253, 365};
    const std::int64_t p[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101};
    const std::int64_t f[] = {1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496, 35696, 140152, 568504};
    for (int n = 1; n <= 13; ++n) {
        auto i = static_cast<std::size_t>(n - 1);
        EXPECT_EQ(sequence(SequenceKind::p, n), p[i]) << n;
        EXPECT_EQ(sequence(SequenceKind::f, n), f[i]) << n;
        EXPECT_EQ(sequence(SequenceKind::g, n), g[i]) << n;
    }
    EXPECT_THROW(sequence(SequenceKind::p, 0), PreconditionError);
}

TEST(Sequence, IndependentRoutes)
{
    for (int n = 1; n <= 13; ++n) {
        auto parts = enumerate_partitions(n);
        std::int64_t hook_sum = 0, recursion_sum = 0, pairs = 0;
        for (const auto& p : parts) {
            hook_sum += syt_count(p);
            if (n <= 9)
                recursion_sum += oracle::syt_by_recursion(p);
        }
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = a + 1; b < parts.size(); ++b)
                pairs += differs_by_one_box(parts[a], parts[b]);
        EXPECT_EQ(hook_sum, sequence(SequenceKind::f, n));
        if (n <= 9) {
            EXPECT_EQ(recursion_sum, hook_sum);
        }
        EXPECT_EQ(pairs, sequence(SequenceKind::g, n));
        EXPECT_EQ(static_cast<std::int64_t>(parts.size()), sequence(SequenceKind::p, n));
    }
}
