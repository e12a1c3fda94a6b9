#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "redkron/characters.hpp"

using namespace redkron;

TEST(CycleTypes, Centralizers)
{
    auto ct = make_cycle_type({2, 2, 1});
    EXPECT_TRUE(ct.centralizer == 8);
    EXPECT_TRUE(ct.class_size == 15);
    EXPECT_EQ(ct.sign(), 1);
    EXPECT_EQ(make_cycle_type({3, 1}).sign(), 1);
    EXPECT_EQ(make_cycle_type({2, 1, 1}).sign(), -1);
    for (int n = 0; n <= 14; ++n) {
        int128 total = 0;
        for (const auto& c : cycle_types(n))
            total += c.class_size;
        ASSERT_TRUE(total == factorial(n)) << n;
    }
}

TEST(Characters, MatchesBorderStripOracle)
{
    for (int n = 0; n <= 7; ++n) {
        auto t = build_character_table(n);
        for (const auto& l : t.partitions())
            for (const auto& r : t.partitions())
                ASSERT_EQ(t.value(l, r), oracle::border_strip_character(l, r.vec())) << n;
    }
}

TEST(Characters, KnownValues)
{
    EXPECT_EQ(character_value({2, 1}, Partition{3}), -1);
    EXPECT_EQ(character_value({2, 1}, Partition{2, 1}), 0);
    EXPECT_EQ(character_value({2, 1}, Partition{1, 1, 1}), 2);
    EXPECT_EQ(character_value({3, 2}, Partition{1, 1, 1, 1, 1}), 5);
    EXPECT_EQ(character_value({}, Partition{}), 1);
    EXPECT_THROW(character_value({2}, Partition{1}), SizeMismatch);
}

TEST(Characters, HookLengthDimensions)
{
    for (int n = 0; n <= 10; ++n) {
        auto t = build_character_table(n);
        const auto identity = t.require_index(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
        for (std::size_t i = 0; i < t.dimension(); ++i) {
            ASSERT_EQ(t.value(i, identity), syt_count(t.partitions()[i]));
            if (n <= 8) {
                ASSERT_EQ(t.value(i, identity), oracle::syt_by_recursion(t.partitions()[i]));
            }
        }
    }
}

TEST(Characters, Orthogonality)
{
    for (int n = 1; n <= 12; ++n) {
        auto t = build_character_table(n);
        const auto& cls = t.classes();
        for (std::size_t a = 0; a < t.dimension(); ++a)
            for (std::size_t b = a; b < t.dimension(); ++b) {
                int128 s = 0;
                for (std::size_t c = 0; c < t.dimension(); ++c)
                    s += cls[c].class_size * t.value(a, c) * t.value(b, c);
                ASSERT_TRUE(s == (a == b ? factorial(n) : 0)) << n << " " << a << " " << b;
            }
        for (std::size_t c = 0; c < t.dimension(); ++c)
            for (std::size_t d = c; d < t.dimension(); ++d) {
                int128 s = 0;
                for (std::size_t a = 0; a < t.dimension(); ++a)
                    s += static_cast<int128>(t.value(a, c)) * t.value(a, d);
                ASSERT_TRUE(s == (c == d ? cls[c].centralizer : 0));
            }
    }
}

TEST(Characters, SignTwist)
{
    for (int n = 1; n <= 11; ++n) {
        auto t = build_character_table(n);
        for (std::size_t a = 0; a < t.dimension(); ++a) {
            auto ca = t.require_index(conjugate(t.partitions()[a]));
            for (std::size_t c = 0; c < t.dimension(); ++c)
                ASSERT_EQ(t.value(ca, c), t.classes()[c].sign() * t.value(a, c));
        }
    }
}

TEST(Characters, Limits)
{
    EXPECT_THROW(build_character_table(-1), PreconditionError);
    EXPECT_THROW(build_character_table(kMaxSupportedLevel + 1), ResourceLimit);
    TableStore store(TableStore::Limits{6, 6});
    EXPECT_NO_THROW(store.table(6));
    EXPECT_THROW(store.table(7), ResourceLimit);
    EXPECT_THROW(store.check_product_level(7), ResourceLimit);
}

TEST(Characters, StoreSharesTables)
{
    TableStore store;
    auto a = store.table(9);
    auto b = store.table(9);
    EXPECT_EQ(a.get(), b.get());
    EXPECT_EQ(a->dimension(), 30u);
}

class CacheTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir = std::filesystem::temp_directory_path()
              / ("redkron_cache_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_"
                 + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::remove_all(dir);
    }
    void TearDown() override { std::filesystem::remove_all(dir); }

    static std::string slurp(const std::filesystem::path& p)
    {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    std::filesystem::path dir;
};

TEST_F(CacheTest, RoundTripIsBitExact)
{
    for (int n : {0, 1, 5, 12}) {
        auto t = build_character_table(n);
        auto text = table_to_json(t);
        auto back = table_from_json(text);
        EXPECT_EQ(back.partitions(), t.partitions());
        EXPECT_EQ(back.values(), t.values());
        EXPECT_EQ(table_to_json(back), text);
    }
}

TEST_F(CacheTest, StoreReadsWhatItWrote)
{
    std::string first;
    {
        TableStore store(TableStore::Limits{}, dir);
        auto path = store.write_cache(10);
        EXPECT_EQ(path.filename(), "chartable_10.json");
        first = slurp(path);
    }
    TableStore again(TableStore::Limits{}, dir);
    auto t = again.table(10);
    EXPECT_EQ(table_to_json(*t), first);
    EXPECT_EQ(t->values(), build_character_table(10).values());
    again.write_cache(10);
    EXPECT_EQ(slurp(dir / cache_file_name(10)), first);
}

TEST_F(CacheTest, CorruptCacheIsRejected)
{
    std::filesystem::create_directories(dir);
    std::ofstream(dir / cache_file_name(4)) << "{\"format_version\":1,\"n\":4,\"partitions\":[[4]],\"values\":[[1]]}\n";
    TableStore store(TableStore::Limits{}, dir);
    EXPECT_THROW(store.table(4), Error);
    EXPECT_THROW(table_from_json("not json"), Error);
}
