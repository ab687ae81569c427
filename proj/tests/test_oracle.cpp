#include <gtest/gtest.h>

#include <srr/oracle.hpp>

namespace {

using srr::pos_t;
namespace oracle = srr::oracle;

TEST(Oracle, NaiveReport)
{
    auto s = srr::positional("banana");
    EXPECT_EQ(oracle::naive_report(s, "ana", {1, 6}), (std::vector<pos_t>{2, 4}));
    EXPECT_EQ(oracle::naive_report(s, "bananas", {0, 6}), std::vector<pos_t>{});
    EXPECT_EQ(oracle::naive_report(s, "", {0, 6}), (std::vector<pos_t>{1, 2, 3, 4, 5, 6}));
}

TEST(Oracle, CountAndEmptyFollowReport)
{
    auto s = srr::positional("banana");
    EXPECT_EQ(oracle::naive_count(s, "ana", {1, 6}), 2u);
    EXPECT_FALSE(oracle::naive_empty(s, "ana", {1, 6}));
    EXPECT_TRUE(oracle::naive_empty(s, "ana", {5, 6}));
    for (const char* p : {"", "a", "an", "nan", "x"}) {
        for (srr::label_t a = 0; a <= 6; ++a) {
            for (srr::label_t b = a; b <= 6; ++b) {
                const auto rep = oracle::naive_report(s, p, {a, b});
                EXPECT_EQ(oracle::naive_count(s, p, {a, b}), rep.size());
                EXPECT_EQ(oracle::naive_empty(s, p, {a, b}), rep.empty());
            }
        }
    }
}

TEST(Oracle, ReductionDefinitions)
{
    EXPECT_EQ(oracle::naive_gap("abxxbac", 2, "ab", "bac"), std::vector<pos_t>{1});
    EXPECT_EQ(oracle::naive_gap("aaa", 1, "a", "a"), std::vector<pos_t>{1});
    EXPECT_EQ(oracle::naive_interval("banana", {}, "ana", 1, 6), std::vector<pos_t>{});
    EXPECT_EQ(oracle::naive_interval("banana", {{1, 2}, {4, 5}}, "ana", 3, 6), std::vector<pos_t>{4});
    EXPECT_EQ(oracle::naive_prss("banana", "ana", 3, 6), std::vector<pos_t>{4});
}

} // namespace
