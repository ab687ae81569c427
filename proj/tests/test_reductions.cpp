#include <gtest/gtest.h>

#include <algorithm>

#include <srr/oracle.hpp>
#include <srr/reductions.hpp>

#include "test_support.hpp"

namespace {

using srr::pos_t;

bool strictly_increasing(const std::vector<pos_t>& xs)
{
    return std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<pos_t>()) == xs.end();
}

TEST(Prss, BananaExamples)
{
    srr::prss_index ix("banana");
    EXPECT_EQ(ix.query("ana", 1, 6), (std::vector<pos_t>{2, 4}));
    EXPECT_EQ(ix.query("ana", 3, 6), std::vector<pos_t>{4});
    EXPECT_EQ(ix.query("b", 2, 6), std::vector<pos_t>{});
    EXPECT_EQ(ix.count("a", 1, 5), 2u);
}

TEST(Prss, RangeMustLieInText)
{
    srr::prss_index ix("banana");
    for (auto [a, b] : {std::pair{0, 3}, std::pair{2, 7}, std::pair{4, 3}}) {
        try {
            ix.query("a", a, b);
            FAIL() << a << ":" << b;
        } catch (const srr::error& e) {
            EXPECT_EQ(e.code(), srr::errc::range_out_of_bounds);
        }
    }
}

TEST(Intervals, LabelSweep)
{
    auto labels = srr::interval_labels(8, {{5, 6}, {1, 2}, {2, 3}});
    EXPECT_EQ(labels, (std::vector<srr::label_t>{1, 2, 3, 0, 5, 6, 0, 0}));
    EXPECT_EQ(srr::interval_labels(3, {}), (std::vector<srr::label_t>{0, 0, 0}));
}

TEST(Intervals, BananaExamples)
{
    srr::interval_index ix("banana", {{1, 2}, {4, 5}});
    EXPECT_EQ(ix.query("ana", 1, 6), (std::vector<pos_t>{2, 4}));
    EXPECT_EQ(ix.query("ana", 3, 6), std::vector<pos_t>{4});
    EXPECT_EQ(ix.query("a", 1, 6), (std::vector<pos_t>{2, 4}));

    srr::interval_index none("banana", {});
    EXPECT_EQ(none.query("ana", 1, 6), std::vector<pos_t>{});
    EXPECT_EQ(none.query("", 1, 6), std::vector<pos_t>{});
}

TEST(Intervals, OutOfBoundsIntervalRejected)
{
    for (auto iv : {std::pair<pos_t, pos_t>{0, 2}, {3, 7}, {4, 3}}) {
        try {
            srr::interval_index ix("banana", {iv});
            FAIL();
        } catch (const srr::error& e) {
            EXPECT_EQ(e.code(), srr::errc::interval_out_of_bounds);
        }
    }
}

TEST(Gaps, InnerHitSevenMapsToThree)
{
    // p1 = "ab" at 3, two wildcard bytes, p2 = "bac" at 7
    srr::gap_index ix("xxabyybac", 2);
    auto t = ix.trace("ab", "bac");
    EXPECT_EQ(t.inner_hits, std::vector<pos_t>{7});
    EXPECT_EQ(t.result, std::vector<pos_t>{3});
    EXPECT_EQ(7 - 2 - 2, 3);
}

TEST(Gaps, DerivedInstance)
{
    srr::gap_index ix("abxxbac", 2);
    auto t = ix.trace("ab", "bac");
    ASSERT_TRUE(t.reverse_locus);
    EXPECT_EQ(t.reverse_locus.l, 3u);
    EXPECT_EQ(t.reverse_locus.r, 3u);
    EXPECT_EQ(t.inner_hits, std::vector<pos_t>{5});
    EXPECT_EQ(t.result, std::vector<pos_t>{1});
    EXPECT_EQ(srr::oracle::naive_gap("abxxbac", 2, "ab", "bac"), std::vector<pos_t>{1});
}

TEST(Gaps, UnitRun)
{
    srr::gap_index ix("aaa", 1);
    EXPECT_EQ(ix.query("a", "a"), std::vector<pos_t>{1});
    EXPECT_EQ(ix.query("aa", "a"), std::vector<pos_t>{});
}

TEST(Gaps, LabelsFollowReversedOrders)
{
    const std::string text = "abxxbac";
    const std::size_t n = text.size(), d = 2;
    srr::gap_index ix(text, d);
    const auto& s = ix.inner().source();
    for (std::size_t i = 1; i <= n; ++i) {
        if (i >= d + 2) {
            const std::size_t j = n - i + d + 2;
            ASSERT_GE(j, 2u);
            ASSERT_LE(j, n);
            EXPECT_EQ(s.label(i), ix.reverse().order_of(j));
        } else {
            EXPECT_EQ(s.label(i), 0u);
        }
    }
}

TEST(Gaps, EmptyPatternsRejected)
{
    srr::gap_index ix("banana", 1);
    for (auto [p1, p2] : {std::pair{"", "a"}, std::pair{"a", ""}}) {
        try {
            ix.query(p1, p2);
            FAIL();
        } catch (const srr::error& e) {
            EXPECT_EQ(e.code(), srr::errc::empty_pattern);
        }
    }
}

TEST(Gaps, GapLongerThanText)
{
    srr::gap_index ix("abc", 5);
    EXPECT_EQ(ix.query("a", "c"), std::vector<pos_t>{});
    for (auto lab : ix.inner().source().labels)
        EXPECT_EQ(lab, 0u);
}

TEST(Reductions, RandomInstancesMatchDefinitions)
{
    srr::test::gen g(99);
    for (int trial = 0; trial < 300; ++trial) {
        const std::string text = g.text(g.between(1, 200), "abc");
        const std::size_t n = text.size();
        auto pick = [&](bool allow_empty) {
            const std::size_t len = g.between(allow_empty ? 0 : 1, std::min<std::size_t>(n, 6));
            return text.substr(g.between(0, n - len), len);
        };

        srr::prss_index prss(text);
        srr::interval_set pi(g.between(0, 16));
        for (auto& iv : pi) {
            pos_t s = static_cast<pos_t>(g.between(1, n));
            iv = {s, static_cast<pos_t>(g.between(s, n))};
        }
        srr::interval_index intervals(text, pi);
        const std::size_t d = g.between(0, 8);
        srr::gap_index gaps(text, d);

        for (int q = 0; q < 8; ++q) {
            std::size_t a = g.between(1, n), b = g.between(1, n);
            if (a > b)
                std::swap(a, b);
            const std::string p = pick(true);
            auto got = prss.query(p, a, b);
            ASSERT_EQ(got, srr::oracle::naive_prss(text, p, a, b));
            ASSERT_TRUE(strictly_increasing(got));

            got = intervals.query(p, a, b);
            ASSERT_EQ(got, srr::oracle::naive_interval(text, pi, p, a, b));
            ASSERT_TRUE(strictly_increasing(got));

            const std::string p1 = pick(false), p2 = pick(false);
            got = gaps.query(p1, p2);
            ASSERT_EQ(got, srr::oracle::naive_gap(text, d, p1, p2)) << text << " d=" << d << " " << p1 << "/" << p2;
            ASSERT_TRUE(strictly_increasing(got));
        }
    }
}

} // namespace
