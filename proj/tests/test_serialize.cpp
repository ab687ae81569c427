#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>

#include <srr/serialize.hpp>

#include "test_support.hpp"

namespace {

using srr::pos_t;

std::uint64_t read_le(const std::string& b, std::size_t off, int width)
{
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i)
        v |= std::uint64_t{static_cast<unsigned char>(b[off + i])} << (8 * i);
    return v;
}

TEST(Serialize, HeaderLayout)
{
    srr::srr_index ix(srr::labeled_string{"banana", {0, 9, 3, 3, 1, 2}, 9}, 3);
    const std::string b = srr::to_bytes(ix);
    ASSERT_GE(b.size(), 32u);
    EXPECT_EQ(b.substr(0, 4), "SRR1");
    EXPECT_EQ(read_le(b, 4, 4), srr::file_version);
    EXPECT_EQ(read_le(b, 8, 8), 6u);
    EXPECT_EQ(read_le(b, 16, 8), 9u);
    EXPECT_EQ(read_le(b, 24, 8), 3u);
    // first section is the raw text
    EXPECT_EQ(read_le(b, 32, 8), 6u);
    EXPECT_EQ(b.substr(40, 6), "banana");
}

void expect_error(const std::string& bytes, srr::errc code)
{
    try {
        srr::from_bytes(bytes);
        FAIL() << "expected " << srr::errc_name(code);
    } catch (const srr::error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

TEST(Serialize, RejectsWrongMagicAndVersion)
{
    const std::string good = srr::to_bytes(srr::prss_index("banana"));
    std::string bad = good;
    bad[0] = 'X';
    expect_error(bad, srr::errc::bad_magic);

    bad = good;
    bad[4] = 2;
    expect_error(bad, srr::errc::bad_version);
}

TEST(Serialize, RejectsTruncationAndTrailingBytes)
{
    const std::string good = srr::to_bytes(srr::gap_index("abxxbac", 2));
    for (std::size_t cut : {std::size_t{10}, std::size_t{40}, good.size() / 2, good.size() - 1})
        expect_error(good.substr(0, cut), srr::errc::corrupt_index);
    expect_error(good + "x", srr::errc::corrupt_index);
}

TEST(Serialize, RoundTripsEveryKind)
{
    srr::test::gen g(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::string text = g.text(g.between(1, 150), "abcd");
        const std::size_t n = text.size();
        srr::labeled_string s{text, g.labels(n, 300), 300};
        srr::interval_set pi{{1, static_cast<pos_t>(n)}};
        std::vector<srr::stored_index> kinds{srr::srr_index(s), srr::prss_index(text), srr::interval_index(text, pi),
                                             srr::gap_index(text, g.between(0, 4))};
        for (const auto& ix : kinds) {
            const std::string bytes = srr::to_bytes(ix);
            const auto back = srr::from_bytes(bytes);
            ASSERT_EQ(srr::kind_of(back), srr::kind_of(ix));
            ASSERT_EQ(srr::to_bytes(back), bytes);
            const auto& a = srr::inner_of(ix);
            const auto& b = srr::inner_of(back);
            for (int q = 0; q < 5; ++q) {
                const std::size_t len = g.between(1, std::min<std::size_t>(n, 5));
                const std::string p = text.substr(g.between(0, n - len), len);
                ASSERT_EQ(a.report(p, {0, a.u()}), b.report(p, {0, b.u()}));
                ASSERT_EQ(a.count(p, {0, a.u() / 2}), b.count(p, {0, b.u() / 2}));
            }
        }
        const auto& gap = std::get<srr::gap_index>(kinds[3]);
        const auto gap_back = srr::from_bytes(srr::to_bytes(kinds[3]));
        EXPECT_EQ(std::get<srr::gap_index>(gap_back).gap(), gap.gap());
        EXPECT_EQ(std::get<srr::gap_index>(gap_back).reverse().raw(), gap.reverse().raw());
    }
}

TEST(Serialize, SaveAndLoadFile)
{
    const auto path = std::filesystem::temp_directory_path() / "srr_serialize_test.srr";
    srr::interval_index ix("banana", {{1, 2}, {4, 5}});
    srr::save(path, ix);
    auto back = srr::load(path);
    std::filesystem::remove(path);
    ASSERT_EQ(srr::kind_of(back), srr::index_kind::interval);
    const auto& iv = std::get<srr::interval_index>(back);
    EXPECT_EQ(iv.query("ana", 3, 6), std::vector<pos_t>{4});
    EXPECT_EQ(iv.intervals(), ix.intervals());
}

TEST(Serialize, MissingFileIsIoError)
{
    try {
        srr::load("/nonexistent/dir/index.srr");
        FAIL();
    } catch (const srr::error& e) {
        EXPECT_EQ(e.code(), srr::errc::io);
    }
}

} // namespace
