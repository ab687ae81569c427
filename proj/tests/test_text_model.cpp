#include <gtest/gtest.h>

#include <srr/text_model.hpp>

namespace {

using srr::errc;
using srr::labeled_string;

TEST(Validate, AcceptsWellFormedString)
{
    labeled_string s{"ab", {1, 2}, 2};
    EXPECT_TRUE(srr::validate(s).ok);
}

TEST(Validate, ReportsFirstLabelAboveUniverse)
{
    labeled_string s{"ab", {1, 3}, 2};
    auto v = srr::validate(s);
    ASSERT_FALSE(v.ok);
    EXPECT_EQ(v.code, errc::label_out_of_range);
    EXPECT_EQ(v.index, 2u);

    labeled_string t{"abc", {9, 9, 0}, 2};
    EXPECT_EQ(srr::validate(t).index, 1u);
}

TEST(Validate, RejectsEmptyText)
{
    labeled_string s{"", {}, 0};
    auto v = srr::validate(s);
    ASSERT_FALSE(v.ok);
    EXPECT_EQ(v.code, errc::empty_text);
}

TEST(Validate, RejectsLengthMismatch)
{
    labeled_string s{"abc", {0, 1}, 5};
    auto v = srr::validate(s);
    ASSERT_FALSE(v.ok);
    EXPECT_EQ(v.code, errc::length_mismatch);
}

TEST(Validate, ThrowingFormCarriesCodeAndIndex)
{
    labeled_string s{"ab", {1, 3}, 2};
    try {
        srr::validate_or_throw(s);
        FAIL() << "expected an error";
    } catch (const srr::error& e) {
        EXPECT_EQ(e.code(), errc::label_out_of_range);
        EXPECT_EQ(e.index(), 2u);
    }
}

TEST(Positional, LabelsEqualPositions)
{
    auto s = srr::positional("banana");
    EXPECT_EQ(s.u, 6u);
    for (std::size_t i = 1; i <= 6; ++i)
        EXPECT_EQ(s.label(i), i);
    EXPECT_TRUE(srr::validate(s).ok);
}

TEST(CheckRange, BoundsAgainstUniverse)
{
    EXPECT_NO_THROW(srr::check_range({0, 6}, 6));
    EXPECT_NO_THROW(srr::check_range({3, 3}, 6));
    EXPECT_THROW(srr::check_range({0, 7}, 6), srr::error);
    EXPECT_THROW(srr::check_range({4, 3}, 6), srr::error);
}

} // namespace
