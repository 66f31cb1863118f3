#include <gtest/gtest.h>

#include "support.hpp"

using namespace mvp;

TEST(Text, ParsesIntegerLists) {
    EXPECT_EQ(text::parse_int_list("3,1, 1 ,2"), (std::vector<int>{3, 1, 1, 2}));
    EXPECT_TRUE(text::parse_int_list("  ").empty());
    EXPECT_THROW(text::parse_int_list("1,,2"), ParseError);
    EXPECT_THROW(text::parse_int_list("1,x"), ParseError);
    EXPECT_THROW(text::parse_int("12abc"), ParseError);
}

TEST(Permutation, ParsesDigitAndCommaForms) {
    EXPECT_EQ(parse_permutation("3412"), Permutation({3, 4, 1, 2}));
    EXPECT_EQ(parse_permutation("3,4,1,2"), Permutation({3, 4, 1, 2}));
    EXPECT_EQ(to_string(parse_permutation("10,3,1,2,4,5,6,7,8,9")), "10,3,1,2,4,5,6,7,8,9");
    EXPECT_EQ(to_string(Permutation({2, 3, 1})), "231");
    EXPECT_THROW(parse_permutation("3413"), ParseError);
    EXPECT_THROW(parse_permutation(""), ParseError);
    EXPECT_THROW(Permutation({0, 1}), InvalidPermutation);
}

TEST(Permutation, InverseAndIndexing) {
    const Permutation pi = parse_permutation("42315");
    EXPECT_EQ(pi(1), 4);
    EXPECT_THROW(pi(6), IndexOutOfRange);
    EXPECT_EQ(pi.inverse(), parse_permutation("42315"));
    EXPECT_EQ(parse_permutation("3412").inverse(), parse_permutation("3412"));
    EXPECT_EQ(parse_permutation("231").inverse(), parse_permutation("312"));
}

TEST(Permutation, NamedFamilies) {
    EXPECT_EQ(bipart(4, 3), parse_permutation("4567123"));
    EXPECT_EQ(dec(4), parse_permutation("4321"));
    EXPECT_EQ(split_left(2, 6), parse_permutation("87654312"));
    EXPECT_EQ(split_left(2, 1), parse_permutation("312"));
    EXPECT_EQ(split_right(2, 3), parse_permutation("45321"));
    EXPECT_THROW(dec(0), InvalidSize);
    EXPECT_THROW(bipart(0, 2), InvalidSize);
}

TEST(Permutation, EnumeratesSymmetricGroupInOrder) {
    std::vector<Permutation> all;
    for_each_permutation(4, [&](const Permutation& pi) { all.push_back(pi); });
    ASSERT_EQ(all.size(), 24u);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(all.front(), Permutation::identity(4));
    EXPECT_EQ(all.back(), dec(4));
}

TEST(ArcSet, ValidatesAndRenders) {
    const ArcSet s(5, {{2, 4}, {2, 3}});
    EXPECT_EQ(to_string(s), "2-3,2-4");
    EXPECT_EQ(parse_arcset("2-4, 2-3", 5), s);
    EXPECT_EQ(to_string(ArcSet(3)), "");
    EXPECT_THROW(ArcSet(3, {{2, 2}}), InvalidSize);
    EXPECT_THROW(ArcSet(3, {{1, 4}}), InvalidSize);
    EXPECT_THROW(ArcSet(3, {{1, 2}, {1, 2}}), InvalidSize);
    EXPECT_THROW(parse_arcset("1:2", 3), ParseError);
    EXPECT_EQ(s.left_degrees(), (std::vector<int>{0, 0, 0, 1, 1, 0}));
    EXPECT_EQ(s.degrees(), (std::vector<int>{0, 0, 2, 1, 1, 0}));
}
