#include <gtest/gtest.h>

#include "support.hpp"

using namespace mvp;

namespace {

ReportTable sample() {
    ReportTable t{"sample", {"n", "label", "value"}, {}, {{"max_n", "3"}}};
    t.add_row({Cell(std::int64_t{1}), Cell(std::string("plain")), Cell(std::int64_t{-7})});
    t.add_row({Cell(std::int64_t{2}), Cell(std::string("with,comma")), Cell(std::int64_t{0})});
    t.add_row({Cell(std::int64_t{3}), Cell(std::string("say \"hi\"\nbye")), Cell(std::string(""))});
    t.add_row({Cell(std::int64_t{4}), Cell(std::string("42")), Cell(std::string("2-3,2-4"))});
    return t;
}

}  // namespace

TEST(Report, RowArityIsEnforced) {
    ReportTable t{"t", {"a", "b"}, {}, {}};
    EXPECT_THROW(t.add_row({Cell(std::int64_t{1})}), InvalidSize);
    t.add_row({Cell(std::int64_t{1}), Cell(std::int64_t{2})});
    EXPECT_EQ(t.int_at(0, "b"), 2);
    EXPECT_THROW(t.at(0, "c"), IndexOutOfRange);
}

TEST(Report, CsvFormat) {
    EXPECT_EQ(to_csv(sample()),
              "n,label,value\n"
              "1,\"plain\",-7\n"
              "2,\"with,comma\",0\n"
              "3,\"say \"\"hi\"\"\nbye\",\"\"\n"
              "4,\"42\",\"2-3,2-4\"\n");
}

TEST(Report, CsvRoundTrip) {
    const ReportTable t = sample();
    const ReportTable back = parse_csv(to_csv(t), t.name);
    EXPECT_EQ(back.headers, t.headers);
    EXPECT_EQ(back.rows, t.rows);

    for (const auto& table : {bounds_table(6), bipartite_table(3, 4), dec_vs_split_table(7), conjecture_table(5)}) {
        const ReportTable again = parse_csv(to_csv(table));
        EXPECT_EQ(again.headers, table.headers);
        EXPECT_EQ(again.rows, table.rows);
    }
}

TEST(Report, CsvParseErrors) {
    EXPECT_THROW(parse_csv(""), ParseError);
    EXPECT_THROW(parse_csv("a,b\n\"open,1\n"), ParseError);
    EXPECT_THROW(parse_csv("a,b\n1\n"), InvalidSize);
}

TEST(Report, JsonCarriesMetadata) {
    const auto j = to_json(sample());
    EXPECT_EQ(j["name"], "sample");
    EXPECT_EQ(j["headers"].size(), 3u);
    EXPECT_EQ(j["rows"][0][2], -7);
    EXPECT_EQ(j["rows"][3][1], "42");
    EXPECT_EQ(j["metadata"]["max_n"], "3");
}

TEST(Report, PrettyAlignsColumns) {
    ReportTable t{"p", {"n", "value"}, {}, {{"pruning", "p2-free"}}};
    t.add_row({Cell(std::int64_t{1}), Cell(std::int64_t{12345})});
    EXPECT_EQ(to_pretty(t), "p\nn | value\n--+------\n1 | 12345\n# pruning: p2-free\n");
}

TEST(Tables, BoundsMatchKnownSmallRows) {
    const auto t = bounds_table(6);
    ASSERT_EQ(t.rows.size(), 6u);
    EXPECT_EQ(t.headers, (std::vector<std::string>{"n", "one_subgraphs", "p2_free", "valid", "hs"}));
    const std::vector<std::int64_t> p2{1, 2, 5, 15, 52, 203}, valid{1, 2, 4, 9, 21, 51}, hs{1, 2, 4, 8, 16, 32}, subs{1, 2, 6, 24, 120, 720};
    for (std::size_t r = 0; r < 6; ++r) {
        EXPECT_EQ(t.int_at(r, "one_subgraphs"), subs[r]);
        EXPECT_EQ(t.int_at(r, "p2_free"), p2[r]);
        EXPECT_EQ(t.int_at(r, "valid"), valid[r]);
        EXPECT_EQ(t.int_at(r, "hs"), hs[r]);
    }
    bool has_wall_time = false;
    for (const auto& [k, v] : t.metadata) has_wall_time = has_wall_time || k == "wall_time_s";
    EXPECT_TRUE(has_wall_time);
}

TEST(Tables, BipartiteLayoutAndEdges) {
    const auto t = bipartite_table(4, 3, 2);
    EXPECT_EQ(t.headers, (std::vector<std::string>{"n", "m=1", "m=2", "m=3", "m=4"}));
    ASSERT_EQ(t.rows.size(), 3u);
    EXPECT_EQ(t.int_at(2, "m=4"), 50);
    // n = 1 is the star: m + 1; m = 1 is the star the other way: 2^n.
    for (std::size_t m = 1; m <= 4; ++m) EXPECT_EQ(t.int_at(0, "m=" + std::to_string(m)), static_cast<std::int64_t>(m + 1));
    for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(t.int_at(n - 1, "m=1"), std::int64_t{1} << n);
}

TEST(Tables, ConjectureColumns) {
    const auto t = conjecture_table(6);
    ASSERT_EQ(t.rows.size(), 4u);
    EXPECT_EQ(t.int_at(3, "n"), 6);
    EXPECT_EQ(t.int_at(3, "split_right_fibre"), 51);
    EXPECT_EQ(t.int_at(3, "split_right_is_argmax"), 1);
    EXPECT_EQ(t.int_at(3, "max_fibre"), 51);
    EXPECT_EQ(t.int_at(0, "dec_fibre"), 4);
}
