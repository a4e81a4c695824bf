#include "comet/stats.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <set>

using namespace comet;

namespace {

CommentUnit unit(std::uint64_t id, std::string raw, CommentKind kind = CommentKind::line_block) {
    CommentUnit u;
    u.id = id;
    u.file = "a.py";
    u.kind = kind;
    u.raw_text = std::move(raw);
    return u;
}

} // namespace

TEST_CASE("category_table: duplicates and docstring split") {
    const std::vector<CommentUnit> units{
        unit(1, "Copyright 2020 Acme Inc all rights reserved"),
        unit(2, "Copyright 2020 Acme Inc all rights reserved"),
        unit(3, "Returns the parsed configuration object for the caller",
             CommentKind::docstring),
    };
    const auto records = run_advanced(comet::test::classifier(), units);
    const auto table = category_table(records, units);

    const auto& cr = table.categories.at("copyright");
    CHECK(cr.with_dups_all == 2);
    CHECK(cr.without_dups_all == 1);
    CHECK(cr.with_dups_doc == 0);
    CHECK(cr.without_dups_doc == 0);

    CHECK(table.total.with_dups_all == 3);
    CHECK(table.total.without_dups_all == 2);
    CHECK(table.total.with_dups_doc == 1);

    const auto& dup = table.categories.at("duplicate");
    CHECK(dup.with_dups_all == 1);
    CHECK(dup.without_dups_all == 0);

    // invariants: without <= with, doc <= all
    for (const auto& [name, cell] : table.categories) {
        CHECK(cell.without_dups_all <= cell.with_dups_all);
        CHECK(cell.with_dups_doc <= cell.with_dups_all);
        CHECK(cell.without_dups_doc <= cell.without_dups_all);
    }
}

TEST_CASE("category_table: empty corpus is all zeros") {
    const auto table = category_table({}, {});
    CHECK(table.total.with_dups_all == 0);
    for (const auto& [name, cell] : table.categories) CHECK(cell.with_dups_all == 0);
}

TEST_CASE("category_table: one comment can land in several rows") {
    const std::vector<CommentUnit> units{
        unit(1, "Copyright 2019 Acme; default x = 5 for the threshold")};
    const auto records = run_advanced(comet::test::classifier(), units);
    const auto table = category_table(records, units);
    CHECK(table.categories.at("copyright").with_dups_all == 1);
    CHECK(table.categories.at("code_assignment").with_dups_all == 1);
    // group rollup counts the comment once
    CHECK(table.groups.at("code_math").with_dups_all == 1);
    CHECK(table.to_json_string().find("code_math") != std::string::npos);
    CHECK_FALSE(table.to_text_table().empty());
}

TEST_CASE("histogram buckets follow the published table shape") {
    std::vector<FileCommentStats> files;
    files.push_back({"a.py", 10, 0});
    files.push_back({"b.py", 20, 0});
    files.push_back({"c.py", 300, 57});
    files.push_back({"d.py", 900, 150});
    files.push_back({"e.py", 50, 100}); // boundary: exactly 100
    files.push_back({"f.py", 4000, 2500}); // outlier
    const auto rows = comments_per_file_histogram(files);

    auto row = [&](const std::string& bucket) {
        for (const auto& r : rows)
            if (r.bucket == bucket) return r;
        FAIL("missing bucket ", bucket);
        return HistogramRow{};
    };

    CHECK(row("0").files == 2);
    CHECK(row("0").loc == 30);
    CHECK(row("0").loc_avg == doctest::Approx(15.00));
    CHECK(row("11-100").files == 1);
    CHECK(row("100-2000").files == 2); // 150 and the boundary 100
    CHECK(row(">2000").files == 1);
    CHECK(row("total").files == 6);

    // histogram file counts sum to total files
    std::uint64_t sum = 0;
    for (const auto& r : rows)
        if (r.bucket != "total") sum += r.files;
    CHECK(sum == row("total").files);

    const auto csv = histogram_to_csv(rows);
    CHECK(csv.find("bucket,files,loc,loc_avg") == 0);
    CHECK(csv.find("0,2,30,15.00") != std::string::npos);
    CHECK_FALSE(histogram_to_json(rows).empty());
    CHECK_FALSE(histogram_to_text(rows).empty());
}

TEST_CASE("build_vocab: ordering and specials") {
    const std::vector<std::vector<std::string>> sentences{{"a", "b"}, {"a", "c"}};
    const auto v = build_vocab(sentences, 2);
    REQUIRE(v.tokens.size() == 5);
    CHECK(v.tokens[0] == "a"); // freq 2
    CHECK(v.tokens[1] == "b"); // tie broken lexicographically
    CHECK(v.tokens[2] == "<unk>");
    CHECK(v.tokens[3] == "<s>");
    CHECK(v.tokens[4] == "</s>");
    CHECK(v.freq.at("a") == 2);
}

TEST_CASE("build_vocab: small corpora keep everything") {
    const auto v = build_vocab({{"x", "x", "y"}}, 10);
    CHECK(v.tokens.size() == 2 + 3);
    const auto empty = build_vocab({}, 10);
    CHECK(empty.tokens.size() == 3); // specials only
    const auto k1 = build_vocab({{"x", "x", "y"}}, 1);
    REQUIRE(k1.tokens.size() == 4);
    CHECK(k1.tokens[0] == "x");
}

TEST_CASE("vocab_overlap: identical, disjoint, and mixed") {
    const std::vector<std::string> v{"a", "b", "c"};
    auto all_same = vocab_overlap({v, v, v, v});
    CHECK(all_same.regions.at("ABCD") == 3);
    CHECK(all_same.union_size == 3);
    std::uint64_t nonzero = 0;
    for (const auto& [label, n] : all_same.regions)
        if (n) ++nonzero;
    CHECK(nonzero == 1);

    auto disjoint = vocab_overlap({std::vector<std::string>{"a"},
                                   std::vector<std::string>{"b"},
                                   std::vector<std::string>{"c"},
                                   std::vector<std::string>{"d"}});
    CHECK(disjoint.regions.at("A") == 1);
    CHECK(disjoint.regions.at("B") == 1);
    CHECK(disjoint.regions.at("C") == 1);
    CHECK(disjoint.regions.at("D") == 1);
    CHECK(disjoint.regions.at("ABCD") == 0);

    // {a,b},{b,c},{b},{b,d}: brute-force region check
    auto mixed = vocab_overlap({std::vector<std::string>{"a", "b"},
                                std::vector<std::string>{"b", "c"},
                                std::vector<std::string>{"b"},
                                std::vector<std::string>{"b", "d"}});
    CHECK(mixed.regions.at("ABCD") == 1); // b
    CHECK(mixed.regions.at("A") == 1);    // a
    CHECK(mixed.regions.at("B") == 1);    // c
    CHECK(mixed.regions.at("D") == 1);    // d
    CHECK(mixed.union_size == 4);

    // region sum equals union size
    std::uint64_t sum = 0;
    for (const auto& [label, n] : mixed.regions) sum += n;
    CHECK(sum == mixed.union_size);
    CHECK_FALSE(mixed.to_json_string().empty());
}

TEST_CASE("vocab_overlap regions sum to union on random sets") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 20; ++round) {
        std::array<std::vector<std::string>, 4> vocabs;
        for (auto& v : vocabs) {
            const auto n = rng() % 30;
            for (std::size_t i = 0; i < n; ++i)
                v.push_back("tok" + std::to_string(rng() % 40));
        }
        const auto overlap = vocab_overlap(vocabs);
        std::uint64_t sum = 0;
        for (const auto& [label, n] : overlap.regions) sum += n;
        CHECK(sum == overlap.union_size);

        std::set<std::string> expected_union;
        for (const auto& v : vocabs) expected_union.insert(v.begin(), v.end());
        CHECK(overlap.union_size == expected_union.size());
    }
}
