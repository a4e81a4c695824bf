#include "comet/categorize.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

using namespace comet;

namespace {

bool hits(Category c, const std::string& text) {
    return comet::test::pattern_classifier().match_code(text).contains(c);
}

} // namespace

TEST_CASE("copyright: case-insensitive substring") {
    CHECK(match_copyright("Copyright 2019 Example Corp"));
    CHECK(match_copyright("(c) COPYRIGHT holders"));
    CHECK(match_copyright("copyright"));
    CHECK(match_copyright("see CoPyRiGhT notice"));
    CHECK_FALSE(match_copyright("this function copies data"));
    CHECK_FALSE(match_copyright("right to copy"));
    CHECK_FALSE(match_copyright(""));
}

TEST_CASE("call site pattern") {
    CHECK(hits(Category::code_callsite, "use self.connect(host) before send"));
    CHECK(hits(Category::code_callsite, "parser.add_argument('--foo')"));
    CHECK(hits(Category::code_callsite, "x = obj.method(1, 2)"));
    CHECK_FALSE(hits(Category::code_callsite, "returns the mean of the list"));
    CHECK_FALSE(hits(Category::code_callsite, "call the function later"));
    CHECK_FALSE(hits(Category::code_callsite, "plain words only here"));
}

TEST_CASE("assignment pattern") {
    CHECK(hits(Category::code_assignment, "default is x = 5"));
    CHECK(hits(Category::code_assignment, "timeout==30 means forever"));
    CHECK(hits(Category::code_assignment, "n=1000"));
    CHECK_FALSE(hits(Category::code_assignment, "x equals five"));
    CHECK_FALSE(hits(Category::code_assignment, "a = b"));
    CHECK_FALSE(hits(Category::code_assignment, "nothing here"));
}

TEST_CASE("hash pattern: lowercase hex runs with clean boundaries") {
    CHECK(hits(Category::hash_value, "0123456789abcdef0123456789abcdef"));
    CHECK(hits(Category::hash_value,
               "commit 3b1f50a9c4e2d6b8a0f1e2d3c4b5a69788f0e1d2 fixed it"));
    CHECK(hits(Category::hash_value,
               std::string(64, 'a'))); // 64-char run
    CHECK_FALSE(hits(Category::hash_value, "0123456789ABCDEF0123456789ABCDEF")); // uppercase
    CHECK_FALSE(hits(Category::hash_value, "deadbeef"));                          // too short
    CHECK_FALSE(hits(Category::hash_value, std::string(65, 'a')));               // too long
    CHECK_FALSE(hits(Category::hash_value,
                     "x0123456789abcdef0123456789abcdef")); // embedded in identifier
}

TEST_CASE("latex pattern") {
    CHECK(hits(Category::latex, "\\begin{align} x \\end{align}"));
    CHECK(hits(Category::latex, "the symbol \\alpha denotes rate"));
    CHECK(hits(Category::latex, "uses {\\lambda} calculus"));
    CHECK(hits(Category::latex, "\\mathbf{A} is the matrix"));
    CHECK_FALSE(hits(Category::latex, "begin the alignment now"));
    CHECK_FALSE(hits(Category::latex, "alpha beta gamma words"));
    CHECK_FALSE(hits(Category::latex, "plain text"));
}

TEST_CASE("sagemath pattern, including the bare prompt") {
    CHECK(hits(Category::sage_math, "sage: M = Manifold(2, 'M')"));
    CHECK(hits(Category::sage_math, "sage: F.display()"));
    CHECK(hits(Category::sage_math, "sage:"));
    CHECK_FALSE(hits(Category::sage_math, "the sage advised patience"));
    CHECK_FALSE(hits(Category::sage_math, "sagebrush grows here"));
    CHECK_FALSE(hits(Category::sage_math, "no prompt at all"));
}

TEST_CASE("html pattern and stripping") {
    CHECK(hits(Category::html, "<b>bold</b> word"));
    CHECK(hits(Category::html, "line with <br/> break"));
    CHECK(hits(Category::html, "a < b and b > c")); // known coarseness
    CHECK_FALSE(hits(Category::html, "a < b only"));
    CHECK_FALSE(hits(Category::html, "2 > 1"));
    CHECK_FALSE(hits(Category::html, "no markup"));

    CHECK(strip_html("<b>bold</b> word") == "bold word");
    CHECK(strip_html("a < b and b > c") == "a  c");
    CHECK(strip_html("no tags here") == "no tags here");
    CHECK(strip_html("<unclosed") == "<unclosed");
}

TEST_CASE("strip_html is idempotent") {
    const std::string cases[] = {"<b>bold</b> word", "a < b and b > c", "plain",
                                 "<<x>>", "a<b>c<d>e"};
    for (const auto& t : cases) {
        const auto once = strip_html(t);
        CHECK(strip_html(once) == once);
    }
}

TEST_CASE("antlr pattern with file guard") {
    const auto& cls = comet::test::pattern_classifier();
    // $ANTLR fires on its own
    CHECK(cls.match_code("$ANTLR 3.5.2 Grammar.g").contains(Category::antlr));
    // bare 'type:' is guarded by the file marker
    CHECK_FALSE(cls.match_code("type: string").contains(Category::antlr));
    ClassifyContext with_marker;
    with_marker.file_has_antlr_marker = true;
    CHECK(cls.match_code("type: string", with_marker).contains(Category::antlr));
    ClassifyContext strict;
    strict.strict_antlr = true;
    CHECK(cls.match_code("type: string", strict).contains(Category::antlr));
    CHECK_FALSE(cls.match_code("the type of the return value", strict)
                    .contains(Category::antlr));
    CHECK(cls.has_antlr_marker("// $ANTLR generated"));
    CHECK_FALSE(cls.has_antlr_marker("plain text"));
}

TEST_CASE("encoding directive") {
    CHECK(match_encoding_directive("-*- coding: utf-8 -*-"));
    CHECK(match_encoding_directive("vim: fileencoding=utf-8"));
    CHECK(match_encoding_directive("-*- coding: latin-1 -*-"));
    CHECK(match_encoding_directive("encoding: ascii"));
    CHECK_FALSE(match_encoding_directive("coding style is described below"));
    CHECK_FALSE(match_encoding_directive("utf-8 is the default"));
    CHECK_FALSE(match_encoding_directive("set the mood"));
}

TEST_CASE("non-linguistic rule") {
    const auto& cls = comet::test::pattern_classifier();
    CHECK(cls.match_non_linguistic("----------------------"));
    CHECK(cls.match_non_linguistic("= = = ="));          // single char repeated
    CHECK(cls.match_non_linguistic("*** ** ***"));        // punctuation only
    CHECK(cls.match_non_linguistic("   "));
    CHECK_FALSE(cls.match_non_linguistic("=== Section: Parsing ===")); // 14/21 letters
    CHECK_FALSE(cls.match_non_linguistic("normal sentence here."));
    CHECK_FALSE(cls.match_non_linguistic("x := y + z ok fine then")); // mixed
}

TEST_CASE("short rule thresholds") {
    const auto& cls = comet::test::pattern_classifier();
    CHECK(cls.is_short("fix this"));            // 8 chars
    CHECK(cls.is_short("one two three"));       // 3 words
    CHECK_FALSE(cls.is_short("four full words here")); // 20 chars, 4 words
    CHECK(cls.is_short(""));
}

TEST_CASE("classify returns non-exclusive unions") {
    const auto& cls = comet::test::classifier();
    const auto cats =
        cls.classify("Copyright (c) 2001-2020 Python Software Foundation; x = 5");
    CHECK(cats.contains(Category::copyright));
    CHECK(cats.contains(Category::code_assignment));
    CHECK_FALSE(cats.contains(Category::code_callsite));
    CHECK_FALSE(cats.contains(Category::short_comment));
    CHECK_FALSE(cats.contains(Category::non_english));
    CHECK_FALSE(cats.contains(Category::duplicate)); // never assigned here
}

TEST_CASE("classify: short english comment") {
    const auto cats = comet::test::classifier().classify("fix this");
    CHECK(cats.contains(Category::short_comment));
    CHECK_FALSE(cats.contains(Category::non_english));
    CHECK_FALSE(cats.contains(Category::copyright));
}

TEST_CASE("named object references are not filtered") {
    const auto cats = comet::test::pattern_classifier().match_code(
        "Return the photo's :class:`~plexapi.photo.Photoalbum`");
    CHECK(cats.empty());
}

TEST_CASE("classify is deterministic") {
    const auto& cls = comet::test::classifier();
    const std::string text = "returns the <b>first</b> row; x = 5 \\alpha";
    CHECK(cls.classify(text) == cls.classify(text));
}

TEST_CASE("rule table loads from tsv") {
    test::TempDir dir;
    const auto path = dir.write("rules.tsv",
                                "# comment line\n"
                                "0\tcopyright\tcopyright\n"
                                "1\thtml\t<[^>]*>\n");
    const auto table = RuleTable::load(path);
    CHECK(table.rules().size() == 2);
    CHECK(table.rules()[1].category == Category::html);
    CHECK(table.version() == "rules.tsv");

    Classifier custom(table);
    CHECK(custom.match_code("see <b>this</b>").contains(Category::html));
    CHECK_FALSE(custom.match_code("x = 5").contains(Category::code_assignment));
}

TEST_CASE("bundled rule table matches the builtin") {
    const auto bundled = RuleTable::load(
        std::filesystem::path(COMET_CORE_DATA_DIR) / "rules_table1.tsv");
    const auto builtin = RuleTable::builtin();
    REQUIRE(bundled.rules().size() == builtin.rules().size());
    for (std::size_t i = 0; i < bundled.rules().size(); ++i) {
        CHECK(bundled.rules()[i].category == builtin.rules()[i].category);
        CHECK(bundled.rules()[i].pattern == builtin.rules()[i].pattern);
    }
}

TEST_CASE("category groups") {
    CHECK(group_of(Category::copyright) == CategoryGroup::copyright);
    CHECK(group_of(Category::code_callsite) == CategoryGroup::code_math);
    CHECK(group_of(Category::hash_value) == CategoryGroup::code_math);
    CHECK(group_of(Category::html) == CategoryGroup::code_math);
    CHECK(group_of(Category::non_english) == CategoryGroup::non_english);
    CHECK(group_of(Category::encoding_directive) == CategoryGroup::other);
    CHECK(group_of(Category::short_comment) == CategoryGroup::other);
    CHECK(group_of(Category::duplicate) == CategoryGroup::duplicates);
    CHECK(category_from_string("latex") == Category::latex);
    CHECK(to_string(Category::sage_math) == "sage_math");
    CHECK_THROWS_AS(category_from_string("nope"), std::invalid_argument);
}

TEST_CASE("remove_code_spans keeps prose") {
    const auto& cls = comet::test::pattern_classifier();
    const auto cleaned = cls.remove_code_spans("prefix x = 5 suffix words");
    CHECK(cleaned.find("prefix") != std::string::npos);
    CHECK(cleaned.find("suffix words") != std::string::npos);
    CHECK(cleaned.find("x = 5") == std::string::npos);
    CHECK(cls.remove_code_spans("nothing to remove") == "nothing to remove");
}
