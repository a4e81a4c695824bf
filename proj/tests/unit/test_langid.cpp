#include "comet/langid.hpp"

#include "comet/textutil.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

using namespace comet;

namespace {

std::string window(const char* a, const char* b, const char* c, const char* d) {
    const std::vector<std::string> w{a, b, c, d};
    return comet::test::lang_classifier().classify_window(w);
}

} // namespace

TEST_CASE("profiles and lexicon load") {
    const auto& lang = comet::test::lang_classifier();
    CHECK(lang.lexicon_size() >= 20000);
    CHECK(lang.in_lexicon("return"));
    CHECK(lang.in_lexicon("The")); // lowercased lookup
    CHECK(lang.in_lexicon("value."));
    CHECK_FALSE(lang.in_lexicon("qzvbbk"));
}

TEST_CASE("classify_window: english") {
    CHECK(window("return", "the", "first", "value") == "en");
    CHECK(window("opens", "the", "file", "handle") == "en");
}

TEST_CASE("classify_window: non-latin scripts short-circuit") {
    CHECK(window("返回第一个值", "x", "y", "z") == "zh");
    CHECK(window("возвращает", "первое", "значение", "списка") == "ru");
    CHECK(window("この", "関数", "は", "値") == "ja");
}

TEST_CASE("classify_window: gibberish is unknown") {
    CHECK(window("xk9", "qzv", "bbqq", "zzx") == "und");
}

TEST_CASE("classify_window requires exactly 4 tokens") {
    const std::vector<std::string> three{"a", "b", "c"};
    CHECK_THROWS_AS(comet::test::lang_classifier().classify_window(three),
                    std::invalid_argument);
}

TEST_CASE("is_english on clear english") {
    const auto& lang = comet::test::lang_classifier();
    CHECK(lang.is_english("returns the number of rows in the table"));
    CHECK(lang.is_english("this helper opens the file and reads the header"));
}

TEST_CASE("is_english rejects french and spanish") {
    const auto& lang = comet::test::lang_classifier();
    CHECK_FALSE(lang.is_english("ceci calcule la somme des valeurs données"));
    CHECK_FALSE(lang.is_english("devuelve el número de filas de la tabla"));
}

TEST_CASE("is_english rejects non-latin scripts outright") {
    const auto& lang = comet::test::lang_classifier();
    CHECK_FALSE(lang.is_english("返回 第一个 值 的 函数"));
    CHECK_FALSE(lang.is_english("возвращает первое значение из списка"));
}

TEST_CASE("short texts use lexicon coverage") {
    const auto& lang = comet::test::lang_classifier();
    CHECK(lang.is_english("ok"));            // in lexicon
    CHECK(lang.is_english("open file"));     // 2/2
    CHECK_FALSE(lang.is_english("qzv bbqq")); // 0/2
    CHECK(lang.is_english(""));              // vacuous
}

TEST_CASE("is_english equals the all-windows conjunction") {
    const auto& lang = comet::test::lang_classifier();
    const std::string texts[] = {
        "returns the number of rows in the table",
        "ceci calcule la somme des valeurs données",
        "reads the buffer fully puis calcule la somme des valeurs",
        "one two three four five",
    };
    for (const auto& text : texts) {
        const auto tokens = split_whitespace(text);
        if (tokens.size() < 4) continue;
        bool all_en = true;
        for (std::size_t i = 0; i + 4 <= tokens.size(); ++i) {
            const std::vector<std::string> w(tokens.begin() + static_cast<long>(i),
                                             tokens.begin() + static_cast<long>(i) + 4);
            if (lang.classify_window(w) != "en") {
                all_en = false;
                break;
            }
        }
        CHECK(lang.is_english(text) == all_en);
    }
}

TEST_CASE("appending a non-english window forces false") {
    const auto& lang = comet::test::lang_classifier();
    const std::string base = "returns the number of rows in the table";
    REQUIRE(lang.is_english(base));
    CHECK_FALSE(lang.is_english(base + " cela dépend des données fournies"));
    CHECK_FALSE(lang.is_english(base + " 返回 第一个 值 的"));
}

TEST_CASE("code spans do not poison language windows") {
    const auto& cls = comet::test::classifier();
    // the call-site span would otherwise form gibberish windows
    CHECK(cls.is_english(
        "use self.connect(host, port, retries) before sending the request data"));
}

TEST_CASE("deterministic across calls") {
    const auto& lang = comet::test::lang_classifier();
    const std::string text = "reads the whole buffer into memory before starting";
    CHECK(lang.is_english(text) == lang.is_english(text));
}
