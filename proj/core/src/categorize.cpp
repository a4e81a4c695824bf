#include "comet/categorize.hpp"

#include "comet/langid.hpp"
#include "comet/textutil.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace comet {

namespace {

struct CategoryName {
    Category category;
    std::string_view name;
};

constexpr std::array<CategoryName, k_category_count> k_names{{
    {Category::copyright, "copyright"},
    {Category::code_callsite, "code_callsite"},
    {Category::code_assignment, "code_assignment"},
    {Category::hash_value, "hash_value"},
    {Category::latex, "latex"},
    {Category::sage_math, "sage_math"},
    {Category::html, "html"},
    {Category::antlr, "antlr"},
    {Category::non_english, "non_english"},
    {Category::non_linguistic, "non_linguistic"},
    {Category::encoding_directive, "encoding_directive"},
    {Category::short_comment, "short"},
    {Category::duplicate, "duplicate"},
}};

} // namespace

CategoryGroup group_of(Category c) {
    switch (c) {
        case Category::copyright: return CategoryGroup::copyright;
        case Category::code_callsite:
        case Category::code_assignment:
        case Category::hash_value:
        case Category::latex:
        case Category::sage_math:
        case Category::html:
        case Category::antlr: return CategoryGroup::code_math;
        case Category::non_english: return CategoryGroup::non_english;
        case Category::non_linguistic: return CategoryGroup::non_linguistic;
        case Category::duplicate: return CategoryGroup::duplicates;
        case Category::encoding_directive:
        case Category::short_comment: return CategoryGroup::other;
    }
    return CategoryGroup::other;
}

std::string_view to_string(Category c) {
    for (const auto& n : k_names)
        if (n.category == c) return n.name;
    return "?";
}

std::string_view to_string(CategoryGroup g) {
    switch (g) {
        case CategoryGroup::copyright: return "copyright";
        case CategoryGroup::code_math: return "code_math";
        case CategoryGroup::non_english: return "non_english";
        case CategoryGroup::non_linguistic: return "non_linguistic";
        case CategoryGroup::other: return "other";
        case CategoryGroup::duplicates: return "duplicates";
    }
    return "?";
}

Category category_from_string(std::string_view name) {
    for (const auto& n : k_names)
        if (n.name == name) return n.category;
    throw std::invalid_argument("unknown category: " + std::string(name));
}

std::vector<Category> CategorySet::values() const {
    std::vector<Category> out;
    for (const auto& n : k_names)
        if (contains(n.category)) out.push_back(n.category);
    return out;
}

const std::vector<Category>& drop_stage_order() {
    static const std::vector<Category> order{
        Category::copyright,       Category::encoding_directive,
        Category::non_linguistic,  Category::code_callsite,
        Category::code_assignment, Category::hash_value,
        Category::latex,           Category::sage_math,
        Category::html,            Category::antlr,
        Category::non_english,     Category::short_comment,
        Category::duplicate,
    };
    return order;
}

namespace patterns {

constexpr std::string_view copyright = "copyright";
constexpr std::string_view callsite = R"([\w\d]+\s*(={1,2}|\.?)\s*[\w\d_]+\.?[\w\d_]+\(.*\))";
constexpr std::string_view assignment = R"([\w\d]+\s*={1,2}\s*[\d]+)";
constexpr std::string_view hash = R"([a-f0-9]{32,64})";
constexpr std::string_view latex =
    R"((\\begin\{\w+\})|(\{?\\(alpha|beta|gamma|omega|lambda)\}?)|(\\\\?mathbf\{[\w]{0,5}\}))";
constexpr std::string_view sagemath =
    R"(sage:\s*([\w\d]+\s*(={1,2}|\.?)\s*[\w\d_]+\.?[\w\d_]+\(.*\))?)";
constexpr std::string_view html = R"(<[^>]*>)";
constexpr std::string_view antlr = R"(\$ANTLR|type:)";
constexpr std::string_view encoding_emacs = R"(-\*-\s*coding[:=]\s*[-\w.]+\s*-\*-)";
constexpr std::string_view encoding_vim = R"((vim:|emacs:)?\s*(set\s+)?(file)?encoding[:=]\s*[-\w.]+)";

} // namespace patterns

RuleTable RuleTable::builtin() {
    RuleTable t;
    t.version_ = "table1-v1";
    int stage = 0;
    auto add = [&](Category c, std::string_view p) {
        t.rules_.push_back(FilterRule{c, std::string(p), stage++});
    };
    add(Category::copyright, patterns::copyright);
    add(Category::encoding_directive, patterns::encoding_emacs);
    add(Category::encoding_directive, patterns::encoding_vim);
    add(Category::code_callsite, patterns::callsite);
    add(Category::code_assignment, patterns::assignment);
    add(Category::hash_value, patterns::hash);
    add(Category::latex, patterns::latex);
    add(Category::sage_math, patterns::sagemath);
    add(Category::html, patterns::html);
    add(Category::antlr, patterns::antlr);
    return t;
}

RuleTable RuleTable::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open rule table: " + file.generic_string());
    RuleTable t;
    t.version_ = file.filename().generic_string();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string stage_s, cat_s, pattern;
        if (!std::getline(ss, stage_s, '\t') || !std::getline(ss, cat_s, '\t') ||
            !std::getline(ss, pattern))
            throw std::runtime_error(file.generic_string() + ":" + std::to_string(lineno) +
                                     ": expected stage<TAB>category<TAB>pattern");
        FilterRule rule;
        rule.stage = std::stoi(stage_s);
        rule.category = category_from_string(cat_s);
        rule.pattern = pattern;
        t.rules_.push_back(std::move(rule));
    }
    if (t.rules_.empty())
        throw std::runtime_error("empty rule table: " + file.generic_string());
    return t;
}

std::string strip_html(std::string_view text) {
    static const std::regex tag(std::string(patterns::html), std::regex::optimize);
    std::string out;
    out.reserve(text.size());
    const char* begin = text.data();
    const char* end = begin + text.size();
    std::cregex_iterator it(begin, end, tag), last;
    const char* copied = begin;
    for (; it != last; ++it) {
        out.append(copied, begin + it->position(0));
        copied = begin + it->position(0) + it->length(0);
    }
    out.append(copied, end);
    return out;
}

bool match_copyright(std::string_view text) {
    static constexpr std::string_view needle = "copyright";
    if (text.size() < needle.size()) return false;
    for (std::size_t i = 0; i + needle.size() <= text.size(); ++i) {
        std::size_t k = 0;
        while (k < needle.size() &&
               std::tolower(static_cast<unsigned char>(text[i + k])) == needle[k])
            ++k;
        if (k == needle.size()) return true;
    }
    return false;
}

bool match_encoding_directive(std::string_view text) {
    static const std::regex emacs(std::string(patterns::encoding_emacs),
                                  std::regex::icase | std::regex::optimize);
    static const std::regex vim(std::string(patterns::encoding_vim),
                                std::regex::icase | std::regex::optimize);
    return std::regex_search(text.begin(), text.end(), emacs) ||
           std::regex_search(text.begin(), text.end(), vim);
}

namespace {

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_case_insensitive(Category c) {
    return c == Category::copyright || c == Category::encoding_directive ||
           c == Category::antlr;
}

} // namespace

struct Classifier::Impl {
    RuleTable table;
    const LangClassifier* lang = nullptr;

    struct Compiled {
        Category category;
        std::regex re;
    };
    std::vector<Compiled> compiled;
    std::regex antlr_marker{R"(\$ANTLR)", std::regex::icase | std::regex::optimize};

    explicit Impl(RuleTable t) : table(std::move(t)) {
        for (const auto& rule : table.rules()) {
            auto flags = std::regex::optimize;
            if (is_case_insensitive(rule.category)) flags |= std::regex::icase;
            compiled.push_back(Compiled{rule.category, std::regex(rule.pattern, flags)});
        }
    }

    // The hash rule only fires on runs whose neighbors are not word
    // characters, so 32-64 char windows inside longer hex blobs or
    // identifiers do not count.
    bool hash_boundaries_ok(std::string_view text, std::size_t pos, std::size_t len) const {
        if (pos > 0 && is_word_char(text[pos - 1])) return false;
        const std::size_t after = pos + len;
        if (after < text.size() && is_word_char(text[after])) return false;
        return true;
    }

    template <typename OnMatch>
    void for_each_match(const Compiled& c, std::string_view text, OnMatch&& on_match) const {
        const char* begin = text.data();
        const char* end = begin + text.size();
        for (std::cregex_iterator it(begin, end, c.re), last; it != last; ++it) {
            const auto pos = static_cast<std::size_t>(it->position(0));
            const auto len = static_cast<std::size_t>(it->length(0));
            if (c.category == Category::hash_value && !hash_boundaries_ok(text, pos, len))
                continue;
            if (!on_match(pos, len)) return;
            if (len == 0) return; // defensive: never loop on empty matches
        }
    }

    bool rule_matches(const Compiled& c, std::string_view text,
                      const ClassifyContext& ctx) const {
        bool found = false;
        if (c.category == Category::antlr && !ctx.strict_antlr &&
            !ctx.file_has_antlr_marker) {
            // only the $ANTLR alternative counts without file context
            const char* begin = text.data();
            return std::regex_search(begin, begin + text.size(), antlr_marker);
        }
        for_each_match(c, text, [&](std::size_t, std::size_t) {
            found = true;
            return false;
        });
        return found;
    }
};

Classifier::Classifier(RuleTable table, const LangClassifier* lang, ClassifierConfig config)
    : impl_(std::make_unique<Impl>(std::move(table))), config_(config) {
    impl_->lang = lang;
}

Classifier::~Classifier() = default;
Classifier::Classifier(Classifier&&) noexcept = default;
Classifier& Classifier::operator=(Classifier&&) noexcept = default;

const RuleTable& Classifier::table() const { return impl_->table; }
const LangClassifier* Classifier::lang() const { return impl_->lang; }

CategorySet Classifier::match_code(std::string_view text, const ClassifyContext& ctx) const {
    CategorySet out;
    for (const auto& c : impl_->compiled) {
        if (group_of(c.category) != CategoryGroup::code_math) continue;
        if (out.contains(c.category)) continue;
        if (impl_->rule_matches(c, text, ctx)) out.insert(c.category);
    }
    return out;
}

bool Classifier::match_non_linguistic(std::string_view text) const {
    std::size_t total = 0, letters = 0;
    char32_t first_cp = 0;
    bool single_char = true;
    std::size_t i = 0;
    while (i < text.size()) {
        const char32_t cp = next_codepoint(text, i);
        if (cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v')
            continue;
        ++total;
        if (is_letter(cp)) ++letters;
        if (total == 1)
            first_cp = cp;
        else if (cp != first_cp)
            single_char = false;
    }
    if (total == 0) return true;
    if (single_char && total >= 4) return true;
    return static_cast<double>(letters) <
           config_.non_linguistic_letter_fraction * static_cast<double>(total);
}

bool Classifier::is_short(std::string_view text) const {
    if (codepoint_count(text) < static_cast<std::size_t>(config_.short_min_chars)) return true;
    return split_whitespace(text).size() < static_cast<std::size_t>(config_.short_min_words);
}

std::string Classifier::remove_code_spans(std::string_view text) const {
    std::vector<char> remove(text.size(), 0);
    bool any = false;
    for (const auto& c : impl_->compiled) {
        if (group_of(c.category) != CategoryGroup::code_math) continue;
        if (c.category == Category::antlr) continue; // handled below: only $ANTLR spans
        impl_->for_each_match(c, text, [&](std::size_t pos, std::size_t len) {
            std::fill(remove.begin() + static_cast<long>(pos),
                      remove.begin() + static_cast<long>(pos + len), 1);
            any = true;
            return true;
        });
    }
    {
        const char* begin = text.data();
        const char* end = begin + text.size();
        for (std::cregex_iterator it(begin, end, impl_->antlr_marker), last; it != last; ++it) {
            const auto pos = static_cast<std::size_t>(it->position(0));
            const auto len = static_cast<std::size_t>(it->length(0));
            std::fill(remove.begin() + static_cast<long>(pos),
                      remove.begin() + static_cast<long>(pos + len), 1);
            any = true;
        }
    }
    if (!any) return std::string(text);
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (remove[i]) {
            if (out.empty() || out.back() != ' ') out.push_back(' ');
        } else {
            out.push_back(text[i]);
        }
    }
    return out;
}

bool Classifier::is_english(std::string_view raw_text) const {
    if (!impl_->lang) return true;
    const std::string cleaned = remove_code_spans(raw_text);
    return impl_->lang->is_english_tokens(split_whitespace(cleaned));
}

bool Classifier::has_antlr_marker(std::string_view text) const {
    const char* begin = text.data();
    return std::regex_search(begin, begin + text.size(), impl_->antlr_marker);
}

CategorySet Classifier::classify(std::string_view raw_text, const ClassifyContext& ctx) const {
    CategorySet out = match_code(raw_text, ctx);
    for (const auto& c : impl_->compiled) {
        if (group_of(c.category) == CategoryGroup::code_math) continue;
        if (out.contains(c.category)) continue;
        if (impl_->rule_matches(c, raw_text, ctx)) out.insert(c.category);
    }
    if (match_non_linguistic(raw_text)) out.insert(Category::non_linguistic);
    if (is_short(raw_text)) out.insert(Category::short_comment);
    if (impl_->lang && !is_english(raw_text)) out.insert(Category::non_english);
    return out;
}

} // namespace comet
