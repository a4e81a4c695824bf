#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace comet {

class LangClassifier;

enum class Category : std::uint8_t {
    copyright,
    code_callsite,
    code_assignment,
    hash_value,
    latex,
    sage_math,
    html,
    antlr,
    non_english,
    non_linguistic,
    encoding_directive,
    short_comment,
    duplicate,
};
inline constexpr int k_category_count = 13;

enum class CategoryGroup {
    copyright,
    code_math,
    non_english,
    non_linguistic,
    other,
    duplicates,
};

CategoryGroup group_of(Category c);
std::string_view to_string(Category c);
std::string_view to_string(CategoryGroup g);
Category category_from_string(std::string_view name);

// Small value-type set over the fixed category alphabet.
class CategorySet {
public:
    CategorySet() = default;
    void insert(Category c) { bits_ |= bit(c); }
    void erase(Category c) { bits_ &= ~bit(c); }
    bool contains(Category c) const { return bits_ & bit(c); }
    bool empty() const { return bits_ == 0; }
    bool intersects(const CategorySet& o) const { return bits_ & o.bits_; }
    bool operator==(const CategorySet&) const = default;
    std::vector<Category> values() const;

private:
    static std::uint32_t bit(Category c) { return 1u << static_cast<unsigned>(c); }
    std::uint32_t bits_ = 0;
};

struct FilterRule {
    Category category;
    std::string pattern; // regex source as written in the rule table
    int stage;           // drop-reason attribution order
};

// The ordered rule table backing the regex matchers. The built-in table
// carries the stock patterns; a table can also be loaded from a TSV file
// (stage <TAB> category <TAB> pattern) so the filters stay auditable.
class RuleTable {
public:
    static RuleTable builtin();
    static RuleTable load(const std::filesystem::path& file);

    const std::vector<FilterRule>& rules() const { return rules_; }
    const std::string& version() const { return version_; }

private:
    std::vector<FilterRule> rules_;
    std::string version_;
};

struct ClassifyContext {
    // 'type:' alone fires the antlr rule only when the surrounding file
    // carries an $ANTLR marker, unless strict mode is on.
    bool strict_antlr = false;
    bool file_has_antlr_marker = false;
};

struct ClassifierConfig {
    int short_min_chars = 10;
    int short_min_words = 4;
    double non_linguistic_letter_fraction = 0.25;
};

// Removes every maximal '<...>' span.
std::string strip_html(std::string_view text);

bool match_copyright(std::string_view text);
bool match_encoding_directive(std::string_view text);

class Classifier {
public:
    explicit Classifier(RuleTable table, const LangClassifier* lang = nullptr,
                        ClassifierConfig config = {});
    ~Classifier();
    Classifier(Classifier&&) noexcept;
    Classifier& operator=(Classifier&&) noexcept;

    CategorySet match_code(std::string_view text, const ClassifyContext& ctx = {}) const;
    bool match_non_linguistic(std::string_view text) const;
    bool is_short(std::string_view text) const;
    // All categories except duplicate, which only the pipeline assigns.
    CategorySet classify(std::string_view raw_text, const ClassifyContext& ctx = {}) const;

    // Deletes the spans the code/math rules match, so code fragments do
    // not poison language-id windows.
    std::string remove_code_spans(std::string_view text) const;
    bool is_english(std::string_view raw_text) const;

    bool has_antlr_marker(std::string_view text) const;
    const RuleTable& table() const;
    const LangClassifier* lang() const;
    const ClassifierConfig& config() const { return config_; }

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    ClassifierConfig config_;
};

// Stage-ordered drop priority for reason attribution.
const std::vector<Category>& drop_stage_order();

} // namespace comet
