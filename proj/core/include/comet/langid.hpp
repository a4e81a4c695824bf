#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace comet {

// Character-trigram frequency profile of one language. Frequencies are
// relative and sum to 1 over the stored trigrams.
struct LangProfile {
    std::string language;
    std::unordered_map<std::uint64_t, double> trigram_freqs; // packed codepoints
    double norm = 0.0;

    static std::uint64_t pack(char32_t a, char32_t b, char32_t c);
};

struct LangIdConfig {
    double ambiguity_margin = 0.05;
    int coverage_min_hits = 2;        // of the 4 window tokens
    double short_text_coverage = 0.5; // texts shorter than one window
};

class LangClassifier {
public:
    using Config = LangIdConfig;

    LangClassifier(std::vector<LangProfile> profiles,
                   std::unordered_set<std::string> lexicon, Config config = {});

    // profiles: JSON object language -> { trigram -> frequency }.
    // lexicon: UTF-8 word list, one lowercase word per line.
    static LangClassifier load(const std::filesystem::path& profiles_json,
                               const std::filesystem::path& lexicon_file,
                               Config config = {});

    // Window of exactly 4 tokens -> ISO 639-1 code or "und". Tokens in a
    // non-Latin script short-circuit to that script's language bucket;
    // otherwise trigram cosine similarity decides, with a lexicon
    // fallback when the top two languages are too close to call.
    std::string classify_window(std::span<const std::string> window) const;

    // All sliding 4-token windows must classify "en"; shorter token
    // sequences fall back to lexicon coverage.
    bool is_english_tokens(const std::vector<std::string>& tokens) const;
    bool is_english(std::string_view text) const;

    bool in_lexicon(std::string_view word) const;
    std::size_t lexicon_size() const { return lexicon_.size(); }
    const Config& config() const { return config_; }

private:
    std::vector<LangProfile> profiles_;
    std::unordered_set<std::string> lexicon_;
    Config config_;
};

// Resolution order: COMET_DATA_DIR environment variable, then the
// directory the build was configured with.
std::filesystem::path default_data_dir();

} // namespace comet
