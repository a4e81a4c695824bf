#include "comet/langid.hpp"

#include "comet/textutil.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace comet {

std::uint64_t LangProfile::pack(char32_t a, char32_t b, char32_t c) {
    return (static_cast<std::uint64_t>(a) << 42) | (static_cast<std::uint64_t>(b) << 21) |
           static_cast<std::uint64_t>(c);
}

namespace {

// Trigram counts over " t1 t2 t3 t4 ", lowercased.
std::unordered_map<std::uint64_t, int> window_trigrams(std::span<const std::string> window) {
    std::string joined = " ";
    for (const auto& tok : window) {
        joined += to_lower(tok);
        joined += ' ';
    }
    const auto cps = to_codepoints(joined);
    std::unordered_map<std::uint64_t, int> counts;
    for (std::size_t i = 0; i + 2 < cps.size(); ++i)
        ++counts[LangProfile::pack(cps[i], cps[i + 1], cps[i + 2])];
    return counts;
}

std::string_view script_language(Script s) {
    switch (s) {
        case Script::cyrillic: return "ru";
        case Script::greek: return "el";
        case Script::arabic: return "ar";
        case Script::hebrew: return "he";
        case Script::cjk: return "zh";
        case Script::kana: return "ja";
        case Script::hangul: return "ko";
        case Script::devanagari: return "hi";
        case Script::thai: return "th";
        default: return "";
    }
}

std::string trim_nonword(std::string_view token) {
    const auto cps = to_codepoints(token);
    std::size_t lo = 0, hi = cps.size();
    while (lo < hi && !is_letter(cps[lo]) && !is_ascii_digit(cps[lo])) ++lo;
    while (hi > lo && !is_letter(cps[hi - 1]) && !is_ascii_digit(cps[hi - 1])) --hi;
    std::string out;
    for (std::size_t i = lo; i < hi; ++i) append_utf8(out, cps[i]);
    return out;
}

} // namespace

LangClassifier::LangClassifier(std::vector<LangProfile> profiles,
                               std::unordered_set<std::string> lexicon, Config config)
    : profiles_(std::move(profiles)), lexicon_(std::move(lexicon)), config_(config) {
    for (auto& p : profiles_) {
        double sq = 0.0;
        for (const auto& [_, f] : p.trigram_freqs) sq += f * f;
        p.norm = std::sqrt(sq);
    }
}

LangClassifier LangClassifier::load(const std::filesystem::path& profiles_json,
                                    const std::filesystem::path& lexicon_file,
                                    Config config) {
    std::ifstream pin(profiles_json);
    if (!pin)
        throw std::runtime_error("cannot open language profiles: " +
                                 profiles_json.generic_string());
    nlohmann::json j = nlohmann::json::parse(pin);
    std::vector<LangProfile> profiles;
    for (const auto& [lang, trigrams] : j.items()) {
        LangProfile p;
        p.language = lang;
        for (const auto& [tri, freq] : trigrams.items()) {
            const auto cps = to_codepoints(tri);
            if (cps.size() != 3)
                throw std::runtime_error("bad trigram key in " +
                                         profiles_json.generic_string() + ": " + tri);
            p.trigram_freqs[LangProfile::pack(cps[0], cps[1], cps[2])] =
                freq.get<double>();
        }
        profiles.push_back(std::move(p));
    }
    if (profiles.empty())
        throw std::runtime_error("no language profiles in " + profiles_json.generic_string());

    std::ifstream lin(lexicon_file);
    if (!lin)
        throw std::runtime_error("cannot open lexicon: " + lexicon_file.generic_string());
    std::unordered_set<std::string> lexicon;
    std::string word;
    while (std::getline(lin, word)) {
        while (!word.empty() && (word.back() == '\r' || word.back() == '\n')) word.pop_back();
        if (!word.empty()) lexicon.insert(word);
    }
    if (lexicon.empty())
        throw std::runtime_error("empty lexicon: " + lexicon_file.generic_string());
    return LangClassifier(std::move(profiles), std::move(lexicon), config);
}

bool LangClassifier::in_lexicon(std::string_view word) const {
    const std::string w = trim_nonword(to_lower(word));
    return !w.empty() && lexicon_.count(w) > 0;
}

std::string LangClassifier::classify_window(std::span<const std::string> window) const {
    if (window.size() != 4)
        throw std::invalid_argument("classify_window requires exactly 4 tokens");

    // Non-Latin scripts decide immediately; kana outranks CJK so mixed
    // Japanese text lands on "ja".
    bool saw[static_cast<int>(Script::other) + 1] = {};
    for (const auto& tok : window) {
        std::size_t i = 0;
        while (i < tok.size()) saw[static_cast<int>(script_of(next_codepoint(tok, i)))] = true;
    }
    for (Script s : {Script::kana, Script::hangul, Script::cjk, Script::cyrillic,
                     Script::greek, Script::arabic, Script::hebrew, Script::devanagari,
                     Script::thai})
        if (saw[static_cast<int>(s)]) return std::string(script_language(s));

    const auto counts = window_trigrams(window);
    double wnorm = 0.0;
    for (const auto& [_, n] : counts) wnorm += static_cast<double>(n) * n;
    wnorm = std::sqrt(wnorm);

    double best = 0.0, second = 0.0;
    const LangProfile* best_profile = nullptr;
    for (const auto& p : profiles_) {
        double dot = 0.0;
        for (const auto& [key, n] : counts) {
            auto it = p.trigram_freqs.find(key);
            if (it != p.trigram_freqs.end()) dot += n * it->second;
        }
        const double denom = wnorm * p.norm;
        const double sim = denom > 0.0 ? dot / denom : 0.0;
        if (sim > best) {
            second = best;
            best = sim;
            best_profile = &p;
        } else if (sim > second) {
            second = sim;
        }
    }

    if (best_profile && best - second >= config_.ambiguity_margin)
        return best_profile->language;

    int hits = 0;
    for (const auto& tok : window)
        if (in_lexicon(tok)) ++hits;
    return hits >= config_.coverage_min_hits ? "en" : "und";
}

bool LangClassifier::is_english_tokens(const std::vector<std::string>& tokens) const {
    if (tokens.empty()) return true;
    if (tokens.size() < 4) {
        int hits = 0;
        for (const auto& tok : tokens)
            if (in_lexicon(tok)) ++hits;
        return static_cast<double>(hits) >=
               config_.short_text_coverage * static_cast<double>(tokens.size());
    }
    for (std::size_t i = 0; i + 4 <= tokens.size(); ++i) {
        if (classify_window(std::span<const std::string>(tokens.data() + i, 4)) != "en")
            return false;
    }
    return true;
}

bool LangClassifier::is_english(std::string_view text) const {
    return is_english_tokens(split_whitespace(text));
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("COMET_DATA_DIR"); env && *env)
        return std::filesystem::path(env);
#ifdef COMET_BUNDLED_DATA_DIR
    return std::filesystem::path(COMET_BUNDLED_DATA_DIR);
#else
    return std::filesystem::current_path() / "data";
#endif
}

} // namespace comet
