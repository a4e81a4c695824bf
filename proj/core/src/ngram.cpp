#include "comet/ngram.hpp"

#include "comet/bleu.hpp"
#include "comet/categorize.hpp"
#include "comet/textutil.hpp"

#include <fstream>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace comet {

namespace {

std::string context_key(const std::string& a, const std::string& b, const std::string& c) {
    std::string key;
    key.reserve(a.size() + b.size() + c.size() + 2);
    key += a;
    key += ' ';
    key += b;
    key += ' ';
    key += c;
    return key;
}

} // namespace

NGramModel NGramModel::train(const std::vector<Sentence>& sentences, std::size_t vocab_k) {
    NGramModel m;
    for (const auto& s : sentences) {
        if (s.size() < 4) continue;
        for (std::size_t i = 0; i + 4 <= s.size(); ++i) {
            std::string key = context_key(s[i], s[i + 1], s[i + 2]);
            ++m.contexts_[key][s[i + 3]];
            ++m.totals_[std::move(key)];
        }
    }
    m.vocab_ = build_vocab(sentences, vocab_k);
    return m;
}

double NGramModel::prob(const std::array<std::string, 3>& context,
                        const std::string& word) const {
    const std::string key = context_key(context[0], context[1], context[2]);
    const auto ctx_it = contexts_.find(key);
    if (ctx_it == contexts_.end()) return 0.0;
    const auto word_it = ctx_it->second.find(word);
    if (word_it == ctx_it->second.end()) return 0.0;
    return static_cast<double>(word_it->second) /
           static_cast<double>(totals_.at(key));
}

NGramModel::Completion NGramModel::complete(const std::array<std::string, 4>& prefix,
                                            double threshold, std::size_t max_len) const {
    Completion result;
    result.prefix = prefix;
    result.output.assign(prefix.begin(), prefix.end());

    while (true) {
        if (result.output.size() >= max_len) {
            result.stop_reason = StopReason::max_length;
            return result;
        }
        const std::size_t n = result.output.size();
        const std::string key =
            context_key(result.output[n - 3], result.output[n - 2], result.output[n - 1]);
        const auto ctx_it = contexts_.find(key);
        if (ctx_it == contexts_.end() || ctx_it->second.empty()) {
            result.stop_reason = StopReason::no_continuation;
            return result;
        }
        // sorted inner map: the strict > keeps the lexicographically
        // smallest word among equal counts
        const std::map<std::string, std::uint64_t>& nexts = ctx_it->second;
        const std::string* best_word = nullptr;
        std::uint64_t best_count = 0;
        for (const auto& [word, count] : nexts) {
            if (count > best_count) {
                best_count = count;
                best_word = &word;
            }
        }
        const double p = static_cast<double>(best_count) /
                         static_cast<double>(totals_.at(key));
        if (p < threshold) {
            result.stop_reason = StopReason::below_threshold;
            return result;
        }
        result.output.push_back(*best_word);
    }
}

std::string NGramModel::to_json_string() const {
    nlohmann::ordered_json j;
    j["magic"] = "comet-ngram";
    j["version"] = 1;
    j["order"] = order;
    nlohmann::ordered_json vocab;
    vocab["k"] = vocab_.k;
    vocab["tokens"] = vocab_.tokens;
    nlohmann::ordered_json freq = nlohmann::ordered_json::object();
    {
        // deterministic key order
        std::map<std::string, std::uint64_t> sorted(vocab_.freq.begin(), vocab_.freq.end());
        for (const auto& [tok, n] : sorted) freq[tok] = n;
    }
    vocab["freq"] = std::move(freq);
    j["vocab"] = std::move(vocab);
    nlohmann::ordered_json contexts = nlohmann::ordered_json::object();
    for (const auto& [key, nexts] : contexts_) {
        nlohmann::ordered_json inner = nlohmann::ordered_json::object();
        for (const auto& [word, count] : nexts) inner[word] = count;
        contexts[key] = std::move(inner);
    }
    j["contexts"] = std::move(contexts);
    return j.dump();
}

NGramModel NGramModel::from_json_string(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("magic") || j["magic"] != "comet-ngram")
        throw std::runtime_error("not a comet-ngram model file");
    if (j.at("version").get<int>() != 1)
        throw std::runtime_error("unsupported model version");
    NGramModel m;
    m.vocab_.k = j.at("vocab").at("k").get<std::size_t>();
    m.vocab_.tokens = j.at("vocab").at("tokens").get<std::vector<std::string>>();
    for (const auto& [tok, n] : j.at("vocab").at("freq").items())
        m.vocab_.freq[tok] = n.get<std::uint64_t>();
    for (const auto& [key, nexts] : j.at("contexts").items()) {
        auto& inner = m.contexts_[key];
        std::uint64_t total = 0;
        for (const auto& [word, count] : nexts.items()) {
            const auto c = count.get<std::uint64_t>();
            inner[word] = c;
            total += c;
        }
        m.totals_[key] = total;
    }
    return m;
}

void NGramModel::save(const std::filesystem::path& file) const {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write model file: " + file.generic_string());
    out << to_json_string() << '\n';
}

NGramModel NGramModel::load(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open model file: " + file.generic_string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_json_string(text);
}

std::string_view to_string(NGramModel::StopReason r) {
    switch (r) {
        case NGramModel::StopReason::no_continuation: return "no_continuation";
        case NGramModel::StopReason::below_threshold: return "below_threshold";
        case NGramModel::StopReason::max_length: return "max_length";
    }
    return "?";
}

NGramModel::StopReason stop_reason_from_string(std::string_view s) {
    if (s == "no_continuation") return NGramModel::StopReason::no_continuation;
    if (s == "below_threshold") return NGramModel::StopReason::below_threshold;
    if (s == "max_length") return NGramModel::StopReason::max_length;
    throw std::invalid_argument("unknown stop reason: " + std::string(s));
}

HoldoutSplit holdout_split(const std::vector<Sentence>& sentences, std::size_t n,
                           std::uint64_t seed) {
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < sentences.size(); ++i)
        if (sentences[i].size() >= 4) eligible.push_back(i);

    HoldoutSplit split;
    if (n >= eligible.size()) {
        n = eligible.empty() ? 0 : eligible.size() - 1;
        split.scaled_down = true;
    }

    // partial Fisher-Yates over the eligible index list
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> dist(i, eligible.size() - 1);
        std::swap(eligible[i], eligible[dist(rng)]);
    }

    std::vector<bool> held(sentences.size(), false);
    for (std::size_t i = 0; i < n; ++i) held[eligible[i]] = true;

    for (std::size_t i = 0; i < sentences.size(); ++i) {
        if (held[i]) {
            const Sentence& s = sentences[i];
            split.holdout.push_back(s);
            split.prefixes.push_back({s[0], s[1], s[2], s[3]});
        } else {
            split.train.push_back(sentences[i]);
        }
    }
    return split;
}

bool has_code_artifact(const std::vector<std::string>& tokens) {
    auto all_digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto all_letters = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = 0;
        while (i < t.size())
            if (!is_letter(next_codepoint(t, i))) return false;
        return true;
    };
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& t = tokens[i];
        if (codepoint_count(t) >= 20) return true;
        std::size_t letters = 0, digits = 0, k = 0;
        while (k < t.size()) {
            const char32_t cp = next_codepoint(t, k);
            if (is_letter(cp)) ++letters;
            else if (is_ascii_digit(cp)) ++digits;
        }
        if (letters > 0 && digits >= 2) return true;
        if (i + 1 < tokens.size() && all_letters(t) && all_digits(tokens[i + 1])) return true;
    }
    return false;
}

GenAnalysis analyze_generations(const std::vector<NGramModel::Completion>& results,
                                const std::vector<Sentence>& references,
                                const Classifier& classifier) {
    if (results.size() != references.size())
        throw std::invalid_argument("one reference sentence per result required");
    GenAnalysis a;
    a.total = results.size();
    std::size_t length_sum = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& out = results[i].output;
        length_sum += out.size();
        const bool bleu1 = !out.empty() && !references[i].empty() &&
                           sentence_bleu(out, references[i]) == 1.0;
        if (out.size() == 4) {
            ++a.length4;
            if (bleu1) ++a.length4_bleu1;
        }
        if (has_code_artifact(out)) {
            ++a.code_artifacts;
            if (bleu1) ++a.code_artifacts_bleu1;
        }
        if (!classifier.is_english(join(out))) {
            ++a.non_english;
            if (bleu1) ++a.non_english_bleu1;
        }
    }
    a.average_length =
        results.empty() ? 0.0 : static_cast<double>(length_sum) / static_cast<double>(results.size());
    return a;
}

std::string GenAnalysis::to_json_string() const {
    auto pct = [](std::size_t part, std::size_t whole) {
        return whole ? nlohmann::ordered_json(100.0 * static_cast<double>(part) /
                                              static_cast<double>(whole))
                     : nlohmann::ordered_json(nullptr);
    };
    nlohmann::ordered_json j;
    j["total"] = total;
    j["length4"] = {{"count", length4}, {"pct_bleu1", pct(length4_bleu1, length4)}};
    j["average_length"] = average_length;
    j["code_artifacts"] = {{"count", code_artifacts},
                           {"pct_bleu1", pct(code_artifacts_bleu1, code_artifacts)}};
    j["non_english"] = {{"count", non_english},
                        {"pct_bleu1", pct(non_english_bleu1, non_english)}};
    return j.dump(2);
}

} // namespace comet
