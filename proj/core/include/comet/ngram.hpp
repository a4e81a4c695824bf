#pragma once

#include "comet/stats.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace comet {

class Classifier;

using Sentence = std::vector<std::string>;

// Order-4 count model: P(w4 | w1 w2 w3) as unsmoothed maximum-likelihood
// conditionals. Contexts are keyed by their space-joined tokens.
class NGramModel {
public:
    static constexpr int order = 4;

    enum class StopReason { no_continuation, below_threshold, max_length };

    struct Completion {
        std::array<std::string, 4> prefix;
        std::vector<std::string> output; // begins with prefix
        StopReason stop_reason = StopReason::no_continuation;
    };

    NGramModel() = default;

    static NGramModel train(const std::vector<Sentence>& sentences,
                            std::size_t vocab_k = 10000);

    double prob(const std::array<std::string, 3>& context, const std::string& word) const;

    // Greedy threshold completion: extend with the most probable next
    // word while its conditional probability stays >= threshold. At
    // thresholds <= 0.5 ties break to the lexicographically smallest
    // word; above 0.5 at most one candidate can qualify.
    Completion complete(const std::array<std::string, 4>& prefix, double threshold = 0.9,
                        std::size_t max_len = 40) const;

    const Vocabulary& vocab() const { return vocab_; }
    std::size_t context_count() const { return contexts_.size(); }
    const std::map<std::string, std::map<std::string, std::uint64_t>>& contexts() const {
        return contexts_;
    }

    std::string to_json_string() const;
    static NGramModel from_json_string(std::string_view text);
    void save(const std::filesystem::path& file) const;
    static NGramModel load(const std::filesystem::path& file);

private:
    std::map<std::string, std::map<std::string, std::uint64_t>> contexts_;
    std::map<std::string, std::uint64_t> totals_;
    Vocabulary vocab_;
};

std::string_view to_string(NGramModel::StopReason r);
NGramModel::StopReason stop_reason_from_string(std::string_view s);

struct HoldoutSplit {
    std::vector<Sentence> train;
    std::vector<Sentence> holdout;
    std::vector<std::array<std::string, 4>> prefixes; // first 4 tokens of each held-out sentence
    bool scaled_down = false; // n exceeded the corpus and was reduced
};

// Seeded uniform sample of n sentences without replacement; sampled
// sentences leave the training set. Sentences shorter than 4 tokens are
// not eligible prefixes and stay in training.
HoldoutSplit holdout_split(const std::vector<Sentence>& sentences, std::size_t n,
                           std::uint64_t seed);

struct GenAnalysis {
    std::size_t total = 0;
    std::size_t length4 = 0;
    std::size_t length4_bleu1 = 0;
    double average_length = 0.0;
    std::size_t code_artifacts = 0;
    std::size_t code_artifacts_bleu1 = 0;
    std::size_t non_english = 0;
    std::size_t non_english_bleu1 = 0;
    std::string to_json_string() const;
};

bool has_code_artifact(const std::vector<std::string>& tokens);

// Table of generation-quality counters: length-4 outputs, mean length,
// code-artifact and non-English outputs, each with its share of exact
// BLEU-1.0 matches against the paired reference.
GenAnalysis analyze_generations(const std::vector<NGramModel::Completion>& results,
                                const std::vector<Sentence>& references,
                                const Classifier& classifier);

} // namespace comet
