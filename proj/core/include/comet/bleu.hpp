#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace comet {

// Cumulative sentence BLEU: geometric mean of modified 1..max_n gram
// precisions with uniform weights, times the brevity penalty. Unsmoothed,
// so any zero precision (including candidates shorter than max_n) gives
// a 0 score. Throws std::invalid_argument on empty input.
double sentence_bleu(const std::vector<std::string>& candidate,
                     const std::vector<std::string>& reference, int max_n = 4);

struct BleuReport {
    std::vector<double> scores;            // one per pair, input order
    std::array<std::uint64_t, 20> buckets{}; // [0,0.05) ... [0.95,1.0]
    std::uint64_t zeros = 0;               // exact 0 scores
    std::uint64_t ones = 0;                // exact 1 scores
    double mean = 0.0;

    std::string to_csv() const; // bucket_low,bucket_high,count
    std::string to_json_string() const;
};

BleuReport score_distribution(
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& pairs);

} // namespace comet
