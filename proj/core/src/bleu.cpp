#include "comet/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace comet {

namespace {

// n-grams keyed by joining tokens with a separator that cannot occur
// inside a token
std::unordered_map<std::string, std::uint64_t> ngram_counts(
    const std::vector<std::string>& tokens, int n) {
    std::unordered_map<std::string, std::uint64_t> counts;
    if (tokens.size() < static_cast<std::size_t>(n)) return counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        std::string key;
        for (int k = 0; k < n; ++k) {
            if (k) key.push_back('\x1f');
            key += tokens[i + k];
        }
        ++counts[key];
    }
    return counts;
}

} // namespace

double sentence_bleu(const std::vector<std::string>& candidate,
                     const std::vector<std::string>& reference, int max_n) {
    if (candidate.empty() || reference.empty())
        throw std::invalid_argument("sentence_bleu requires nonempty sequences");
    if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");

    double log_sum = 0.0;
    for (int n = 1; n <= max_n; ++n) {
        const auto cand = ngram_counts(candidate, n);
        if (cand.empty()) return 0.0; // candidate shorter than n
        const auto ref = ngram_counts(reference, n);
        std::uint64_t clipped = 0, total = 0;
        for (const auto& [gram, count] : cand) {
            total += count;
            const auto it = ref.find(gram);
            if (it != ref.end()) clipped += std::min(count, it->second);
        }
        if (clipped == 0) return 0.0;
        log_sum += std::log(static_cast<double>(clipped) / static_cast<double>(total));
    }
    const double c = static_cast<double>(candidate.size());
    const double r = static_cast<double>(reference.size());
    const double bp = c > r ? 1.0 : std::exp(1.0 - r / c);
    return bp * std::exp(log_sum / max_n);
}

BleuReport score_distribution(
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& pairs) {
    BleuReport report;
    report.scores.reserve(pairs.size());
    double sum = 0.0;
    for (const auto& [candidate, reference] : pairs) {
        const double s = sentence_bleu(candidate, reference);
        report.scores.push_back(s);
        sum += s;
        const auto bucket = std::min<std::size_t>(19, static_cast<std::size_t>(s / 0.05));
        ++report.buckets[bucket];
        if (s == 0.0) ++report.zeros;
        if (s == 1.0) ++report.ones;
    }
    report.mean = pairs.empty() ? 0.0 : sum / static_cast<double>(pairs.size());
    return report;
}

std::string BleuReport::to_csv() const {
    std::string out = "bucket_low,bucket_high,count\n";
    for (std::size_t b = 0; b < buckets.size(); ++b) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f,%.2f,%llu\n", 0.05 * static_cast<double>(b),
                      0.05 * static_cast<double>(b + 1),
                      static_cast<unsigned long long>(buckets[b]));
        out += buf;
    }
    return out;
}

std::string BleuReport::to_json_string() const {
    nlohmann::ordered_json j;
    j["pairs"] = scores.size();
    j["mean"] = mean;
    j["zeros"] = zeros;
    j["ones"] = ones;
    nlohmann::ordered_json buckets_json = nlohmann::ordered_json::array();
    for (std::size_t b = 0; b < buckets.size(); ++b)
        buckets_json.push_back(nlohmann::ordered_json{
            {"low", 0.05 * static_cast<double>(b)},
            {"high", 0.05 * static_cast<double>(b + 1)},
            {"count", buckets[b]}});
    j["buckets"] = std::move(buckets_json);
    return j.dump(2);
}

} // namespace comet
