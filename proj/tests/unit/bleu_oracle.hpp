#pragma once

// Direct-from-formula BLEU reference, independent of the library
// implementation: n-grams as token vectors, precisions multiplied
// before the root is taken.

#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace comet::oracle {

inline double bleu(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference, int max_n = 4) {
    double product = 1.0;
    for (int n = 1; n <= max_n; ++n) {
        std::map<std::vector<std::string>, long> cand_grams, ref_grams;
        for (std::size_t i = 0; i + n <= candidate.size(); ++i)
            ++cand_grams[std::vector<std::string>(candidate.begin() + static_cast<long>(i),
                                                  candidate.begin() + static_cast<long>(i + n))];
        for (std::size_t i = 0; i + n <= reference.size(); ++i)
            ++ref_grams[std::vector<std::string>(reference.begin() + static_cast<long>(i),
                                                 reference.begin() + static_cast<long>(i + n))];
        long clipped = 0, total = 0;
        for (const auto& [gram, count] : cand_grams) {
            total += count;
            const auto it = ref_grams.find(gram);
            if (it != ref_grams.end()) clipped += std::min(count, it->second);
        }
        if (total == 0 || clipped == 0) return 0.0;
        product *= static_cast<double>(clipped) / static_cast<double>(total);
    }
    const double c = static_cast<double>(candidate.size());
    const double r = static_cast<double>(reference.size());
    const double bp = c > r ? 1.0 : std::exp(1.0 - r / c);
    return bp * std::pow(product, 1.0 / max_n);
}

} // namespace comet::oracle
