#pragma once

#include "comet/pipeline.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace comet {

// One table cell block: counts with and without duplicates, for all
// comments and for docstrings only.
struct CategoryCell {
    std::uint64_t with_dups_all = 0;
    std::uint64_t with_dups_doc = 0;
    std::uint64_t without_dups_all = 0;
    std::uint64_t without_dups_doc = 0;
};

struct CategoryCounts {
    std::map<std::string, CategoryCell> categories; // fine-grained rows
    std::map<std::string, CategoryCell> groups;     // rollup rows
    CategoryCell total;                             // every comment
    std::string to_json_string() const;
    std::string to_text_table() const;
};

// Streaming accumulator behind category_table; feed units in corpus
// order. Duplicate marking is recomputed here over all units (the
// pipeline only dedups survivors): a unit is a duplicate when an
// earlier unit has the same normalized text, falling back to raw text
// when normalization comes up empty.
class CategoryTableBuilder {
public:
    CategoryTableBuilder();
    void add(const CommentUnit& unit, const CategorySet& categories);
    const CategoryCounts& counts() const { return counts_; }
    CategoryCounts take() { return std::move(counts_); }

private:
    CategoryCounts counts_;
    std::unordered_set<std::string> seen_;
};

// Prevalence table over classified records.
CategoryCounts category_table(const std::vector<CorpusRecord>& records,
                              const std::vector<CommentUnit>& units);

struct FileCommentStats {
    std::string file;
    std::uint64_t loc = 0;
    std::uint64_t comments = 0;
};

struct HistogramRow {
    std::string bucket;
    std::uint64_t files = 0;
    std::uint64_t loc = 0;
    double loc_avg = 0.0; // rounded to 2 decimals
};

// Buckets 0,1,...,10, 11-100, 100-2000 plus an outlier row; a count of
// exactly 100 lands in "100-2000".
std::vector<HistogramRow> comments_per_file_histogram(
    const std::vector<FileCommentStats>& files);
std::string histogram_to_csv(const std::vector<HistogramRow>& rows);
std::string histogram_to_json(const std::vector<HistogramRow>& rows);
std::string histogram_to_text(const std::vector<HistogramRow>& rows);

struct Vocabulary {
    static constexpr std::string_view unk = "<unk>";
    static constexpr std::string_view bos = "<s>";
    static constexpr std::string_view eos = "</s>";

    std::size_t k = 10000;
    std::vector<std::string> tokens; // top-k by frequency, ties lexicographic, then specials
    std::unordered_map<std::string, std::uint64_t> freq;

    bool contains(const std::string& token) const;
};

Vocabulary build_vocab(const std::vector<std::vector<std::string>>& sentences,
                       std::size_t k = 10000);

struct VocabOverlap {
    // region label = subset of "ABCD", e.g. "A", "AB", "ABCD"; all 15
    // nonempty regions are present (zero-filled).
    std::map<std::string, std::uint64_t> regions;
    std::uint64_t union_size = 0;
    std::string to_json_string() const;
};

VocabOverlap vocab_overlap(const std::array<std::vector<std::string>, 4>& vocab_tokens);

} // namespace comet
