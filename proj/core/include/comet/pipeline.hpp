#pragma once

#include "comet/categorize.hpp"
#include "comet/extract.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace comet {

enum class RecordStatus { kept, dropped };

// Processing trace of one comment through a filtering pipeline.
struct CorpusRecord {
    std::uint64_t id = 0;
    CategorySet categories;
    std::optional<std::string> normalized; // space-joined tokens, kept records only
    RecordStatus status = RecordStatus::kept;
    std::optional<std::string> drop_reason;
    std::optional<std::uint64_t> duplicate_of;
};

struct PipelineConfig {
    enum class Mode { basic, advanced };
    Mode mode = Mode::advanced;
    int min_chars = 10;
    int min_words = 4;
    bool strict_antlr = false;
};

// lowercase -> URL spans deleted -> HTML tags stripped -> every char
// that is not a letter, digit or whitespace becomes a space -> split.
std::vector<std::string> normalize_basic(std::string_view text);

// Sentence fragments of a raw comment: split on '.', '!', '?' and blank
// lines, each fragment normalized; fragments below `min_words` dropped.
std::vector<std::vector<std::string>> split_sentences(std::string_view raw_text,
                                                      int min_words = 4);

// Pure per-unit stage of the filter: category assignment plus
// normalization; parallelizable across units.
struct ClassifiedUnit {
    CategorySet categories;
    std::optional<std::string> drop_category; // first dropping category, stage order
    std::vector<std::string> tokens;          // normalized; empty when dropped early
};

ClassifiedUnit classify_unit(const Classifier& classifier, const PipelineConfig& config,
                             const CommentUnit& unit, const ClassifyContext& ctx);

// Streaming filter over corpus-ordered units. Holds the corpus-global
// dedup index; feed one file's units per batch so the antlr file guard
// sees the whole file.
class FilterRun {
public:
    FilterRun(const Classifier& classifier, PipelineConfig config);

    // sequential stage: length filter and dedup over classified units
    CorpusRecord decide(const CommentUnit& unit, ClassifiedUnit classified);
    CorpusRecord process(const CommentUnit& unit, const ClassifyContext& ctx);
    std::vector<CorpusRecord> process_file(const std::vector<CommentUnit>& file_units);

    const PipelineConfig& config() const { return config_; }
    const Classifier& classifier() const { return classifier_; }

private:
    const Classifier& classifier_;
    PipelineConfig config_;
    std::unordered_map<std::string, std::uint64_t> first_seen_;
};

// Whole-corpus convenience wrappers (units grouped by file internally).
std::vector<CorpusRecord> run_pipeline(const Classifier& classifier, PipelineConfig config,
                                       const std::vector<CommentUnit>& units);
std::vector<CorpusRecord> run_basic(const Classifier& classifier,
                                    const std::vector<CommentUnit>& units);
std::vector<CorpusRecord> run_advanced(const Classifier& classifier,
                                       const std::vector<CommentUnit>& units);

// Exact-match dedup on normalized text; stable and idempotent.
std::vector<CorpusRecord> dedup(std::vector<CorpusRecord> records);

// Normalized sentences of all kept records, in corpus order.
std::vector<std::vector<std::string>> kept_sentences(const std::vector<CommentUnit>& units,
                                                     const std::vector<CorpusRecord>& records,
                                                     int min_words = 4);

} // namespace comet
