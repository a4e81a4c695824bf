#include "comet/pipeline.hpp"

#include "comet/textutil.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace comet {

namespace {

bool run_is_url(std::string_view run) {
    if (run.substr(0, 4) == "www.") return true;
    return run.find("://") != std::string_view::npos;
}

std::string delete_url_spans(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            out.push_back(text[i]);
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::string_view run = text.substr(start, i - start);
        if (!run_is_url(run)) out.append(run);
    }
    return out;
}

} // namespace

std::vector<std::string> normalize_basic(std::string_view text) {
    const std::string lowered = to_lower(text);
    const std::string no_urls = delete_url_spans(lowered);
    const std::string no_html = strip_html(no_urls);

    std::string mapped;
    mapped.reserve(no_html.size());
    std::size_t i = 0;
    while (i < no_html.size()) {
        const std::size_t at = i;
        const char32_t cp = next_codepoint(no_html, i);
        if (is_letter(cp) || is_ascii_digit(cp))
            mapped.append(no_html.substr(at, i - at));
        else
            mapped.push_back(' ');
    }
    return split_whitespace(mapped);
}

std::vector<std::vector<std::string>> split_sentences(std::string_view raw_text,
                                                      int min_words) {
    std::vector<std::string> fragments;
    std::string current;
    auto flush = [&] {
        fragments.push_back(std::move(current));
        current.clear();
    };

    std::size_t i = 0;
    while (i < raw_text.size()) {
        // blank line = sentence boundary
        if (raw_text[i] == '\n') {
            std::size_t j = i + 1;
            while (j < raw_text.size() && (raw_text[j] == ' ' || raw_text[j] == '\t' ||
                                           raw_text[j] == '\r'))
                ++j;
            if (j < raw_text.size() && raw_text[j] == '\n') {
                flush();
                i = j + 1;
                continue;
            }
        }
        const char c = raw_text[i];
        if (c == '.' || c == '!' || c == '?') {
            flush();
            ++i;
            continue;
        }
        current.push_back(c);
        ++i;
    }
    flush();

    std::vector<std::vector<std::string>> out;
    for (const auto& frag : fragments) {
        auto tokens = normalize_basic(frag);
        if (tokens.size() >= static_cast<std::size_t>(min_words))
            out.push_back(std::move(tokens));
    }
    return out;
}

ClassifiedUnit classify_unit(const Classifier& classifier, const PipelineConfig& config,
                             const CommentUnit& unit, const ClassifyContext& ctx) {
    ClassifiedUnit out;
    if (config.mode == PipelineConfig::Mode::basic) {
        if (match_copyright(unit.raw_text)) {
            out.categories.insert(Category::copyright);
            out.drop_category = "copyright";
            return out;
        }
        out.tokens = normalize_basic(unit.raw_text);
        return out;
    }

    // category filters run on lowercased text with punctuation intact
    const std::string lowered = to_lower(unit.raw_text);
    out.categories = classifier.classify(lowered, ctx);
    static const CategorySet dropset = [] {
        CategorySet s;
        for (Category c :
             {Category::copyright, Category::encoding_directive, Category::non_linguistic,
              Category::code_callsite, Category::code_assignment, Category::hash_value,
              Category::latex, Category::sage_math, Category::antlr, Category::non_english})
            s.insert(c);
        return s;
    }();
    if (out.categories.intersects(dropset)) {
        for (Category c : drop_stage_order()) {
            if (c == Category::html || !dropset.contains(c)) continue;
            if (out.categories.contains(c)) {
                out.drop_category = std::string(to_string(c));
                return out;
            }
        }
    }
    out.tokens = normalize_basic(lowered);
    return out;
}

FilterRun::FilterRun(const Classifier& classifier, PipelineConfig config)
    : classifier_(classifier), config_(config) {}

CorpusRecord FilterRun::decide(const CommentUnit& unit, ClassifiedUnit classified) {
    CorpusRecord rec;
    rec.id = unit.id;
    rec.categories = classified.categories;
    if (classified.drop_category) {
        rec.status = RecordStatus::dropped;
        rec.drop_reason = std::move(classified.drop_category);
        return rec;
    }

    const std::string joined = join(classified.tokens);
    if (codepoint_count(joined) < static_cast<std::size_t>(config_.min_chars) ||
        classified.tokens.size() < static_cast<std::size_t>(config_.min_words)) {
        rec.status = RecordStatus::dropped;
        rec.drop_reason = "length";
        return rec;
    }

    auto [it, inserted] = first_seen_.try_emplace(joined, unit.id);
    if (!inserted) {
        rec.categories.insert(Category::duplicate);
        rec.status = RecordStatus::dropped;
        rec.drop_reason = "duplicate";
        rec.duplicate_of = it->second;
        return rec;
    }
    rec.status = RecordStatus::kept;
    rec.normalized = joined;
    return rec;
}

CorpusRecord FilterRun::process(const CommentUnit& unit, const ClassifyContext& ctx) {
    return decide(unit, classify_unit(classifier_, config_, unit, ctx));
}

std::vector<CorpusRecord> FilterRun::process_file(const std::vector<CommentUnit>& file_units) {
    ClassifyContext ctx;
    ctx.strict_antlr = config_.strict_antlr;
    for (const auto& u : file_units) {
        if (classifier_.has_antlr_marker(u.raw_text)) {
            ctx.file_has_antlr_marker = true;
            break;
        }
    }
    std::vector<CorpusRecord> out;
    out.reserve(file_units.size());
    for (const auto& u : file_units) out.push_back(process(u, ctx));
    return out;
}

std::vector<CorpusRecord> run_pipeline(const Classifier& classifier, PipelineConfig config,
                                       const std::vector<CommentUnit>& units) {
    FilterRun run(classifier, config);
    std::vector<CorpusRecord> out;
    out.reserve(units.size());
    std::size_t i = 0;
    while (i < units.size()) {
        std::size_t j = i;
        while (j < units.size() && units[j].file == units[i].file) ++j;
        std::vector<CommentUnit> file_units(units.begin() + static_cast<long>(i),
                                            units.begin() + static_cast<long>(j));
        auto records = run.process_file(file_units);
        out.insert(out.end(), std::make_move_iterator(records.begin()),
                   std::make_move_iterator(records.end()));
        i = j;
    }
    return out;
}

std::vector<CorpusRecord> run_basic(const Classifier& classifier,
                                    const std::vector<CommentUnit>& units) {
    PipelineConfig cfg;
    cfg.mode = PipelineConfig::Mode::basic;
    return run_pipeline(classifier, cfg, units);
}

std::vector<CorpusRecord> run_advanced(const Classifier& classifier,
                                       const std::vector<CommentUnit>& units) {
    PipelineConfig cfg;
    cfg.mode = PipelineConfig::Mode::advanced;
    return run_pipeline(classifier, cfg, units);
}

std::vector<CorpusRecord> dedup(std::vector<CorpusRecord> records) {
    std::unordered_map<std::string, std::uint64_t> first_seen;
    for (auto& rec : records) {
        if (rec.status != RecordStatus::kept || !rec.normalized) continue;
        auto [it, inserted] = first_seen.try_emplace(*rec.normalized, rec.id);
        if (!inserted) {
            rec.categories.insert(Category::duplicate);
            rec.status = RecordStatus::dropped;
            rec.drop_reason = "duplicate";
            rec.duplicate_of = it->second;
            rec.normalized.reset();
        }
    }
    return records;
}

std::vector<std::vector<std::string>> kept_sentences(const std::vector<CommentUnit>& units,
                                                     const std::vector<CorpusRecord>& records,
                                                     int min_words) {
    std::unordered_set<std::uint64_t> kept_ids;
    for (const auto& rec : records)
        if (rec.status == RecordStatus::kept) kept_ids.insert(rec.id);
    std::vector<std::vector<std::string>> out;
    for (const auto& u : units) {
        if (!kept_ids.count(u.id)) continue;
        auto sentences = split_sentences(u.raw_text, min_words);
        out.insert(out.end(), std::make_move_iterator(sentences.begin()),
                   std::make_move_iterator(sentences.end()));
    }
    return out;
}

} // namespace comet
