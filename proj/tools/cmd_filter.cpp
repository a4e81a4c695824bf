#include "commands.hpp"
#include "common.hpp"

#include "comet/jsonl.hpp"
#include "comet/parallel.hpp"
#include "comet/stats.hpp"
#include "comet/textutil.hpp"

#include <CLI11.hpp>

#include <fstream>

namespace comet::cli {

namespace {

struct FilterOptions {
    std::string mode;
    std::string in;
    std::string out;
    std::string report;
    std::string sentences;
    int jobs = 1;
    ClassifierOptions classifier;
};

// Streams one whole file's units through classification (parallel) and
// the sequential decide/dedup stage.
class GroupProcessor {
public:
    GroupProcessor(FilterRun& run, const FilterOptions& options, std::ofstream& out,
                   std::ofstream* sentences_out, CategoryTableBuilder& table)
        : run_(run), options_(options), out_(out), sentences_out_(sentences_out),
          table_(table) {}

    void flush(std::vector<CommentUnit>& group) {
        if (group.empty()) return;
        ClassifyContext ctx;
        ctx.strict_antlr = options_.classifier.strict_table1;
        for (const auto& u : group) {
            if (run_.classifier().has_antlr_marker(u.raw_text)) {
                ctx.file_has_antlr_marker = true;
                break;
            }
        }
        const int jobs = group.size() >= 64 ? options_.jobs : 1;
        parallel_for_ordered<ClassifiedUnit>(
            group.size(), jobs,
            [&](std::size_t i) {
                return classify_unit(run_.classifier(), run_.config(), group[i], ctx);
            },
            [&](std::size_t i, ClassifiedUnit classified) {
                const CommentUnit& unit = group[i];
                CorpusRecord record = run_.decide(unit, std::move(classified));
                table_.add(unit, record.categories);
                if (sentences_out_ && record.status == RecordStatus::kept) {
                    for (const auto& sentence :
                         split_sentences(unit.raw_text, run_.config().min_words))
                        *sentences_out_ << join(sentence) << '\n';
                }
                out_ << to_jsonl(record) << '\n';
            });
        group.clear();
    }

private:
    FilterRun& run_;
    const FilterOptions& options_;
    std::ofstream& out_;
    std::ofstream* sentences_out_;
    CategoryTableBuilder& table_;
};

void run_filter(const FilterOptions& options) {
    const PipelineConfig::Mode mode = options.mode == "basic"
                                          ? PipelineConfig::Mode::basic
                                          : PipelineConfig::Mode::advanced;
    require_regular_file(options.in, "input corpus");

    ManifestWriter manifest("filter", options.out);
    manifest.input("corpus", options.in);
    manifest.output("records", options.out);
    manifest.flag("mode", options.mode);
    manifest.flag("strict_table1", options.classifier.strict_table1);
    manifest.flag("jobs", static_cast<std::uint64_t>(options.jobs));

    auto loaded = load_classifier(options.classifier);
    FilterRun run(*loaded.classifier, pipeline_config(options.classifier, mode));

    std::ifstream in(options.in, std::ios::binary);
    if (!in) throw UsageError("cannot open " + options.in);
    std::ofstream out(options.out, std::ios::binary);
    if (!out) throw UsageError("cannot write " + options.out);
    std::ofstream sentences_out;
    if (!options.sentences.empty()) {
        sentences_out.open(options.sentences, std::ios::binary);
        if (!sentences_out) throw UsageError("cannot write " + options.sentences);
        manifest.output("sentences", options.sentences);
    }

    CategoryTableBuilder table;
    GroupProcessor processor(run, options, out,
                             options.sentences.empty() ? nullptr : &sentences_out, table);

    std::vector<CommentUnit> group;
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        CommentUnit unit;
        std::string error;
        if (!unit_from_jsonl(line, unit, &error))
            throw UsageError(options.in + ":" + std::to_string(lineno) +
                             ": malformed corpus line: " + error);
        if (!group.empty() && group.back().file != unit.file) processor.flush(group);
        group.push_back(std::move(unit));
    }
    processor.flush(group);

    if (!options.report.empty()) {
        std::ofstream report_out(options.report, std::ios::binary);
        if (!report_out) throw UsageError("cannot write " + options.report);
        report_out << table.counts().to_json_string() << '\n';
        manifest.output("report", options.report);
    }
    manifest.write();
}

} // namespace

void register_filter(CLI::App& app) {
    auto options = std::make_shared<FilterOptions>();
    auto* cmd = app.add_subcommand("filter", "classify and filter an extracted corpus");
    cmd->add_option("--mode", options->mode, "filtering level")
        ->required()
        ->check(CLI::IsMember({"basic", "advanced"}));
    cmd->add_option("--in", options->in, "extracted corpus (JSON Lines)")->required();
    cmd->add_option("--out", options->out, "record output (JSON Lines)")->required();
    cmd->add_option("--report", options->report, "category prevalence report JSON");
    cmd->add_option("--sentences", options->sentences,
                    "normalized sentences of kept comments, one per line");
    cmd->add_option("--rules", options->classifier.rules_file, "rule table TSV");
    cmd->add_flag("--strict-table1", options->classifier.strict_table1,
                  "apply the bare type: antlr rule without the file marker guard");
    cmd->add_option("--jobs", options->jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--profiles", options->classifier.profiles_file,
                    "language profile JSON");
    cmd->add_option("--lexicon", options->classifier.lexicon_file, "english word list");
    cmd->add_option("--min-chars", options->classifier.min_chars, "length filter: characters");
    cmd->add_option("--min-words", options->classifier.min_words, "length filter: words");
    cmd->add_option("--ambiguity-margin", options->classifier.ambiguity_margin,
                    "language id: cosine margin before lexicon fallback");
    cmd->add_option("--coverage-min-hits", options->classifier.coverage_min_hits,
                    "language id: lexicon hits per window");
    cmd->add_option("--short-text-coverage", options->classifier.short_text_coverage,
                    "language id: lexicon coverage for short texts");
    cmd->callback([options] { run_filter(*options); });
}

} // namespace comet::cli
