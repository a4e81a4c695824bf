#include "commands.hpp"
#include "common.hpp"

#include "comet/jsonl.hpp"
#include "comet/parallel.hpp"
#include "comet/stats.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <unordered_map>
#include <unordered_set>

namespace comet::cli {

namespace {

struct StatsOptions {
    std::string in;
    std::string loc;
    std::string out_prefix;
    int jobs = 1;
    ClassifierOptions classifier;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << content;
    if (!content.empty() && content.back() != '\n') out << '\n';
}

void run_stats(const StatsOptions& options) {
    require_regular_file(options.in, "input corpus");
    require_regular_file(options.loc, "loc file");

    ManifestWriter manifest("stats", options.out_prefix + ".categories.json");
    manifest.input("corpus", options.in);
    manifest.input("loc", options.loc);
    manifest.flag("jobs", static_cast<std::uint64_t>(options.jobs));

    auto loaded = load_classifier(options.classifier);
    const PipelineConfig config =
        pipeline_config(options.classifier, PipelineConfig::Mode::advanced);

    std::ifstream in(options.in, std::ios::binary);
    if (!in) throw UsageError("cannot open " + options.in);

    CategoryTableBuilder table;
    std::unordered_map<std::string, std::uint64_t> comments_per_file;

    std::vector<CommentUnit> group;
    auto flush = [&](std::vector<CommentUnit>& units) {
        if (units.empty()) return;
        ClassifyContext ctx;
        ctx.strict_antlr = options.classifier.strict_table1;
        for (const auto& u : units) {
            if (loaded.classifier->has_antlr_marker(u.raw_text)) {
                ctx.file_has_antlr_marker = true;
                break;
            }
        }
        const int jobs = units.size() >= 64 ? options.jobs : 1;
        parallel_for_ordered<CategorySet>(
            units.size(), jobs,
            [&](std::size_t i) {
                return classify_unit(*loaded.classifier, config, units[i], ctx).categories;
            },
            [&](std::size_t i, CategorySet categories) {
                table.add(units[i], categories);
                ++comments_per_file[units[i].file];
            });
        units.clear();
    };

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
        if (!group.empty() && group.back().file != unit.file) flush(group);
        group.push_back(std::move(unit));
    }
    flush(group);

    // histogram joins the loc table against per-file comment counts
    std::vector<FileCommentStats> files;
    std::unordered_set<std::string> loc_files;
    {
        std::ifstream loc_in(options.loc, std::ios::binary);
        if (!loc_in) throw UsageError("cannot open " + options.loc);
        std::string loc_line;
        bool first = true;
        while (std::getline(loc_in, loc_line)) {
            if (!loc_line.empty() && loc_line.back() == '\r') loc_line.pop_back();
            if (loc_line.empty()) continue;
            if (first) {
                first = false;
                if (loc_line == "file,loc") continue;
            }
            const auto comma = loc_line.rfind(',');
            if (comma == std::string::npos)
                throw UsageError(options.loc + ": malformed line: " + loc_line);
            FileCommentStats f;
            f.file = loc_line.substr(0, comma);
            f.loc = std::stoull(loc_line.substr(comma + 1));
            const auto it = comments_per_file.find(f.file);
            f.comments = it == comments_per_file.end() ? 0 : it->second;
            loc_files.insert(f.file);
            files.push_back(std::move(f));
        }
    }
    for (const auto& [file, count] : comments_per_file)
        if (!loc_files.count(file))
            std::cerr << "warning: " << file << " has comments but no loc entry\n";

    const auto counts = table.counts();
    const auto histogram = comments_per_file_histogram(files);
    write_file(options.out_prefix + ".categories.json", counts.to_json_string());
    write_file(options.out_prefix + ".categories.txt", counts.to_text_table());
    write_file(options.out_prefix + ".histogram.csv", histogram_to_csv(histogram));
    write_file(options.out_prefix + ".histogram.json", histogram_to_json(histogram));
    write_file(options.out_prefix + ".histogram.txt", histogram_to_text(histogram));
    manifest.output("categories_json", options.out_prefix + ".categories.json");
    manifest.output("categories_txt", options.out_prefix + ".categories.txt");
    manifest.output("histogram_csv", options.out_prefix + ".histogram.csv");
    manifest.output("histogram_json", options.out_prefix + ".histogram.json");
    manifest.output("histogram_txt", options.out_prefix + ".histogram.txt");
    manifest.write();
}

} // namespace

void register_stats(CLI::App& app) {
    auto options = std::make_shared<StatsOptions>();
    auto* cmd = app.add_subcommand(
        "stats", "category prevalence and comments-per-file tables for a corpus");
    cmd->add_option("--in", options->in, "extracted corpus (JSON Lines)")->required();
    cmd->add_option("--loc", options->loc, "per-file line counts CSV from extract")
        ->required();
    cmd->add_option("--out-prefix", options->out_prefix, "output path prefix")->required();
    cmd->add_option("--rules", options->classifier.rules_file, "rule table TSV");
    cmd->add_flag("--strict-table1", options->classifier.strict_table1,
                  "apply the bare type: antlr rule without the file marker guard");
    cmd->add_option("--jobs", options->jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--profiles", options->classifier.profiles_file,
                    "language profile JSON");
    cmd->add_option("--lexicon", options->classifier.lexicon_file, "english word list");
    cmd->callback([options] { run_stats(*options); });
}

} // namespace comet::cli
