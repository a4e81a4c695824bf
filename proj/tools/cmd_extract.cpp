#include "commands.hpp"
#include "common.hpp"

#include "comet/extract.hpp"
#include "comet/ingest.hpp"
#include "comet/jsonl.hpp"
#include "comet/parallel.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace fs = std::filesystem;

namespace comet::cli {

namespace {

struct ExtractOptions {
    std::string root;
    std::string out;
    std::string report;
    std::string loc;
    std::string extension = ".py";
    int jobs = 1;
};

struct FileResult {
    bool opened = false;
    std::string relative_path;
    std::uint64_t loc = 0;
    std::vector<CommentUnit> units;
    std::vector<std::string> warnings;
    std::string skip_reason; // set when !opened
};

void run_extract(const ExtractOptions& options) {
    const fs::path root(options.root);
    std::error_code ec;
    if (!fs::is_directory(root, ec))
        throw UsageError("corpus root is not a readable directory: " + options.root);

    ManifestWriter manifest("extract", options.out);
    manifest.input("root", root);
    manifest.output("corpus", options.out);
    manifest.flag("extension", options.extension);
    manifest.flag("jobs", static_cast<std::uint64_t>(options.jobs));

    std::vector<std::string> walk_warnings;
    std::vector<fs::path> paths;
    try {
        paths = walk_corpus(root, options.extension, &walk_warnings);
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }

    std::ofstream out(options.out, std::ios::binary);
    if (!out) throw UsageError("cannot write " + options.out);
    std::ofstream loc_out;
    if (!options.loc.empty()) {
        loc_out.open(options.loc, std::ios::binary);
        if (!loc_out) throw UsageError("cannot write " + options.loc);
        loc_out << "file,loc\n";
        manifest.output("loc", options.loc);
    }

    IngestReport report;
    report.warnings = walk_warnings;
    std::uint64_t next_id = 1;

    auto work = [&](std::size_t i) {
        FileResult result;
        result.relative_path = fs::relative(paths[i], root).generic_string();
        auto decoded = decode_file(paths[i]);
        if (auto* failure = std::get_if<DecodeFailure>(&decoded)) {
            result.skip_reason = failure->reason;
            return result;
        }
        auto& source = std::get<SourceFile>(decoded);
        result.opened = true;
        result.loc = source.loc;
        auto extracted = extract_comments(source);
        result.units = std::move(extracted.units);
        for (auto& w : extracted.warnings)
            result.warnings.push_back(result.relative_path + ": " + w);
        for (auto& u : result.units) u.file = result.relative_path;
        return result;
    };
    auto sink = [&](std::size_t, FileResult result) {
        if (!result.opened) {
            report.record(DecodeFailure{result.relative_path, result.skip_reason});
            return;
        }
        ++report.files_opened;
        report.total_loc += result.loc;
        report.warnings.insert(report.warnings.end(), result.warnings.begin(),
                               result.warnings.end());
        if (loc_out.is_open()) loc_out << result.relative_path << ',' << result.loc << '\n';
        for (auto& unit : result.units) {
            unit.id = next_id++;
            out << to_jsonl(unit) << '\n';
        }
    };
    parallel_for_ordered<FileResult>(paths.size(), options.jobs, work, sink);

    if (!options.report.empty()) {
        std::ofstream report_out(options.report, std::ios::binary);
        if (!report_out) throw UsageError("cannot write " + options.report);
        report_out << report.to_json_string() << '\n';
        manifest.output("report", options.report);
    }
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
    manifest.write();
}

} // namespace

void register_extract(CLI::App& app) {
    auto options = std::make_shared<ExtractOptions>();
    auto* cmd = app.add_subcommand("extract",
                                   "walk a source tree and extract comments to JSON Lines");
    cmd->add_option("--root", options->root, "source tree to walk")->required();
    cmd->add_option("--out", options->out, "comment corpus output (JSON Lines)")->required();
    cmd->add_option("--report", options->report, "ingest report JSON");
    cmd->add_option("--loc", options->loc, "per-file line counts CSV");
    cmd->add_option("--ext", options->extension, "file extension filter");
    cmd->add_option("--jobs", options->jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->callback([options] { run_extract(*options); });
}

} // namespace comet::cli
