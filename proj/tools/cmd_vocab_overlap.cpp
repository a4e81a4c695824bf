#include "commands.hpp"
#include "common.hpp"

#include "comet/ngram.hpp"
#include "comet/stats.hpp"

#include <CLI11.hpp>

#include <fstream>

namespace comet::cli {

namespace {

struct VocabOverlapOptions {
    std::vector<std::string> models;
    std::string out;
};

void run_vocab_overlap(const VocabOverlapOptions& options) {
    if (options.models.size() != 4)
        throw UsageError("--models requires exactly 4 model files, got " +
                         std::to_string(options.models.size()));
    for (const auto& m : options.models) require_regular_file(m, "model file");

    ManifestWriter manifest("vocab-overlap", options.out);
    manifest.output("overlap", options.out);

    std::array<std::vector<std::string>, 4> vocabularies;
    static const char* labels[] = {"A", "B", "C", "D"};
    for (std::size_t i = 0; i < 4; ++i) {
        vocabularies[i] = NGramModel::load(options.models[i]).vocab().tokens;
        manifest.input(labels[i], options.models[i]);
    }

    const auto overlap = vocab_overlap(vocabularies);
    std::ofstream out(options.out, std::ios::binary);
    if (!out) throw UsageError("cannot write " + options.out);
    out << overlap.to_json_string() << '\n';
    manifest.write();
}

} // namespace

void register_vocab_overlap(CLI::App& app) {
    auto options = std::make_shared<VocabOverlapOptions>();
    auto* cmd = app.add_subcommand("vocab-overlap",
                                   "4-way vocabulary overlap between trained models");
    cmd->add_option("--models", options->models, "four model files, comma separated")
        ->required()
        ->delimiter(',');
    cmd->add_option("--out", options->out, "overlap JSON output")->required();
    cmd->callback([options] { run_vocab_overlap(*options); });
}

} // namespace comet::cli
