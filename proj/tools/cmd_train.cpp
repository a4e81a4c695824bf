#include "commands.hpp"
#include "common.hpp"

#include "comet/ngram.hpp"
#include "comet/textutil.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace comet::cli {

namespace {

struct TrainOptions {
    std::string in;
    std::string model;
    std::string prefixes;
    std::string references;
    std::uint64_t holdout = 10000;
    std::uint64_t seed = 42;
    std::uint64_t vocab_k = 10000;
};

void run_train(const TrainOptions& options) {
    require_regular_file(options.in, "sentence file");
    const std::string prefixes_path =
        options.prefixes.empty() ? options.model + ".prefixes.txt" : options.prefixes;
    const std::string references_path =
        options.references.empty() ? options.model + ".references.txt" : options.references;

    ManifestWriter manifest("train", options.model);
    manifest.input("sentences", options.in);
    manifest.output("model", options.model);
    manifest.output("prefixes", prefixes_path);
    manifest.output("references", references_path);
    manifest.flag("holdout", options.holdout);
    manifest.flag("vocab_k", options.vocab_k);
    manifest.seed(options.seed);

    std::vector<Sentence> sentences;
    for (const auto& line : read_lines(options.in)) {
        auto tokens = split_whitespace(line);
        if (!tokens.empty()) sentences.push_back(std::move(tokens));
    }

    const auto split = holdout_split(sentences, options.holdout, options.seed);
    if (split.scaled_down)
        std::cerr << "warning: holdout " << options.holdout
                  << " exceeds the corpus, scaled down to " << split.holdout.size() << '\n';

    const auto model = NGramModel::train(split.train, options.vocab_k);
    model.save(options.model);

    std::ofstream prefixes_out(prefixes_path, std::ios::binary);
    if (!prefixes_out) throw UsageError("cannot write " + prefixes_path);
    for (const auto& prefix : split.prefixes)
        prefixes_out << prefix[0] << ' ' << prefix[1] << ' ' << prefix[2] << ' ' << prefix[3]
                     << '\n';

    std::ofstream references_out(references_path, std::ios::binary);
    if (!references_out) throw UsageError("cannot write " + references_path);
    for (const auto& sentence : split.holdout) references_out << join(sentence) << '\n';

    manifest.write();
}

} // namespace

void register_train(CLI::App& app) {
    auto options = std::make_shared<TrainOptions>();
    auto* cmd = app.add_subcommand("train", "train a 4-gram model with a held-out prefix set");
    cmd->add_option("--in", options->in, "training sentences, one per line")->required();
    cmd->add_option("--model", options->model, "model output file")->required();
    cmd->add_option("--holdout", options->holdout, "held-out sentence count");
    cmd->add_option("--seed", options->seed, "random seed for the holdout sample");
    cmd->add_option("--vocab-k", options->vocab_k, "vocabulary size before special tokens");
    cmd->add_option("--prefixes", options->prefixes,
                    "prefix output file (default: MODEL.prefixes.txt)");
    cmd->add_option("--references", options->references,
                    "held-out sentence output file (default: MODEL.references.txt)");
    cmd->callback([options] { run_train(*options); });
}

} // namespace comet::cli
