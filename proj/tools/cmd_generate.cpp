#include "commands.hpp"
#include "common.hpp"

#include "comet/ngram.hpp"
#include "comet/textutil.hpp"

#include <CLI11.hpp>

#include <fstream>

#include <nlohmann/json.hpp>

namespace comet::cli {

namespace {

struct GenerateOptions {
    std::string model;
    std::string prefixes;
    std::string out;
    double threshold = 0.9;
    std::uint64_t max_len = 40;
};

void run_generate(const GenerateOptions& options) {
    require_regular_file(options.model, "model file");
    require_regular_file(options.prefixes, "prefix file");

    ManifestWriter manifest("generate", options.out);
    manifest.input("model", options.model);
    manifest.input("prefixes", options.prefixes);
    manifest.output("generations", options.out);
    manifest.flag("threshold", options.threshold);
    manifest.flag("max_len", options.max_len);

    const auto model = NGramModel::load(options.model);

    std::ofstream out(options.out, std::ios::binary);
    if (!out) throw UsageError("cannot write " + options.out);

    const auto lines = read_lines(options.prefixes);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const auto tokens = split_whitespace(lines[i]);
        if (tokens.size() != 4)
            throw UsageError(options.prefixes + ":" + std::to_string(i + 1) +
                             ": prefix must have exactly 4 tokens");
        const auto completion = model.complete({tokens[0], tokens[1], tokens[2], tokens[3]},
                                               options.threshold, options.max_len);
        nlohmann::ordered_json j;
        j["prefix"] = completion.prefix;
        j["output"] = completion.output;
        j["stop_reason"] = std::string(to_string(completion.stop_reason));
        out << j.dump() << '\n';
    }
    manifest.write();
}

} // namespace

void register_generate(CLI::App& app) {
    auto options = std::make_shared<GenerateOptions>();
    auto* cmd = app.add_subcommand("generate",
                                   "complete held-out prefixes with a trained model");
    cmd->add_option("--model", options->model, "model file from train")->required();
    cmd->add_option("--prefixes", options->prefixes, "prefix file, 4 tokens per line")
        ->required();
    cmd->add_option("--out", options->out, "generation output (JSON Lines)")->required();
    cmd->add_option("--threshold", options->threshold,
                    "minimum conditional probability to extend");
    cmd->add_option("--max-len", options->max_len, "output length cap");
    cmd->callback([options] { run_generate(*options); });
}

} // namespace comet::cli
