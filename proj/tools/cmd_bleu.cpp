#include "commands.hpp"
#include "common.hpp"

#include "comet/bleu.hpp"
#include "comet/textutil.hpp"

#include <CLI11.hpp>

#include <fstream>

#include <nlohmann/json.hpp>

namespace comet::cli {

namespace {

struct BleuOptions {
    std::string candidates;
    std::string references;
    std::string out_prefix;
};

// Accepts either plain token lines or the generate output (JSON Lines
// with an "output" array).
std::vector<std::vector<std::string>> read_token_lines(const std::string& path) {
    std::vector<std::vector<std::string>> out;
    const auto lines = read_lines(path);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.empty()) continue;
        if (line.front() == '{') {
            try {
                nlohmann::json j = nlohmann::json::parse(line);
                out.push_back(j.at("output").get<std::vector<std::string>>());
            } catch (const std::exception& e) {
                throw UsageError(path + ":" + std::to_string(i + 1) +
                                 ": malformed generation line: " + e.what());
            }
        } else {
            out.push_back(split_whitespace(line));
        }
        if (out.back().empty())
            throw UsageError(path + ":" + std::to_string(i + 1) + ": empty sentence");
    }
    return out;
}

void run_bleu(const BleuOptions& options) {
    require_regular_file(options.candidates, "candidate file");
    require_regular_file(options.references, "reference file");

    ManifestWriter manifest("bleu", options.out_prefix + ".report.json");
    manifest.input("candidates", options.candidates);
    manifest.input("references", options.references);

    const auto candidates = read_token_lines(options.candidates);
    const auto references = read_token_lines(options.references);
    if (candidates.size() != references.size())
        throw UsageError("candidate/reference count mismatch: " +
                         std::to_string(candidates.size()) + " vs " +
                         std::to_string(references.size()));

    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> pairs;
    pairs.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i)
        pairs.emplace_back(candidates[i], references[i]);

    const auto report = score_distribution(pairs);

    std::ofstream csv(options.out_prefix + ".dist.csv", std::ios::binary);
    if (!csv) throw UsageError("cannot write " + options.out_prefix + ".dist.csv");
    csv << report.to_csv();

    std::ofstream json(options.out_prefix + ".report.json", std::ios::binary);
    if (!json) throw UsageError("cannot write " + options.out_prefix + ".report.json");
    json << report.to_json_string() << '\n';

    std::ofstream scores(options.out_prefix + ".scores.csv", std::ios::binary);
    if (!scores) throw UsageError("cannot write " + options.out_prefix + ".scores.csv");
    scores << "index,score\n";
    for (std::size_t i = 0; i < report.scores.size(); ++i) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%zu,%.12g\n", i, report.scores[i]);
        scores << buf;
    }

    manifest.output("dist_csv", options.out_prefix + ".dist.csv");
    manifest.output("report_json", options.out_prefix + ".report.json");
    manifest.output("scores_csv", options.out_prefix + ".scores.csv");
    manifest.write();
}

} // namespace

void register_bleu(CLI::App& app) {
    auto options = std::make_shared<BleuOptions>();
    auto* cmd = app.add_subcommand("bleu", "score generations against references");
    cmd->add_option("--candidates", options->candidates,
                    "generations (generate output or plain token lines)")
        ->required();
    cmd->add_option("--references", options->references, "reference sentences, one per line")
        ->required();
    cmd->add_option("--out-prefix", options->out_prefix, "output path prefix")->required();
    cmd->callback([options] { run_bleu(*options); });
}

} // namespace comet::cli
