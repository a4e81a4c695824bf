#include "common.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace comet::cli {

std::string tool_version() {
#ifdef COMET_VERSION
    return COMET_VERSION;
#else
    return "0.1.0";
#endif
}

LoadedClassifier load_classifier(const ClassifierOptions& options) {
    const fs::path data_dir = default_data_dir();
    const fs::path profiles = options.profiles_file.empty()
                                  ? data_dir / "langid_profiles.json"
                                  : fs::path(options.profiles_file);
    const fs::path lexicon = options.lexicon_file.empty() ? data_dir / "english_lexicon.txt"
                                                          : fs::path(options.lexicon_file);
    require_regular_file(profiles, "language profiles");
    require_regular_file(lexicon, "lexicon");

    LangClassifier::Config lang_config;
    lang_config.ambiguity_margin = options.ambiguity_margin;
    lang_config.coverage_min_hits = options.coverage_min_hits;
    lang_config.short_text_coverage = options.short_text_coverage;

    RuleTable table;
    if (options.rules_file.empty()) {
        table = RuleTable::builtin();
    } else {
        require_regular_file(options.rules_file, "rule table");
        table = RuleTable::load(options.rules_file);
    }

    ClassifierConfig cconfig;
    cconfig.short_min_chars = options.min_chars;
    cconfig.short_min_words = options.min_words;

    LoadedClassifier loaded;
    loaded.rule_version = table.version();
    loaded.lang = std::make_unique<LangClassifier>(
        LangClassifier::load(profiles, lexicon, lang_config));
    loaded.classifier =
        std::make_unique<Classifier>(std::move(table), loaded.lang.get(), cconfig);
    return loaded;
}

PipelineConfig pipeline_config(const ClassifierOptions& options, PipelineConfig::Mode mode) {
    PipelineConfig config;
    config.mode = mode;
    config.min_chars = options.min_chars;
    config.min_words = options.min_words;
    config.strict_antlr = options.strict_table1;
    return config;
}

ManifestWriter::ManifestWriter(std::string command, fs::path primary_output)
    : command_(std::move(command)), primary_(std::move(primary_output)),
      started_(std::chrono::steady_clock::now()) {}

void ManifestWriter::flag(const std::string& key, const std::string& value) {
    flags_[key] = value;
}
void ManifestWriter::flag(const std::string& key, std::uint64_t value) {
    flags_[key] = std::to_string(value);
}
void ManifestWriter::flag(const std::string& key, double value) {
    flags_[key] = std::to_string(value);
}
void ManifestWriter::flag(const std::string& key, bool value) {
    flags_[key] = value ? "true" : "false";
}
void ManifestWriter::input(const std::string& key, const fs::path& path) {
    inputs_[key] = path.generic_string();
}
void ManifestWriter::output(const std::string& key, const fs::path& path) {
    outputs_[key] = path.generic_string();
}
void ManifestWriter::seed(std::uint64_t seed) { seed_ = seed; }

void ManifestWriter::write() {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started_)
                             .count();
    nlohmann::ordered_json j;
    j["command"] = command_;
    j["tool_version"] = tool_version();
    j["flags"] = flags_;
    j["inputs"] = inputs_;
    j["outputs"] = outputs_;
    if (seed_)
        j["seed"] = *seed_;
    else
        j["seed"] = nullptr;
    j["duration_ms"] = elapsed;
    const fs::path manifest = primary_.string() + ".manifest.json";
    std::ofstream out(manifest, std::ios::binary);
    out << j.dump(2) << '\n';
}

std::vector<std::string> read_lines(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw UsageError("cannot open " + file.generic_string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

void require_regular_file(const fs::path& file, const std::string& what) {
    std::error_code ec;
    if (!fs::is_regular_file(file, ec))
        throw UsageError("missing " + what + ": " + file.generic_string());
}

} // namespace comet::cli
