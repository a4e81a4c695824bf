#pragma once

#include "comet/categorize.hpp"
#include "comet/langid.hpp"
#include "comet/pipeline.hpp"

#include <chrono>
#include <memory>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace comet::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_usage = 2;

// Input/usage problem: reported on stderr, exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string tool_version();

// Options shared by the subcommands that classify comments.
struct ClassifierOptions {
    std::string rules_file;   // empty = built-in table
    std::string profiles_file;
    std::string lexicon_file;
    bool strict_table1 = false;
    int min_chars = 10;
    int min_words = 4;
    double ambiguity_margin = 0.05;
    int coverage_min_hits = 2;
    double short_text_coverage = 0.5;
};

struct LoadedClassifier {
    // unique_ptr keeps the address the classifier points at stable
    std::unique_ptr<LangClassifier> lang;
    std::unique_ptr<Classifier> classifier;
    std::string rule_version;
};

// Loads rule table + language data per options, resolving data files
// against COMET_DATA_DIR / the bundled defaults when not overridden.
LoadedClassifier load_classifier(const ClassifierOptions& options);

PipelineConfig pipeline_config(const ClassifierOptions& options, PipelineConfig::Mode mode);

// Run manifest written next to every primary output.
class ManifestWriter {
public:
    ManifestWriter(std::string command, std::filesystem::path primary_output);
    void flag(const std::string& key, const std::string& value);
    void flag(const std::string& key, std::uint64_t value);
    void flag(const std::string& key, double value);
    void flag(const std::string& key, bool value);
    void input(const std::string& key, const std::filesystem::path& path);
    void output(const std::string& key, const std::filesystem::path& path);
    void seed(std::uint64_t seed);
    // writes <primary>.manifest.json with the elapsed wall-clock time
    void write();

private:
    std::string command_;
    std::filesystem::path primary_;
    std::chrono::steady_clock::time_point started_;
    std::map<std::string, std::string> flags_;
    std::map<std::string, std::string> inputs_;
    std::map<std::string, std::string> outputs_;
    std::optional<std::uint64_t> seed_;
};

std::vector<std::string> read_lines(const std::filesystem::path& file);
void require_regular_file(const std::filesystem::path& file, const std::string& what);

} // namespace comet::cli
