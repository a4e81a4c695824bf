#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace comet {

inline constexpr std::uintmax_t k_max_file_bytes = 16ull * 1024 * 1024;

struct SourceFile {
    std::filesystem::path path;
    std::string text; // UTF-8, regardless of the on-disk encoding
    enum class Encoding { utf8, latin1 } encoding_used = Encoding::utf8;
    std::size_t loc = 0;
};

struct DecodeFailure {
    std::filesystem::path path;
    std::string reason;
};

using DecodeResult = std::variant<SourceFile, DecodeFailure>;

struct IngestReport {
    std::uint64_t files_opened = 0;
    std::uint64_t files_skipped = 0;
    std::vector<std::string> skipped_paths;
    std::uint64_t total_loc = 0;
    std::vector<std::string> warnings;

    void record(const SourceFile& sf);
    void record(const DecodeFailure& df);
    // Combines two partial reports; used when decoding runs across workers.
    void merge(const IngestReport& other);
    std::string to_json_string() const;
};

// Every regular file under `root` with the given extension, sorted by
// path. Does not follow symlinks. Throws std::runtime_error if `root`
// itself is missing or unreadable; unreadable subdirectories append a
// warning and traversal continues.
std::vector<std::filesystem::path> walk_corpus(const std::filesystem::path& root,
                                               std::string_view extension = ".py",
                                               std::vector<std::string>* warnings = nullptr);

// Total over arbitrary byte input: UTF-8 first, then latin-1, rejecting
// NUL bytes and control-heavy latin-1 decodes.
DecodeResult decode_bytes(const std::filesystem::path& path, std::string bytes);
DecodeResult decode_file(const std::filesystem::path& path);

std::size_t count_lines(std::string_view text);

} // namespace comet
