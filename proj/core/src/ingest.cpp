#include "comet/ingest.hpp"

#include "comet/textutil.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace comet {

std::size_t count_lines(std::string_view text) {
    if (text.empty()) return 0;
    std::size_t n = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
    if (text.back() != '\n') ++n;
    return n;
}

void IngestReport::record(const SourceFile& sf) {
    ++files_opened;
    total_loc += sf.loc;
}

void IngestReport::record(const DecodeFailure& df) {
    ++files_skipped;
    skipped_paths.push_back(df.path.generic_string());
    warnings.push_back(df.path.generic_string() + ": " + df.reason);
}

void IngestReport::merge(const IngestReport& other) {
    files_opened += other.files_opened;
    files_skipped += other.files_skipped;
    total_loc += other.total_loc;
    skipped_paths.insert(skipped_paths.end(), other.skipped_paths.begin(),
                         other.skipped_paths.end());
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

std::string IngestReport::to_json_string() const {
    nlohmann::ordered_json j;
    j["files_opened"] = files_opened;
    j["files_skipped"] = files_skipped;
    j["skipped_paths"] = skipped_paths;
    j["total_loc"] = total_loc;
    j["warnings"] = warnings;
    return j.dump(2);
}

namespace {

void walk_dir(const fs::path& dir, std::string_view extension,
              std::vector<fs::path>& out, std::vector<std::string>* warnings) {
    std::error_code ec;
    fs::directory_iterator it(dir, ec);
    if (ec) {
        if (warnings)
            warnings->push_back("cannot read directory " + dir.generic_string() + ": " +
                                ec.message());
        return;
    }
    for (const fs::directory_iterator end; it != end; it.increment(ec)) {
        if (ec) {
            if (warnings)
                warnings->push_back("traversal stopped in " + dir.generic_string() + ": " +
                                    ec.message());
            break;
        }
        const fs::directory_entry& entry = *it;
        std::error_code tec;
        if (entry.is_symlink(tec)) continue;
        if (entry.is_directory(tec)) {
            walk_dir(entry.path(), extension, out, warnings);
        } else if (entry.is_regular_file(tec) && entry.path().extension() == extension) {
            out.push_back(entry.path());
        }
    }
}

} // namespace

std::vector<fs::path> walk_corpus(const fs::path& root, std::string_view extension,
                                  std::vector<std::string>* warnings) {
    std::error_code ec;
    const auto st = fs::status(root, ec);
    if (ec || !fs::is_directory(st))
        throw std::runtime_error("cannot read corpus root: " + root.generic_string());

    std::vector<fs::path> out;
    walk_dir(root, extension, out, warnings);
    std::sort(out.begin(), out.end(), [](const fs::path& a, const fs::path& b) {
        return a.generic_string() < b.generic_string();
    });
    return out;
}

namespace {

bool is_control(char32_t cp) {
    if (cp == '\t' || cp == '\n' || cp == '\r') return false;
    return cp < 0x20 || cp == 0x7F || (cp >= 0x80 && cp <= 0x9F);
}

} // namespace

DecodeResult decode_bytes(const fs::path& path, std::string bytes) {
    if (bytes.find('\0') != std::string::npos)
        return DecodeFailure{path, "contains NUL bytes"};
    if (is_valid_utf8(bytes)) {
        SourceFile sf;
        sf.path = path;
        sf.loc = count_lines(bytes);
        sf.text = std::move(bytes);
        sf.encoding_used = SourceFile::Encoding::utf8;
        return sf;
    }
    // latin-1 is total over bytes; guard against binary junk by bounding
    // the share of control characters.
    std::size_t controls = 0;
    for (char c : bytes)
        if (is_control(static_cast<unsigned char>(c))) ++controls;
    if (!bytes.empty() && controls * 100 > bytes.size())
        return DecodeFailure{path, "latin-1 decode is >1% control characters"};
    SourceFile sf;
    sf.path = path;
    sf.text = latin1_to_utf8(bytes);
    sf.loc = count_lines(sf.text);
    sf.encoding_used = SourceFile::Encoding::latin1;
    return sf;
}

DecodeResult decode_file(const fs::path& path) {
    std::error_code ec;
    const auto size = fs::file_size(path, ec);
    if (ec) return DecodeFailure{path, "cannot stat: " + ec.message()};
    if (size > k_max_file_bytes)
        return DecodeFailure{path, "file exceeds 16 MiB limit"};
    std::ifstream in(path, std::ios::binary);
    if (!in) return DecodeFailure{path, "cannot open"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return decode_bytes(path, std::move(ss).str());
}

} // namespace comet
