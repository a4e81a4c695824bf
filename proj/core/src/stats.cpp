#include "comet/stats.hpp"

#include "comet/textutil.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace comet {

namespace {

nlohmann::ordered_json cell_json(const CategoryCell& c) {
    return nlohmann::ordered_json{{"with_dups_all", c.with_dups_all},
                                  {"with_dups_docstrings", c.with_dups_doc},
                                  {"without_dups_all", c.without_dups_all},
                                  {"without_dups_docstrings", c.without_dups_doc}};
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string CategoryCounts::to_json_string() const {
    nlohmann::ordered_json j;
    j["groups"] = nlohmann::ordered_json::object();
    for (const auto& [name, cell] : groups) j["groups"][name] = cell_json(cell);
    j["categories"] = nlohmann::ordered_json::object();
    for (const auto& [name, cell] : categories) j["categories"][name] = cell_json(cell);
    j["total"] = cell_json(total);
    return j.dump(2);
}

std::string CategoryCounts::to_text_table() const {
    std::ostringstream out;
    auto row = [&](std::string_view name, const CategoryCell& c) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-20.*s %14llu %14llu %14llu %14llu\n",
                      static_cast<int>(name.size()), name.data(),
                      static_cast<unsigned long long>(c.with_dups_all),
                      static_cast<unsigned long long>(c.with_dups_doc),
                      static_cast<unsigned long long>(c.without_dups_all),
                      static_cast<unsigned long long>(c.without_dups_doc));
        out << buf;
    };
    out << "category                 dup:all dup:docstrings        nodup:all "
           "nodup:docstrings\n";
    for (const auto& [name, cell] : groups) row(name, cell);
    out << "--\n";
    for (const auto& [name, cell] : categories) row(name, cell);
    out << "--\n";
    row("total", total);
    return out.str();
}

CategoryTableBuilder::CategoryTableBuilder() {
    for (const auto& n : {Category::copyright, Category::code_callsite,
                          Category::code_assignment, Category::hash_value, Category::latex,
                          Category::sage_math, Category::html, Category::antlr,
                          Category::non_english, Category::non_linguistic,
                          Category::encoding_directive, Category::short_comment,
                          Category::duplicate})
        counts_.categories[std::string(to_string(n))] = CategoryCell{};
    for (const auto& g :
         {CategoryGroup::copyright, CategoryGroup::code_math, CategoryGroup::non_english,
          CategoryGroup::non_linguistic, CategoryGroup::other, CategoryGroup::duplicates})
        counts_.groups[std::string(to_string(g))] = CategoryCell{};
}

void CategoryTableBuilder::add(const CommentUnit& u, const CategorySet& categories) {
    std::string key = join(normalize_basic(u.raw_text));
    if (key.empty()) key = "\x01raw:" + u.raw_text;
    const bool first = seen_.insert(std::move(key)).second;
    const bool doc = u.kind == CommentKind::docstring;

    auto bump = [&](CategoryCell& cell) {
        ++cell.with_dups_all;
        if (doc) ++cell.with_dups_doc;
        if (first) {
            ++cell.without_dups_all;
            if (doc) ++cell.without_dups_doc;
        }
    };

    bump(counts_.total);
    if (!first) {
        // duplicates roll up as their own row; without-dup columns stay 0
        auto& cell = counts_.categories[std::string(to_string(Category::duplicate))];
        ++cell.with_dups_all;
        if (doc) ++cell.with_dups_doc;
        auto& gcell = counts_.groups[std::string(to_string(CategoryGroup::duplicates))];
        ++gcell.with_dups_all;
        if (doc) ++gcell.with_dups_doc;
    }

    unsigned groups_hit = 0; // one count per group even when several subrows fire
    for (Category c : categories.values()) {
        if (c == Category::duplicate) continue; // recomputed above
        bump(counts_.categories[std::string(to_string(c))]);
        const CategoryGroup g = group_of(c);
        const unsigned gbit = 1u << static_cast<unsigned>(g);
        if (!(groups_hit & gbit)) {
            groups_hit |= gbit;
            bump(counts_.groups[std::string(to_string(g))]);
        }
    }
}

CategoryCounts category_table(const std::vector<CorpusRecord>& records,
                              const std::vector<CommentUnit>& units) {
    std::unordered_map<std::uint64_t, const CorpusRecord*> by_id;
    by_id.reserve(records.size());
    for (const auto& r : records) by_id[r.id] = &r;

    CategoryTableBuilder builder;
    for (const auto& u : units) {
        const auto it = by_id.find(u.id);
        builder.add(u, it == by_id.end() ? CategorySet() : it->second->categories);
    }
    return builder.take();
}

std::vector<HistogramRow> comments_per_file_histogram(
    const std::vector<FileCommentStats>& files) {
    static const char* labels[] = {"0",  "1",  "2",  "3",      "4",        "5",    "6",
                                   "7",  "8",  "9",  "10",     "11-100",   "100-2000",
                                   ">2000"};
    constexpr std::size_t n_buckets = std::size(labels);
    std::array<std::uint64_t, n_buckets> file_counts{};
    std::array<std::uint64_t, n_buckets> loc_sums{};

    auto bucket_of = [](std::uint64_t comments) -> std::size_t {
        if (comments <= 10) return comments;
        if (comments < 100) return 11;
        if (comments <= 2000) return 12;
        return 13;
    };
    for (const auto& f : files) {
        const std::size_t b = bucket_of(f.comments);
        ++file_counts[b];
        loc_sums[b] += f.loc;
    }

    std::vector<HistogramRow> rows;
    std::uint64_t total_files = 0, total_loc = 0;
    for (std::size_t b = 0; b < n_buckets; ++b) {
        HistogramRow row;
        row.bucket = labels[b];
        row.files = file_counts[b];
        row.loc = loc_sums[b];
        row.loc_avg = file_counts[b]
                          ? round2(static_cast<double>(loc_sums[b]) /
                                   static_cast<double>(file_counts[b]))
                          : 0.0;
        total_files += row.files;
        total_loc += row.loc;
        rows.push_back(std::move(row));
    }
    HistogramRow total;
    total.bucket = "total";
    total.files = total_files;
    total.loc = total_loc;
    total.loc_avg =
        total_files ? round2(static_cast<double>(total_loc) / static_cast<double>(total_files))
                    : 0.0;
    rows.push_back(std::move(total));
    return rows;
}

std::string histogram_to_csv(const std::vector<HistogramRow>& rows) {
    std::string out = "bucket,files,loc,loc_avg\n";
    for (const auto& r : rows) {
        out += r.bucket + "," + std::to_string(r.files) + "," + std::to_string(r.loc) + "," +
               fmt2(r.loc_avg) + "\n";
    }
    return out;
}

std::string histogram_to_json(const std::vector<HistogramRow>& rows) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : rows)
        j.push_back(nlohmann::ordered_json{{"bucket", r.bucket},
                                           {"files", r.files},
                                           {"loc", r.loc},
                                           {"loc_avg", r.loc_avg}});
    return j.dump(2);
}

std::string histogram_to_text(const std::vector<HistogramRow>& rows) {
    std::ostringstream out;
    out << "comments        files            loc      loc avg\n";
    for (const auto& r : rows) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%-10s %10llu %14llu %12s\n", r.bucket.c_str(),
                      static_cast<unsigned long long>(r.files),
                      static_cast<unsigned long long>(r.loc), fmt2(r.loc_avg).c_str());
        out << buf;
    }
    return out.str();
}

bool Vocabulary::contains(const std::string& token) const {
    return std::find(tokens.begin(), tokens.end(), token) != tokens.end();
}

Vocabulary build_vocab(const std::vector<std::vector<std::string>>& sentences,
                       std::size_t k) {
    Vocabulary v;
    v.k = k;
    for (const auto& s : sentences)
        for (const auto& tok : s) ++v.freq[tok];

    std::vector<std::pair<std::string, std::uint64_t>> items(v.freq.begin(), v.freq.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (items.size() > k) items.resize(k);
    v.tokens.reserve(items.size() + 3);
    for (auto& [tok, _] : items) v.tokens.push_back(std::move(tok));
    v.tokens.emplace_back(Vocabulary::unk);
    v.tokens.emplace_back(Vocabulary::bos);
    v.tokens.emplace_back(Vocabulary::eos);
    return v;
}

VocabOverlap vocab_overlap(const std::array<std::vector<std::string>, 4>& vocab_tokens) {
    std::unordered_map<std::string, unsigned> masks;
    for (unsigned i = 0; i < 4; ++i)
        for (const auto& tok : vocab_tokens[i]) masks[tok] |= 1u << i;

    VocabOverlap out;
    static const char letters[] = "ABCD";
    for (unsigned mask = 1; mask < 16; ++mask) {
        std::string label;
        for (unsigned i = 0; i < 4; ++i)
            if (mask & (1u << i)) label.push_back(letters[i]);
        out.regions[label] = 0;
    }
    for (const auto& [tok, mask] : masks) {
        std::string label;
        for (unsigned i = 0; i < 4; ++i)
            if (mask & (1u << i)) label.push_back(letters[i]);
        ++out.regions[label];
    }
    out.union_size = masks.size();
    return out;
}

std::string VocabOverlap::to_json_string() const {
    nlohmann::ordered_json j;
    j["union"] = union_size;
    j["regions"] = nlohmann::ordered_json::object();
    for (const auto& [label, count] : regions) j["regions"][label] = count;
    return j.dump(2);
}

} // namespace comet
