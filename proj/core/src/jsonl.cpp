#include "comet/jsonl.hpp"

#include <nlohmann/json.hpp>

namespace comet {

std::string to_jsonl(const CommentUnit& unit) {
    nlohmann::ordered_json j;
    j["id"] = unit.id;
    j["file"] = unit.file;
    j["start_line"] = unit.start_line;
    j["end_line"] = unit.end_line;
    j["kind"] = unit.kind == CommentKind::docstring ? "docstring" : "line";
    j["raw"] = unit.raw_text;
    return j.dump();
}

bool unit_from_jsonl(std::string_view line, CommentUnit& out, std::string* error) {
    try {
        nlohmann::json j = nlohmann::json::parse(line);
        out.id = j.at("id").get<std::uint64_t>();
        out.file = j.at("file").get<std::string>();
        out.start_line = j.at("start_line").get<int>();
        out.end_line = j.at("end_line").get<int>();
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "docstring")
            out.kind = CommentKind::docstring;
        else if (kind == "line")
            out.kind = CommentKind::line_block;
        else
            throw std::runtime_error("unknown kind: " + kind);
        out.raw_text = j.at("raw").get<std::string>();
        return true;
    } catch (const std::exception& e) {
        if (error) *error = e.what();
        return false;
    }
}

std::string to_jsonl(const CorpusRecord& record) {
    nlohmann::ordered_json j;
    j["id"] = record.id;
    j["status"] = record.status == RecordStatus::kept ? "kept" : "dropped";
    nlohmann::ordered_json cats = nlohmann::ordered_json::array();
    for (Category c : record.categories.values()) cats.push_back(std::string(to_string(c)));
    j["categories"] = std::move(cats);
    j["drop_reason"] = record.drop_reason ? nlohmann::ordered_json(*record.drop_reason)
                                          : nlohmann::ordered_json(nullptr);
    j["duplicate_of"] = record.duplicate_of ? nlohmann::ordered_json(*record.duplicate_of)
                                            : nlohmann::ordered_json(nullptr);
    j["normalized"] = record.normalized ? nlohmann::ordered_json(*record.normalized)
                                        : nlohmann::ordered_json(nullptr);
    return j.dump();
}

bool record_from_jsonl(std::string_view line, CorpusRecord& out, std::string* error) {
    try {
        nlohmann::json j = nlohmann::json::parse(line);
        out.id = j.at("id").get<std::uint64_t>();
        const auto status = j.at("status").get<std::string>();
        if (status == "kept")
            out.status = RecordStatus::kept;
        else if (status == "dropped")
            out.status = RecordStatus::dropped;
        else
            throw std::runtime_error("unknown status: " + status);
        out.categories = CategorySet();
        for (const auto& name : j.at("categories"))
            out.categories.insert(category_from_string(name.get<std::string>()));
        out.drop_reason.reset();
        if (!j.at("drop_reason").is_null())
            out.drop_reason = j["drop_reason"].get<std::string>();
        out.duplicate_of.reset();
        if (!j.at("duplicate_of").is_null())
            out.duplicate_of = j["duplicate_of"].get<std::uint64_t>();
        out.normalized.reset();
        if (!j.at("normalized").is_null())
            out.normalized = j["normalized"].get<std::string>();
        return true;
    } catch (const std::exception& e) {
        if (error) *error = e.what();
        return false;
    }
}

} // namespace comet
