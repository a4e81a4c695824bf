#pragma once

#include "comet/extract.hpp"
#include "comet/pipeline.hpp"

#include <string>
#include <string_view>

namespace comet {

// Corpus line: {"id":..,"file":..,"start_line":..,"end_line":..,
//               "kind":"line"|"docstring","raw":..}
std::string to_jsonl(const CommentUnit& unit);
bool unit_from_jsonl(std::string_view line, CommentUnit& out, std::string* error);

// Record line: {"id":..,"status":"kept"|"dropped","categories":[..],
//               "drop_reason":..|null,"duplicate_of":..|null,
//               "normalized":..|null}
std::string to_jsonl(const CorpusRecord& record);
bool record_from_jsonl(std::string_view line, CorpusRecord& out, std::string* error);

} // namespace comet
