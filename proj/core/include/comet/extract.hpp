#pragma once

#include "comet/ingest.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace comet {

enum class CommentKind { line_block, docstring };

struct CommentUnit {
    std::uint64_t id = 0;
    std::string file;
    int start_line = 1; // 1-based, inclusive
    int end_line = 1;
    CommentKind kind = CommentKind::line_block;
    std::string raw_text;
};

// Lexer output before adjacent line comments are merged into blocks.
struct RawComment {
    CommentKind kind = CommentKind::line_block;
    int start_line = 1;
    int end_line = 1;
    int start_col = 0;       // byte column of '#' or of the opening quote/prefix
    bool marker_space = false; // line comments: a single space followed '#'
    std::string text;
};

struct ExtractResult {
    std::vector<CommentUnit> units;
    std::vector<std::string> warnings;
};

// All comments of one file in source order: '#' comments outside string
// literals, and string-literal expression statements (docstrings). A
// statement consisting solely of string literals (implicit concatenation
// allowed) is a docstring wherever it appears.
std::vector<RawComment> lex_comments(std::string_view text,
                                     std::vector<std::string>* warnings = nullptr);

// Joins consecutive line comments on adjacent lines with identical start
// column into one block; docstrings pass through unchanged.
std::vector<RawComment> merge_line_blocks(std::vector<RawComment> raw);

ExtractResult extract_comments(const SourceFile& source);

// Sequential id assignment over corpus-ordered units.
void assign_ids(std::vector<CommentUnit>& units, std::uint64_t first_id = 1);

} // namespace comet
