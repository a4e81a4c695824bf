#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace comet {

// Writing-system buckets used by the language classifier. Only the major
// blocks that show up in source comments are distinguished; everything
// else lands in `other`.
enum class Script {
    latin,
    cyrillic,
    greek,
    arabic,
    hebrew,
    cjk,
    kana,
    hangul,
    devanagari,
    thai,
    other,
};

Script script_of(char32_t cp);

// Letter test across the major alphabet blocks (Latin incl. supplements,
// Greek, Cyrillic, Arabic, Hebrew, CJK, kana, Hangul, Devanagari, Thai).
bool is_letter(char32_t cp);
bool is_ascii_digit(char32_t cp);

// Decodes the codepoint starting at byte offset `i` and advances `i`.
// Invalid bytes decode as U+FFFD and advance by one.
char32_t next_codepoint(std::string_view text, std::size_t& i);
void append_utf8(std::string& out, char32_t cp);
std::vector<char32_t> to_codepoints(std::string_view text);
std::size_t codepoint_count(std::string_view text);

bool is_valid_utf8(std::string_view bytes);
std::string latin1_to_utf8(std::string_view bytes);
// Inverse of latin1_to_utf8; empty optional if any codepoint is > U+00FF.
std::optional<std::string> utf8_to_latin1(std::string_view text);

// ASCII + Latin-1 supplement lowercasing; other codepoints pass through.
std::string to_lower(std::string_view text);

std::vector<std::string> split_whitespace(std::string_view text);
std::string join(const std::vector<std::string>& tokens, std::string_view sep = " ");

} // namespace comet
