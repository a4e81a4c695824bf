#include "comet/extract.hpp"

#include <algorithm>

namespace comet {

namespace {

bool is_string_prefix(std::string_view ident) {
    if (ident.empty() || ident.size() > 2) return false;
    for (char c : ident) {
        switch (c) {
            case 'r': case 'R': case 'b': case 'B':
            case 'u': case 'U': case 'f': case 'F': break;
            default: return false;
        }
    }
    return true;
}

bool is_ident_char(char c) {
    const auto u = static_cast<unsigned char>(c);
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || u >= 0x80;
}

struct Lexer {
    std::string_view src;
    std::vector<std::string>* warnings;
    std::vector<RawComment> out;

    std::size_t pos = 0;
    int line = 1;
    int col = 0;
    int bracket_depth = 0;

    // Current statement (up to a top-level newline or ';').
    bool has_nonstring_token = false;
    int string_count = 0;
    std::string statement_text; // concatenated string bodies
    int stmt_start_line = 0, stmt_start_col = 0, stmt_end_line = 0;

    bool done = false;

    explicit Lexer(std::string_view s, std::vector<std::string>* w) : src(s), warnings(w) {}

    char peek(std::size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }
    void advance() {
        if (src[pos] == '\n') {
            ++line;
            col = 0;
        } else {
            ++col;
        }
        ++pos;
    }
    void warn(const std::string& msg) {
        if (warnings) warnings->push_back("line " + std::to_string(line) + ": " + msg);
    }

    void end_statement() {
        if (string_count > 0 && !has_nonstring_token) {
            RawComment rc;
            rc.kind = CommentKind::docstring;
            rc.start_line = stmt_start_line;
            rc.end_line = stmt_end_line;
            rc.start_col = stmt_start_col;
            rc.text = std::move(statement_text);
            out.push_back(std::move(rc));
        }
        has_nonstring_token = false;
        string_count = 0;
        statement_text.clear();
    }

    void note_token_start(int l, int c) {
        if (string_count == 0 && !has_nonstring_token) {
            stmt_start_line = l;
            stmt_start_col = c;
        }
    }

    void read_line_comment() {
        RawComment rc;
        rc.start_line = rc.end_line = line;
        rc.start_col = col;
        advance(); // '#'
        if (peek() == ' ') {
            rc.marker_space = true;
            advance();
        }
        const std::size_t start = pos;
        while (pos < src.size() && src[pos] != '\n') advance();
        std::string_view body = src.substr(start, pos - start);
        if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
        rc.text = std::string(body);
        out.push_back(std::move(rc));
    }

    // pos is at the opening quote (prefix already consumed).
    void read_string(int start_line_, int start_col_) {
        const char quote = src[pos];
        bool triple = peek(1) == quote && peek(2) == quote;
        advance();
        if (triple) {
            advance();
            advance();
        }
        const std::size_t body_start = pos;
        while (true) {
            if (pos >= src.size()) {
                warn(triple ? "unterminated triple-quoted string"
                            : "unterminated string literal");
                if (triple) done = true; // rest of file is string: give up
                has_nonstring_token = true;
                return;
            }
            const char c = src[pos];
            if (c == '\\') {
                advance();
                if (pos < src.size()) advance();
                continue;
            }
            if (!triple && c == '\n') {
                warn("unterminated string literal");
                has_nonstring_token = true;
                return;
            }
            if (c == quote && (!triple || (peek(1) == quote && peek(2) == quote))) {
                std::string_view body = src.substr(body_start, pos - body_start);
                note_token_start(start_line_, start_col_);
                statement_text.append(body);
                ++string_count;
                stmt_end_line = line;
                advance();
                if (triple) {
                    advance();
                    advance();
                }
                return;
            }
            advance();
        }
    }

    void run() {
        if (src.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;
        while (pos < src.size() && !done) {
            const char c = src[pos];
            if (c == '\n') {
                if (bracket_depth == 0) end_statement();
                advance();
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
                advance();
                continue;
            }
            if (c == '\\' && peek(1) == '\n') {
                advance();
                advance();
                continue;
            }
            if (c == '#') {
                read_line_comment();
                continue;
            }
            if (c == '\'' || c == '"') {
                read_string(line, col);
                continue;
            }
            if (is_ident_char(c) && !(c >= '0' && c <= '9')) {
                const int tok_line = line, tok_col = col;
                const std::size_t start = pos;
                while (pos < src.size() && is_ident_char(src[pos])) advance();
                std::string_view ident = src.substr(start, pos - start);
                if (is_string_prefix(ident) && (peek() == '\'' || peek() == '"')) {
                    read_string(tok_line, tok_col);
                } else {
                    note_token_start(tok_line, tok_col);
                    has_nonstring_token = true;
                }
                continue;
            }
            if (c == ';' && bracket_depth == 0) {
                end_statement();
                advance();
                continue;
            }
            if (c == '(' || c == '[' || c == '{') ++bracket_depth;
            if (c == ')' || c == ']' || c == '}') bracket_depth = std::max(0, bracket_depth - 1);
            note_token_start(line, col);
            has_nonstring_token = true;
            advance();
        }
        if (!done) end_statement();
        std::stable_sort(out.begin(), out.end(), [](const RawComment& a, const RawComment& b) {
            if (a.start_line != b.start_line) return a.start_line < b.start_line;
            return a.start_col < b.start_col;
        });
    }
};

} // namespace

std::vector<RawComment> lex_comments(std::string_view text, std::vector<std::string>* warnings) {
    Lexer lx(text, warnings);
    lx.run();
    return std::move(lx.out);
}

std::vector<RawComment> merge_line_blocks(std::vector<RawComment> raw) {
    std::vector<RawComment> out;
    for (auto& rc : raw) {
        if (rc.kind == CommentKind::line_block && !out.empty()) {
            RawComment& prev = out.back();
            if (prev.kind == CommentKind::line_block && prev.end_line + 1 == rc.start_line &&
                prev.start_col == rc.start_col) {
                prev.text.push_back('\n');
                prev.text.append(rc.text);
                prev.end_line = rc.end_line;
                continue;
            }
        }
        out.push_back(std::move(rc));
    }
    return out;
}

ExtractResult extract_comments(const SourceFile& source) {
    ExtractResult result;
    auto raw = merge_line_blocks(lex_comments(source.text, &result.warnings));
    const std::string file = source.path.generic_string();
    result.units.reserve(raw.size());
    for (auto& rc : raw) {
        CommentUnit u;
        u.file = file;
        u.start_line = rc.start_line;
        u.end_line = rc.end_line;
        u.kind = rc.kind;
        u.raw_text = std::move(rc.text);
        result.units.push_back(std::move(u));
    }
    return result;
}

void assign_ids(std::vector<CommentUnit>& units, std::uint64_t first_id) {
    std::uint64_t next = first_id;
    for (auto& u : units) u.id = next++;
}

} // namespace comet
