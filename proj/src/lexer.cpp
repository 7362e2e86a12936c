#include "picip/lexer.hpp"

#include <array>
#include <cctype>

namespace picip {

namespace {

constexpr std::array<std::string_view, 10> kKeywords = {
    "class", "extends", "static",    "public", "protected",
    "private", "interface", "enum",  "package", "import",
};

bool is_keyword_text(std::string_view text) {
    for (auto kw : kKeywords) {
        if (kw == text)
            return true;
    }
    return false;
}

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_part(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_punct_char(char c) {
    switch (c) {
    case '{': case '}': case '(': case ')': case '<': case '>':
    case ',': case '.': case ';': case '[': case ']':
        return true;
    default:
        return false;
    }
}

class Scanner {
public:
    explicit Scanner(const SourceFile& source) : source_(source), text_(source.text) {}

    LexResult scan() {
        LexResult result;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                advance_line();
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
                continue;
            }
            if (c == '/' && peek(1) == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
                continue;
            }
            if (c == '/' && peek(1) == '*') {
                if (!skip_block_comment(result))
                    return result;
                continue;
            }
            if (c == '"' || c == '\'') {
                if (!skip_literal(result, c))
                    return result;
                continue;
            }
            if (is_ident_start(c)) {
                scan_identifier(result);
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                scan_number(result);
                continue;
            }
            SourceSpan span = here();
            advance();
            result.tokens.push_back({is_punct_char(c) ? TokenKind::Punct : TokenKind::Other,
                                     std::string(1, c), span});
        }
        return result;
    }

private:
    SourceSpan here() const { return {source_.path, line_, column_}; }

    char peek(std::size_t ahead) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    void advance() {
        ++pos_;
        ++column_;
    }

    void advance_line() {
        ++pos_;
        ++line_;
        column_ = 1;
    }

    bool skip_block_comment(LexResult& result) {
        SourceSpan start = here();
        advance(); // '/'
        advance(); // '*'
        while (pos_ < text_.size()) {
            if (text_[pos_] == '*' && peek(1) == '/') {
                advance();
                advance();
                return true;
            }
            text_[pos_] == '\n' ? advance_line() : advance();
        }
        result.error = LexError{LexErrorKind::UnterminatedComment, start,
                                "unterminated block comment"};
        return false;
    }

    // String and char literals may not span lines; a newline or end of file
    // before the closing quote aborts the file.
    bool skip_literal(LexResult& result, char quote) {
        SourceSpan start = here();
        advance(); // opening quote
        while (pos_ < text_.size() && text_[pos_] != '\n') {
            char c = text_[pos_];
            if (c == '\\') {
                advance();
                if (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
                continue;
            }
            advance();
            if (c == quote)
                return true;
        }
        result.error = LexError{LexErrorKind::UnterminatedString, start,
                                quote == '"' ? "unterminated string literal"
                                             : "unterminated character literal"};
        return false;
    }

    void scan_identifier(LexResult& result) {
        SourceSpan span = here();
        std::size_t begin = pos_;
        while (pos_ < text_.size() && is_ident_part(text_[pos_]))
            advance();
        std::string text = text_.substr(begin, pos_ - begin);
        TokenKind kind = is_keyword_text(text) ? TokenKind::Keyword : TokenKind::Identifier;
        result.tokens.push_back({kind, std::move(text), span});
    }

    // Digits plus trailing alphanumerics cover integer and suffixed literals;
    // a decimal point lexes as a separate Punct and only ever appears inside
    // skipped bodies and initializers.
    void scan_number(LexResult& result) {
        SourceSpan span = here();
        std::size_t begin = pos_;
        while (pos_ < text_.size() && is_ident_part(text_[pos_]))
            advance();
        result.tokens.push_back({TokenKind::Other, text_.substr(begin, pos_ - begin), span});
    }

    const SourceFile& source_;
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

} // namespace

bool is_keyword(const Token& tok, std::string_view kw) {
    return tok.kind == TokenKind::Keyword && tok.text == kw;
}

bool is_punct(const Token& tok, char c) {
    return tok.kind == TokenKind::Punct && tok.text.size() == 1 && tok.text[0] == c;
}

LexResult lex(const SourceFile& source) {
    return Scanner(source).scan();
}

} // namespace picip
