#pragma once

#include "picip/source.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace picip {

enum class TokenKind {
    Keyword,    // class extends static public protected private interface enum package import
    Identifier, // everything identifier-shaped that is not one of the keywords above
    Punct,      // { } ( ) < > , . ; [ ]
    Other,      // any remaining symbol or literal fragment, kept for body skipping
};

struct Token {
    TokenKind kind = TokenKind::Other;
    std::string text;
    SourceSpan span;

    bool operator==(const Token&) const = default;
};

bool is_keyword(const Token& tok, std::string_view kw);
bool is_punct(const Token& tok, char c);

enum class LexErrorKind { UnterminatedComment, UnterminatedString };

struct LexError {
    LexErrorKind kind = LexErrorKind::UnterminatedComment;
    SourceSpan span;
    std::string message;
};

struct LexResult {
    std::vector<Token> tokens;
    std::optional<LexError> error; // set => lexing aborted, file must be excluded
};

// Tokenizes Java source text. Comments and string/char literals are consumed
// and never produce tokens. Line/column are 1-based and attached to every
// token.
LexResult lex(const SourceFile& source);

} // namespace picip
