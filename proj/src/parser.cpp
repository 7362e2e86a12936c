#include "picip/parser.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <utility>

namespace picip {

namespace {

constexpr std::array<std::string_view, 8> kModifierIdents = {
    "final", "abstract", "synchronized", "native",
    "strictfp", "default", "transient", "volatile",
};

bool is_modifier_ident(const Token& tok) {
    if (tok.kind != TokenKind::Identifier)
        return false;
    return std::find(kModifierIdents.begin(), kModifierIdents.end(), tok.text) !=
           kModifierIdents.end();
}

bool is_modifier_keyword(const Token& tok) {
    return is_keyword(tok, "public") || is_keyword(tok, "protected") ||
           is_keyword(tok, "private") || is_keyword(tok, "static");
}

struct ParseAbort {
    ParseError error;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ParseResult parse() {
        ParseResult result;
        try {
            parse_top_level(result);
        } catch (const ParseAbort& abort) {
            result.classes.clear();
            result.notes.clear();
            result.error = abort.error;
        }
        return result;
    }

private:
    // ---- cursor -----------------------------------------------------------

    bool at_end() const { return pos_ >= tokens_.size(); }
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    [[noreturn]] void fail(SourceSpan span, std::string message) {
        throw ParseAbort{ParseError{std::move(span), std::move(message)}};
    }

    // ---- unit level -------------------------------------------------------

    void parse_top_level(ParseResult& result) {
        std::vector<Token> pending; // modifiers/annotations before a declaration
        while (!at_end()) {
            const Token& tok = peek();
            if (is_keyword(tok, "package") || is_keyword(tok, "import")) {
                next();
                skip_past_semicolon();
                pending.clear();
            } else if (is_keyword(tok, "class")) {
                result.classes.push_back(parse_class(result, pending));
                pending.clear();
            } else if (is_keyword(tok, "interface") || is_keyword(tok, "enum")) {
                skip_type_declaration(result, pending);
                pending.clear();
            } else if (is_punct(tok, '{')) {
                skip_balanced_braces();
                pending.clear();
            } else if (is_punct(tok, '}')) {
                fail(tok.span, "unbalanced braces: unexpected '}' at top level");
            } else if (is_punct(tok, ';')) {
                next();
                pending.clear();
            } else {
                pending.push_back(next());
            }
        }
    }

    // Consumes an interface/enum/annotation-type declaration whole and
    // records a note naming it.
    void skip_type_declaration(ParseResult& result, const std::vector<Token>& pending) {
        const Token decl = next(); // 'interface' or 'enum'
        std::string_view what = decl.text;
        if (what == "interface" && !pending.empty() && pending.back().kind == TokenKind::Other &&
            pending.back().text == "@") {
            what = "annotation type";
        }
        std::string name = "<anonymous>";
        if (!at_end() && peek().kind == TokenKind::Identifier)
            name = peek().text;
        std::string note = "skipped " + std::string(what) + " '" + name + "'";
        note += " at line " + std::to_string(decl.span.line);
        result.notes.push_back(std::move(note));
        while (!at_end() && !is_punct(peek(), '{'))
            next();
        if (at_end())
            fail(decl.span, "unbalanced braces: missing body for '" + decl.text + "'");
        skip_balanced_braces();
    }

    // ---- class declarations -----------------------------------------------

    ClassDecl parse_class(ParseResult& result, const std::vector<Token>& pending) {
        const Token class_kw = next();
        ClassDecl decl;
        decl.span = class_kw.span;
        decl.is_static_nested = std::any_of(pending.begin(), pending.end(), [](const Token& t) {
            return is_keyword(t, "static");
        });

        if (at_end() || peek().kind != TokenKind::Identifier)
            fail(class_kw.span, "class keyword without identifier");
        decl.simple_name = next().text;

        if (!at_end() && is_punct(peek(), '<'))
            skip_balanced_angles();

        if (!at_end() && is_keyword(peek(), "extends"))
            decl.extends_ref = parse_extends_ref();

        // implements clauses, permits lists and similar are consumed here.
        while (!at_end() && !is_punct(peek(), '{')) {
            const Token& tok = peek();
            if (is_punct(tok, ';') || is_punct(tok, '}'))
                fail(tok.span, "expected class body for '" + decl.simple_name + "'");
            if (is_punct(tok, '<')) {
                skip_balanced_angles();
                continue;
            }
            next();
        }
        if (at_end())
            fail(class_kw.span, "expected class body for '" + decl.simple_name + "'");

        next(); // '{'
        parse_class_body(result, decl);
        return decl;
    }

    std::string parse_extends_ref() {
        const Token extends_kw = next();
        while (!at_end() && peek().kind == TokenKind::Other && peek().text == "@") {
            next(); // type annotation
            if (!at_end() && peek().kind == TokenKind::Identifier)
                next();
            if (!at_end() && is_punct(peek(), '('))
                skip_balanced_parens();
        }
        if (at_end() || peek().kind != TokenKind::Identifier)
            fail(extends_kw.span, "expected superclass name after 'extends'");
        std::string ref = next().text;
        while (!at_end()) {
            if (is_punct(peek(), '<')) {
                skip_balanced_angles();
                continue;
            }
            if (is_punct(peek(), '.') && pos_ + 1 < tokens_.size() &&
                tokens_[pos_ + 1].kind == TokenKind::Identifier) {
                next();
                ref += '.';
                ref += next().text;
                continue;
            }
            break;
        }
        return ref;
    }

    // Walks one class body. Member tokens are buffered until a structural
    // boundary decides what they were: a nested class, a method signature, a
    // field, or an initializer block.
    void parse_class_body(ParseResult& result, ClassDecl& decl) {
        std::vector<Token> buffer;
        int paren_depth = 0;
        while (!at_end()) {
            const Token& tok = peek();
            if (is_keyword(tok, "class") && paren_depth == 0) {
                decl.inners.push_back(parse_class(result, buffer));
                buffer.clear();
            } else if ((is_keyword(tok, "interface") || is_keyword(tok, "enum")) &&
                       paren_depth == 0) {
                skip_type_declaration(result, buffer);
                buffer.clear();
            } else if (tok.kind == TokenKind::Other && tok.text == "=" && paren_depth == 0) {
                next();
                skip_initializer();
                buffer.clear();
            } else if (is_punct(tok, '(')) {
                ++paren_depth;
                buffer.push_back(next());
            } else if (is_punct(tok, ')')) {
                if (paren_depth > 0)
                    --paren_depth;
                buffer.push_back(next());
            } else if (is_punct(tok, '{')) {
                if (paren_depth > 0) {
                    skip_balanced_braces(); // array-valued annotation argument
                    continue;
                }
                std::optional<MethodSig> method = try_parse_method(buffer);
                skip_balanced_braces(); // method body or initializer block
                if (method)
                    decl.methods.push_back(std::move(*method));
                buffer.clear();
            } else if (is_punct(tok, ';') && paren_depth == 0) {
                next();
                std::optional<MethodSig> method = try_parse_method(buffer);
                if (method)
                    decl.methods.push_back(std::move(*method)); // abstract/native declaration
                buffer.clear();
            } else if (is_punct(tok, '}') && paren_depth == 0) {
                next();
                return;
            } else {
                buffer.push_back(next());
            }
        }
        fail(decl.span, "unbalanced braces in class '" + decl.simple_name + "'");
    }

    // ---- balanced skipping --------------------------------------------------

    void skip_past_semicolon() {
        while (!at_end()) {
            if (is_punct(peek(), ';')) {
                next();
                return;
            }
            next();
        }
    }

    void skip_balanced_braces() {
        const Token open = next(); // '{'
        int depth = 1;
        while (!at_end()) {
            const Token& tok = next();
            if (is_punct(tok, '{'))
                ++depth;
            else if (is_punct(tok, '}') && --depth == 0)
                return;
        }
        fail(open.span, "unbalanced braces");
    }

    void skip_balanced_angles() {
        const Token open = next(); // '<'
        int depth = 1;
        while (!at_end()) {
            const Token& tok = next();
            if (is_punct(tok, '<'))
                ++depth;
            else if (is_punct(tok, '>') && --depth == 0)
                return;
        }
        fail(open.span, "unterminated generic parameter list");
    }

    void skip_balanced_parens() {
        const Token open = next(); // '('
        int depth = 1;
        while (!at_end()) {
            const Token& tok = next();
            if (is_punct(tok, '('))
                ++depth;
            else if (is_punct(tok, ')') && --depth == 0)
                return;
        }
        fail(open.span, "unbalanced parentheses");
    }

    // Skips a field initializer through the terminating ';', balancing
    // parens, braces and brackets so array initializers, lambdas and
    // anonymous classes are consumed whole.
    void skip_initializer() {
        int parens = 0, braces = 0, brackets = 0;
        while (!at_end()) {
            const Token& tok = next();
            if (is_punct(tok, '('))
                ++parens;
            else if (is_punct(tok, ')'))
                --parens;
            else if (is_punct(tok, '{'))
                ++braces;
            else if (is_punct(tok, '}'))
                --braces;
            else if (is_punct(tok, '['))
                ++brackets;
            else if (is_punct(tok, ']'))
                --brackets;
            else if (is_punct(tok, ';') && parens <= 0 && braces <= 0 && brackets <= 0)
                return;
        }
        // EOF inside an initializer surfaces as unbalanced braces upstream.
    }

    // ---- method signature recovery ------------------------------------------

    // Removes `@Name` and `@Name(...)` sequences.
    static std::vector<Token> strip_annotations(const std::vector<Token>& tokens) {
        std::vector<Token> out;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (tokens[i].kind == TokenKind::Other && tokens[i].text == "@") {
                if (i + 1 < tokens.size() && tokens[i + 1].kind == TokenKind::Identifier) {
                    ++i;
                    if (i + 1 < tokens.size() && is_punct(tokens[i + 1], '(')) {
                        int depth = 0;
                        ++i;
                        for (; i < tokens.size(); ++i) {
                            if (is_punct(tokens[i], '('))
                                ++depth;
                            else if (is_punct(tokens[i], ')') && --depth == 0)
                                break;
                        }
                    }
                }
                continue;
            }
            out.push_back(tokens[i]);
        }
        return out;
    }

    // Removes balanced `<...>` groups (type parameters and generic arguments).
    static std::vector<Token> strip_generics(const std::vector<Token>& tokens) {
        std::vector<Token> out;
        int depth = 0;
        for (const Token& tok : tokens) {
            if (is_punct(tok, '<')) {
                ++depth;
                continue;
            }
            if (is_punct(tok, '>')) {
                if (depth > 0)
                    --depth;
                continue;
            }
            if (depth == 0)
                out.push_back(tok);
        }
        return out;
    }

    // Decides whether the buffered tokens form a method signature. A method
    // has a parenthesized parameter list, a name identifier directly before
    // it, and at least one return-type token once modifiers are removed;
    // constructors fail the last test and are dropped.
    static std::optional<MethodSig> try_parse_method(const std::vector<Token>& raw) {
        std::vector<Token> tokens = strip_generics(strip_annotations(raw));

        std::size_t lparen = tokens.size();
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (is_punct(tokens[i], '(')) {
                lparen = i;
                break;
            }
        }
        if (lparen == tokens.size() || lparen == 0)
            return std::nullopt;
        const Token& name_tok = tokens[lparen - 1];
        if (name_tok.kind != TokenKind::Identifier)
            return std::nullopt;

        std::size_t rparen = tokens.size();
        int depth = 0;
        for (std::size_t i = lparen; i < tokens.size(); ++i) {
            if (is_punct(tokens[i], '('))
                ++depth;
            else if (is_punct(tokens[i], ')') && --depth == 0) {
                rparen = i;
                break;
            }
        }
        if (rparen == tokens.size())
            return std::nullopt;

        MethodSig sig;
        sig.name = name_tok.text;
        sig.span = name_tok.span;
        bool has_return_type = false;
        for (std::size_t i = 0; i + 1 < lparen; ++i) {
            const Token& tok = tokens[i];
            if (is_keyword(tok, "public"))
                sig.visibility = Visibility::Public;
            else if (is_keyword(tok, "protected"))
                sig.visibility = Visibility::Protected;
            else if (is_keyword(tok, "private"))
                sig.visibility = Visibility::Private;
            else if (is_keyword(tok, "static"))
                sig.is_static = true;
            else if (!is_modifier_ident(tok))
                has_return_type = true;
        }
        if (!has_return_type)
            return std::nullopt; // constructor or malformed member

        sig.param_type_texts = parse_param_types(tokens, lparen + 1, rparen);
        return sig;
    }

    // Parameter list between tokens[begin, end), generics already stripped.
    static std::vector<std::string> parse_param_types(const std::vector<Token>& tokens,
                                                      std::size_t begin, std::size_t end) {
        std::vector<std::string> types;
        std::vector<Token> group;
        int depth = 0;
        auto flush = [&]() {
            if (!group.empty()) {
                std::string text = param_type_text(group);
                if (!text.empty())
                    types.push_back(std::move(text));
            }
            group.clear();
        };
        for (std::size_t i = begin; i < end; ++i) {
            const Token& tok = tokens[i];
            if (is_punct(tok, '('))
                ++depth;
            else if (is_punct(tok, ')'))
                --depth;
            if (depth == 0 && is_punct(tok, ',')) {
                flush();
                continue;
            }
            group.push_back(tok);
        }
        flush();
        return types;
    }

    // One parameter group -> erased type text. The trailing identifier is the
    // parameter name; dots join qualified names, brackets are kept, varargs
    // `...` erase to `[]`.
    static std::string param_type_text(const std::vector<Token>& group) {
        std::vector<Token> tokens;
        for (const Token& tok : group) {
            if (is_modifier_ident(tok) || is_modifier_keyword(tok))
                continue;
            tokens.push_back(tok);
        }

        std::size_t name_index = tokens.size();
        for (std::size_t i = tokens.size(); i-- > 0;) {
            if (tokens[i].kind == TokenKind::Identifier) {
                bool qualifier = i + 1 < tokens.size() && is_punct(tokens[i + 1], '.');
                if (!qualifier) {
                    name_index = i;
                    break;
                }
            }
        }

        std::string text;
        bool varargs = false;
        int pending_dots = 0;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (i == name_index)
                continue;
            const Token& tok = tokens[i];
            if (is_punct(tok, '.')) {
                ++pending_dots;
                if (pending_dots == 3) {
                    varargs = true;
                    pending_dots = 0;
                }
                continue;
            }
            if (pending_dots == 1 && !text.empty())
                text += '.';
            pending_dots = 0;
            if (is_punct(tok, '[') || is_punct(tok, ']')) {
                text += tok.text;
                continue;
            }
            text += tok.text;
        }
        if (varargs)
            text += "[]";
        return text;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

std::string_view to_string(Visibility v) {
    switch (v) {
    case Visibility::Public: return "public";
    case Visibility::Protected: return "protected";
    case Visibility::Package: return "package";
    case Visibility::Private: return "private";
    }
    return "package";
}

ParseResult parse_unit(const SourceFile& source) {
    LexResult lexed = lex(source);
    if (lexed.error) {
        ParseResult result;
        result.error = ParseError{lexed.error->span, lexed.error->message};
        return result;
    }
    return Parser(std::move(lexed.tokens)).parse();
}

} // namespace picip
