#pragma once

#include "picip/ast.hpp"
#include "picip/lexer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace picip {

struct ParseError {
    SourceSpan span;
    std::string message;
};

struct ParseResult {
    std::vector<ClassDecl> classes;  // top-level class declarations
    std::vector<std::string> notes;  // skipped interface/enum declarations
    std::optional<ParseError> error; // set => classes empty, file excluded
};

// Recovers class nesting, extends clauses and method signatures from a
// pragmatic Java subset. Method bodies and field initializers are skipped by
// balanced matching, so local and anonymous classes are never recorded.
// Interface and enum declarations are skipped whole and surfaced as notes.
ParseResult parse_unit(const SourceFile& source);

} // namespace picip
