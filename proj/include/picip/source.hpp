#pragma once

#include <compare>
#include <string>

namespace picip {

// One input file: a path unique within the analysis run plus its full
// UTF-8 text.
struct SourceFile {
    std::string path;
    std::string text;
};

// 1-based position inside a file.
struct SourceSpan {
    std::string file;
    int line = 1;
    int column = 1;

    auto operator<=>(const SourceSpan&) const = default;
};

} // namespace picip
