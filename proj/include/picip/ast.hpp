#pragma once

#include "picip/source.hpp"

#include <optional>
#include <string>
#include <vector>

namespace picip {

enum class Visibility { Public, Protected, Package, Private };

std::string_view to_string(Visibility v);

// One method signature. Parameter types are erased textual names: generic
// arguments stripped, array brackets preserved, varargs recorded as arrays.
struct MethodSig {
    std::string name;
    std::vector<std::string> param_type_texts;
    Visibility visibility = Visibility::Package;
    bool is_static = false;
    SourceSpan span;

    bool operator==(const MethodSig&) const = default;
};

// One class declaration. `inners` keeps member classes in source order;
// `extends_ref` is the superclass as written, dots kept, generics stripped.
struct ClassDecl {
    std::string simple_name;
    std::optional<std::string> extends_ref;
    std::vector<MethodSig> methods;
    std::vector<ClassDecl> inners;
    bool is_static_nested = false;
    SourceSpan span;

    bool operator==(const ClassDecl&) const = default;
};

} // namespace picip
