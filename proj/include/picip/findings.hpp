#pragma once

#include "picip/class_graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace picip {

// C1..C6 are the six scored causes, in table order. D_* are the
// compiler-detectable cyclic-inheritance diagnostics; they never score.
enum class CauseKind {
    C1_InnerExtendsOuter,
    C2_SuperInheritsOuter,
    C3_InnerNameMatchesTopLevel,
    C4_OverrideInCycle,
    C5_DeepNesting,
    C6_InheritanceAtOuterAndInner,
    D_SelfOrChainCycle,
    D_ExtendsOwnNested,
};

std::string_view to_string(CauseKind kind);
std::optional<CauseKind> cause_kind_from_string(std::string_view text);

inline bool is_scored_cause(CauseKind kind) { return kind <= CauseKind::C6_InheritanceAtOuterAndInner; }
inline bool is_compiler_diagnostic(CauseKind kind) { return !is_scored_cause(kind); }

// 0..5 for C1..C6; callers must not pass D_* kinds.
inline int cause_index(CauseKind kind) { return static_cast<int>(kind); }

// One detected occurrence, attributed to a subject class.
struct Finding {
    CauseKind kind = CauseKind::C1_InnerExtendsOuter;
    ClassId subject_id;
    QualifiedName subject;
    std::vector<QualifiedName> related;
    SourceSpan span;
    std::string message;
};

} // namespace picip
