#pragma once

#include "picip/class_graph.hpp"
#include "picip/findings.hpp"

#include <array>
#include <optional>
#include <vector>

namespace picip {

// Per-class score: six presence bits, one per cause, summed to 0..6.
struct PicipScore {
    ClassId subject_id;
    QualifiedName subject;
    std::array<bool, 6> cause_bits{};
    int total = 0;
    std::vector<Finding> findings; // the findings supporting each set bit
};

struct MetricsRecord {
    ClassId subject_id;
    QualifiedName subject;
    std::optional<int> dit; // empty when the ancestry is cyclic
    int noc = 0;
    int tpc = 0;
    int tpac = 0;
    std::optional<int> tac; // equals dit under this tool's definitions
};

// Scores one top-level class by attributing every scored-cause finding whose
// subject lies in its nesting tree. Throws std::invalid_argument when the
// class is nested.
PicipScore score_picip(const ClassGraph& graph, const std::vector<Finding>& findings,
                       ClassId top_level);

// Same attribution rule rooted at an arbitrary class; nested classes can
// never collect C5/C6 bits because those findings target top-level subjects.
PicipScore score_class(const ClassGraph& graph, const std::vector<Finding>& findings, ClassId id);

// DIT counts explicit inheritance edges, with a terminal unresolved
// superclass contributing one edge; NOC/TPC count direct and transitive
// internal subclasses; TPAC is extends-clause presence.
MetricsRecord compute_metrics(const ClassGraph& graph, ClassId id);

// All top-level classes, ordered by file path then qualified name.
std::vector<PicipScore> score_all_top_level(const ClassGraph& graph,
                                            const std::vector<Finding>& findings);

} // namespace picip
