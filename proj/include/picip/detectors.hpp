#pragma once

#include "picip/class_graph.hpp"
#include "picip/findings.hpp"

#include <vector>

namespace picip {

// Cyclic inheritance the Java compiler itself rejects: classes on a cycle of
// Internal super_ref edges, and classes extending one of their own nested
// classes. One finding per participating class.
std::vector<Finding> detect_compiler_cycles(const ClassGraph& graph);

// C1: a nested class whose superclass is one of its enclosing classes.
std::vector<Finding> detect_c1_inner_extends_outer(const ClassGraph& graph);

// C2: a nested class whose superclass (not itself an encloser) inherits from
// one of the subject's enclosing classes.
std::vector<Finding> detect_c2_super_inherits_outer(const ClassGraph& graph);

// C3: a nested class sharing its simple name with a top-level class.
std::vector<Finding> detect_c3_name_collision(const ClassGraph& graph);

// C4: a C1/C2 subject declaring an instance method that matches a
// non-private, non-static method on its superclass chain.
std::vector<Finding> detect_c4_override_in_cycle(const ClassGraph& graph,
                                                 const std::vector<Finding>& c1_and_c2_findings);

// C5: a top-level class nesting classes two or more levels deep.
std::vector<Finding> detect_c5_deep_nesting(const ClassGraph& graph);

// C6: a top-level class with an extends clause containing a nested class
// that also has one.
std::vector<Finding> detect_c6_dual_inheritance(const ClassGraph& graph);

// Runs every detector and returns one merged, deterministically ordered list
// (file path, then span, then kind).
std::vector<Finding> detect_all(const ClassGraph& graph);

void sort_findings(std::vector<Finding>& findings);

} // namespace picip
