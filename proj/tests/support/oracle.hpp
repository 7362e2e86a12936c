#pragma once

// Brute-force oracles, independent of the implementations they check. Both
// work straight off the Internal super_ref edge relation.

#include "picip/class_graph.hpp"

#include <map>
#include <set>
#include <vector>

namespace picip::testing {

// Classes lying on a cycle of Internal super edges: plain DFS per start node.
inline std::set<ClassId> cycle_subjects_bruteforce(const ClassGraph& graph) {
    std::set<ClassId> subjects;
    for (ClassId start : graph.all()) {
        std::set<ClassId> seen;
        ClassId current = start;
        while (true) {
            const SuperRef& ref = graph.node(current).super_ref;
            if (ref.kind != SuperRef::Kind::Internal)
                break;
            current = ref.target;
            if (current == start) {
                subjects.insert(start);
                break;
            }
            if (!seen.insert(current).second)
                break;
        }
    }
    return subjects;
}

// Transitive subclass counts via reachability over reversed Internal edges,
// never counting the start class itself.
inline std::map<ClassId, int> tpc_bruteforce(const ClassGraph& graph) {
    std::map<ClassId, std::vector<ClassId>> reversed;
    for (ClassId id : graph.all()) {
        const SuperRef& ref = graph.node(id).super_ref;
        if (ref.kind == SuperRef::Kind::Internal)
            reversed[ref.target].push_back(id);
    }

    std::map<ClassId, int> counts;
    for (ClassId start : graph.all()) {
        std::set<ClassId> reached;
        std::vector<ClassId> stack = reversed[start];
        while (!stack.empty()) {
            ClassId current = stack.back();
            stack.pop_back();
            if (current == start || !reached.insert(current).second)
                continue;
            const std::vector<ClassId>& next = reversed[current];
            stack.insert(stack.end(), next.begin(), next.end());
        }
        counts[start] = static_cast<int>(reached.size());
    }
    return counts;
}

} // namespace picip::testing
