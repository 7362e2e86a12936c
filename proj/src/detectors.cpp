#include "picip/detectors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace picip {

namespace {

std::optional<ClassId> internal_super(const ClassGraph& graph, ClassId id) {
    const SuperRef& ref = graph.node(id).super_ref;
    if (ref.kind == SuperRef::Kind::Internal)
        return ref.target;
    return std::nullopt;
}

// True when following Internal super edges from `id` returns to `id`.
bool on_internal_cycle(const ClassGraph& graph, ClassId id) {
    std::set<ClassId> visited;
    std::optional<ClassId> current = internal_super(graph, id);
    while (current) {
        if (*current == id)
            return true;
        if (!visited.insert(*current).second)
            return false;
        current = internal_super(graph, *current);
    }
    return false;
}

// True when the resolved superclass is properly nested inside `id`.
bool extends_own_nested(const ClassGraph& graph, ClassId id) {
    std::optional<ClassId> super = internal_super(graph, id);
    if (!super || *super == id)
        return false;
    for (ClassId enclosing : enclosing_chain(graph, *super)) {
        if (enclosing == id)
            return true;
    }
    return false;
}

bool has_compiler_diagnostic(const ClassGraph& graph, ClassId id) {
    return on_internal_cycle(graph, id) || extends_own_nested(graph, id);
}

std::string quoted(const ClassGraph& graph, ClassId id) {
    return "'" + graph.node(id).name.display() + "'";
}

Finding make_finding(const ClassGraph& graph, CauseKind kind, ClassId subject,
                     std::vector<ClassId> related, SourceSpan span, std::string message) {
    Finding finding;
    finding.kind = kind;
    finding.subject_id = subject;
    finding.subject = graph.node(subject).name;
    for (ClassId id : related)
        finding.related.push_back(graph.node(id).name);
    finding.span = std::move(span);
    finding.message = std::move(message);
    return finding;
}

} // namespace

std::string_view to_string(CauseKind kind) {
    switch (kind) {
    case CauseKind::C1_InnerExtendsOuter: return "C1_InnerExtendsOuter";
    case CauseKind::C2_SuperInheritsOuter: return "C2_SuperInheritsOuter";
    case CauseKind::C3_InnerNameMatchesTopLevel: return "C3_InnerNameMatchesTopLevel";
    case CauseKind::C4_OverrideInCycle: return "C4_OverrideInCycle";
    case CauseKind::C5_DeepNesting: return "C5_DeepNesting";
    case CauseKind::C6_InheritanceAtOuterAndInner: return "C6_InheritanceAtOuterAndInner";
    case CauseKind::D_SelfOrChainCycle: return "D_SelfOrChainCycle";
    case CauseKind::D_ExtendsOwnNested: return "D_ExtendsOwnNested";
    }
    return "C1_InnerExtendsOuter";
}

std::optional<CauseKind> cause_kind_from_string(std::string_view text) {
    for (int i = 0; i <= static_cast<int>(CauseKind::D_ExtendsOwnNested); ++i) {
        CauseKind kind = static_cast<CauseKind>(i);
        if (to_string(kind) == text)
            return kind;
    }
    return std::nullopt;
}

void sort_findings(std::vector<Finding>& findings) {
    std::sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
        return std::tie(a.span.file, a.span.line, a.span.column, a.kind, a.subject) <
               std::tie(b.span.file, b.span.line, b.span.column, b.kind, b.subject);
    });
}

std::vector<Finding> detect_compiler_cycles(const ClassGraph& graph) {
    std::vector<Finding> findings;
    for (ClassId id : graph.all()) {
        const ClassNode& node = graph.node(id);
        if (on_internal_cycle(graph, id)) {
            std::ostringstream msg;
            msg << "class " << quoted(graph, id) << " is part of a cyclic inheritance chain: "
                << node.name.display();
            std::optional<ClassId> current = internal_super(graph, id);
            while (current) {
                msg << " -> " << graph.node(*current).name.display();
                if (*current == id)
                    break;
                current = internal_super(graph, *current);
            }
            findings.push_back(make_finding(graph, CauseKind::D_SelfOrChainCycle, id, {id},
                                            node.span, msg.str()));
        }
        if (extends_own_nested(graph, id)) {
            ClassId super = *internal_super(graph, id);
            std::ostringstream msg;
            msg << "class " << quoted(graph, id) << " extends its own nested class "
                << quoted(graph, super);
            findings.push_back(make_finding(graph, CauseKind::D_ExtendsOwnNested, id, {super},
                                            node.span, msg.str()));
        }
    }
    sort_findings(findings);
    return findings;
}

std::vector<Finding> detect_c1_inner_extends_outer(const ClassGraph& graph) {
    std::vector<Finding> findings;
    for (ClassId id : graph.all()) {
        const ClassNode& node = graph.node(id);
        if (!node.outer || has_compiler_diagnostic(graph, id))
            continue;
        std::optional<ClassId> super = internal_super(graph, id);
        if (!super)
            continue;
        std::vector<ClassId> enclosers = enclosing_chain(graph, id);
        auto it = std::find(enclosers.begin(), enclosers.end(), *super);
        if (it == enclosers.end())
            continue;
        std::size_t depth = static_cast<std::size_t>(it - enclosers.begin()) + 1;
        std::ostringstream msg;
        msg << "inner class " << quoted(graph, id) << " extends its enclosing class "
            << quoted(graph, *super);
        if (depth > 1)
            msg << " (" << depth << " levels out)";
        findings.push_back(
            make_finding(graph, CauseKind::C1_InnerExtendsOuter, id, {*super}, node.span,
                         msg.str()));
    }
    sort_findings(findings);
    return findings;
}

std::vector<Finding> detect_c2_super_inherits_outer(const ClassGraph& graph) {
    std::vector<Finding> findings;
    for (ClassId id : graph.all()) {
        const ClassNode& node = graph.node(id);
        if (!node.outer || has_compiler_diagnostic(graph, id))
            continue;
        std::optional<ClassId> super = internal_super(graph, id);
        if (!super)
            continue;
        std::vector<ClassId> enclosers = enclosing_chain(graph, id);
        if (std::find(enclosers.begin(), enclosers.end(), *super) != enclosers.end())
            continue; // C1 territory
        std::optional<ClassId> intersecting;
        for (ClassId ancestor : superclass_chain(graph, *super).classes) {
            if (std::find(enclosers.begin(), enclosers.end(), ancestor) != enclosers.end()) {
                intersecting = ancestor;
                break;
            }
        }
        if (!intersecting)
            continue;
        std::ostringstream msg;
        msg << "inner class " << quoted(graph, id) << " extends " << quoted(graph, *super)
            << ", which inherits from the enclosing class " << quoted(graph, *intersecting);
        findings.push_back(make_finding(graph, CauseKind::C2_SuperInheritsOuter, id,
                                        {*super, *intersecting}, node.span, msg.str()));
    }
    sort_findings(findings);
    return findings;
}

std::vector<Finding> detect_c3_name_collision(const ClassGraph& graph) {
    std::vector<Finding> findings;
    std::vector<ClassId> top = graph.top_level();
    for (ClassId id : graph.all()) {
        const ClassNode& node = graph.node(id);
        if (!node.outer)
            continue;
        std::vector<ClassId> matches;
        for (ClassId candidate : top) {
            if (graph.node(candidate).simple_name == node.simple_name)
                matches.push_back(candidate);
        }
        if (matches.empty())
            continue;
        std::ostringstream msg;
        msg << "inner class " << quoted(graph, id) << " has the same name as top-level class";
        if (matches.size() > 1)
            msg << "es";
        for (std::size_t i = 0; i < matches.size(); ++i)
            msg << (i ? ", " : " ") << quoted(graph, matches[i]) << " ("
                << graph.node(matches[i]).file << ")";
        findings.push_back(make_finding(graph, CauseKind::C3_InnerNameMatchesTopLevel, id,
                                        matches, node.span, msg.str()));
    }
    sort_findings(findings);
    return findings;
}

std::vector<Finding> detect_c4_override_in_cycle(const ClassGraph& graph,
                                                 const std::vector<Finding>& c1_and_c2_findings) {
    std::set<ClassId> subjects;
    for (const Finding& finding : c1_and_c2_findings) {
        if (finding.kind == CauseKind::C1_InnerExtendsOuter ||
            finding.kind == CauseKind::C2_SuperInheritsOuter)
            subjects.insert(finding.subject_id);
    }

    std::vector<Finding> findings;
    for (ClassId id : subjects) {
        const ClassNode& node = graph.node(id);
        std::vector<ClassId> chain = superclass_chain(graph, id).classes;
        bool reported = false;
        for (const MethodSig& method : node.methods) {
            if (reported)
                break;
            if (method.is_static)
                continue;
            for (ClassId ancestor : chain) {
                const ClassNode& ancestor_node = graph.node(ancestor);
                auto match = std::find_if(
                    ancestor_node.methods.begin(), ancestor_node.methods.end(),
                    [&](const MethodSig& candidate) {
                        return candidate.visibility != Visibility::Private &&
                               !candidate.is_static && candidate.name == method.name &&
                               candidate.param_type_texts == method.param_type_texts;
                    });
                if (match == ancestor_node.methods.end())
                    continue;
                std::ostringstream msg;
                msg << "method '" << method.name << "' in " << quoted(graph, id)
                    << " overrides a method of " << quoted(graph, ancestor)
                    << " inside a conceptual inheritance cycle";
                findings.push_back(make_finding(graph, CauseKind::C4_OverrideInCycle, id,
                                                {ancestor}, method.span, msg.str()));
                reported = true;
                break;
            }
        }
    }
    sort_findings(findings);
    return findings;
}

std::vector<Finding> detect_c5_deep_nesting(const ClassGraph& graph) {
    std::vector<Finding> findings;
    for (ClassId top : graph.top_level()) {
        int max_depth = 0;
        std::vector<ClassId> deepest;
        std::vector<std::pair<ClassId, int>> stack{{top, 0}};
        while (!stack.empty()) {
            auto [id, depth] = stack.back();
            stack.pop_back();
            if (depth > max_depth) {
                max_depth = depth;
                deepest.clear();
            }
            if (depth == max_depth && depth > 0)
                deepest.push_back(id);
            const ClassNode& node = graph.node(id);
            for (auto it = node.members.rbegin(); it != node.members.rend(); ++it)
                stack.push_back({*it, depth + 1});
        }
        if (max_depth < 2)
            continue;
        std::sort(deepest.begin(), deepest.end());
        std::ostringstream msg;
        msg << "class " << quoted(graph, top) << " nests inner classes " << max_depth
            << " levels deep:";
        for (std::size_t i = 0; i < deepest.size(); ++i)
            msg << (i ? ", " : " ") << graph.node(deepest[i]).name.display();
        findings.push_back(make_finding(graph, CauseKind::C5_DeepNesting, top, deepest,
                                        graph.node(top).span, msg.str()));
    }
    sort_findings(findings);
    return findings;
}

std::vector<Finding> detect_c6_dual_inheritance(const ClassGraph& graph) {
    std::vector<Finding> findings;
    for (ClassId top : graph.top_level()) {
        if (!graph.node(top).extends_ref)
            continue;
        std::vector<ClassId> inheriting_inners;
        std::vector<ClassId> stack = graph.node(top).members;
        std::reverse(stack.begin(), stack.end());
        while (!stack.empty()) {
            ClassId id = stack.back();
            stack.pop_back();
            if (graph.node(id).extends_ref)
                inheriting_inners.push_back(id);
            const ClassNode& node = graph.node(id);
            for (auto it = node.members.rbegin(); it != node.members.rend(); ++it)
                stack.push_back(*it);
        }
        if (inheriting_inners.empty())
            continue;
        std::ostringstream msg;
        msg << "class " << quoted(graph, top)
            << " uses inheritance at both the outer and the inner level:";
        for (std::size_t i = 0; i < inheriting_inners.size(); ++i)
            msg << (i ? ", " : " ") << graph.node(inheriting_inners[i]).name.display();
        findings.push_back(make_finding(graph, CauseKind::C6_InheritanceAtOuterAndInner, top,
                                        inheriting_inners, graph.node(top).span, msg.str()));
    }
    sort_findings(findings);
    return findings;
}

std::vector<Finding> detect_all(const ClassGraph& graph) {
    std::vector<Finding> findings = detect_compiler_cycles(graph);

    std::vector<Finding> c1 = detect_c1_inner_extends_outer(graph);
    std::vector<Finding> c2 = detect_c2_super_inherits_outer(graph);
    std::vector<Finding> c1_and_c2 = c1;
    c1_and_c2.insert(c1_and_c2.end(), c2.begin(), c2.end());
    std::vector<Finding> c4 = detect_c4_override_in_cycle(graph, c1_and_c2);

    auto append = [&](std::vector<Finding>&& more) {
        findings.insert(findings.end(), std::make_move_iterator(more.begin()),
                        std::make_move_iterator(more.end()));
    };
    append(std::move(c1));
    append(std::move(c2));
    append(detect_c3_name_collision(graph));
    append(std::move(c4));
    append(detect_c5_deep_nesting(graph));
    append(detect_c6_dual_inheritance(graph));

    sort_findings(findings);
    return findings;
}

} // namespace picip
