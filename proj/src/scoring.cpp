#include "picip/scoring.hpp"

#include "picip/detectors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace picip {

namespace {

bool within_tree(const ClassGraph& graph, ClassId id, ClassId root) {
    if (id == root)
        return true;
    std::vector<ClassId> enclosers = enclosing_chain(graph, id);
    return std::find(enclosers.begin(), enclosers.end(), root) != enclosers.end();
}

} // namespace

PicipScore score_class(const ClassGraph& graph, const std::vector<Finding>& findings,
                       ClassId id) {
    PicipScore score;
    score.subject_id = id;
    score.subject = graph.node(id).name;
    for (const Finding& finding : findings) {
        if (!is_scored_cause(finding.kind))
            continue;
        if (!within_tree(graph, finding.subject_id, id))
            continue;
        score.cause_bits[cause_index(finding.kind)] = true;
        score.findings.push_back(finding);
    }
    score.total = static_cast<int>(std::count(score.cause_bits.begin(), score.cause_bits.end(), true));
    return score;
}

PicipScore score_picip(const ClassGraph& graph, const std::vector<Finding>& findings,
                       ClassId top_level) {
    if (graph.node(top_level).outer) {
        throw std::invalid_argument("NotTopLevel: '" + graph.node(top_level).name.display() +
                                    "' is a nested class");
    }
    return score_class(graph, findings, top_level);
}

MetricsRecord compute_metrics(const ClassGraph& graph, ClassId id) {
    const ClassNode& node = graph.node(id);
    MetricsRecord record;
    record.subject_id = id;
    record.subject = node.name;

    SuperChain chain = superclass_chain(graph, id);
    if (chain.cyclic) {
        record.dit = std::nullopt;
        record.tac = std::nullopt;
    } else {
        int depth = static_cast<int>(chain.classes.size());
        const ClassNode& terminal = chain.classes.empty()
                                        ? node
                                        : graph.node(chain.classes.back());
        SuperRef::Kind kind = terminal.super_ref.kind;
        if (kind == SuperRef::Kind::External || kind == SuperRef::Kind::Ambiguous)
            ++depth; // one explicit edge leaving the corpus
        record.dit = depth;
        record.tac = depth;
    }

    // A self-extending class is not its own child; keeps noc <= tpc.
    record.noc = static_cast<int>(
        std::count_if(node.subclasses.begin(), node.subclasses.end(),
                      [&](ClassId sub) { return sub != id; }));

    std::set<ClassId> reached;
    std::vector<ClassId> stack = node.subclasses;
    while (!stack.empty()) {
        ClassId current = stack.back();
        stack.pop_back();
        if (current == id || !reached.insert(current).second)
            continue;
        const std::vector<ClassId>& next = graph.node(current).subclasses;
        stack.insert(stack.end(), next.begin(), next.end());
    }
    record.tpc = static_cast<int>(reached.size());

    record.tpac = node.extends_ref ? 1 : 0;
    return record;
}

std::vector<PicipScore> score_all_top_level(const ClassGraph& graph,
                                            const std::vector<Finding>& findings) {
    std::vector<ClassId> roots = graph.top_level();
    std::sort(roots.begin(), roots.end(), [&](ClassId a, ClassId b) {
        return std::tie(graph.node(a).file, graph.node(a).name) <
               std::tie(graph.node(b).file, graph.node(b).name);
    });
    std::vector<PicipScore> scores;
    scores.reserve(roots.size());
    for (ClassId root : roots)
        scores.push_back(score_picip(graph, findings, root));
    return scores;
}

} // namespace picip
