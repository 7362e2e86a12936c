#include "picip/class_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace picip {

namespace {

std::vector<std::string> split_dotted(const std::string& raw) {
    std::vector<std::string> segments;
    std::string current;
    for (char c : raw) {
        if (c == '.') {
            segments.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    segments.push_back(current);
    return segments;
}

} // namespace

std::string QualifiedName::display() const {
    std::string out;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i)
            out += '.';
        out += segments[i];
    }
    return out;
}

std::vector<ClassId> ClassGraph::all() const {
    std::vector<ClassId> ids;
    ids.reserve(nodes_.size());
    for (std::uint32_t i = 0; i < nodes_.size(); ++i)
        ids.push_back(ClassId{i});
    return ids;
}

std::vector<ClassId> ClassGraph::top_level() const {
    std::vector<ClassId> ids;
    for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
        if (!nodes_[i].outer)
            ids.push_back(ClassId{i});
    }
    return ids;
}

std::optional<ClassId> ClassGraph::find(const std::string& qualified) const {
    auto it = by_display_.find(qualified);
    if (it == by_display_.end() || it->second.empty())
        return std::nullopt;
    return it->second.front();
}

std::vector<ClassId> ClassGraph::find_all(const std::string& qualified) const {
    auto it = by_display_.find(qualified);
    return it == by_display_.end() ? std::vector<ClassId>{} : it->second;
}

std::vector<ClassId> enclosing_chain(const ClassGraph& graph, ClassId id) {
    std::vector<ClassId> chain;
    std::optional<ClassId> outer = graph.node(id).outer;
    while (outer) {
        chain.push_back(*outer);
        outer = graph.node(*outer).outer;
    }
    return chain;
}

SuperChain superclass_chain(const ClassGraph& graph, ClassId id) {
    SuperChain chain;
    std::set<ClassId> seen{id};
    const SuperRef* ref = &graph.node(id).super_ref;
    while (ref->kind == SuperRef::Kind::Internal) {
        ClassId current = ref->target;
        chain.classes.push_back(current);
        if (seen.count(current)) {
            chain.cyclic = true;
            break;
        }
        seen.insert(current);
        ref = &graph.node(current).super_ref;
    }
    return chain;
}

SuperRef resolve_superclass(const ClassGraph& graph, ClassId id) {
    const ClassNode& node = graph.node(id);
    SuperRef ref;
    if (!node.extends_ref)
        return ref;
    ref.raw = *node.extends_ref;
    ref.kind = SuperRef::Kind::External;

    const std::vector<std::string> segments = split_dotted(ref.raw);
    const std::string& head = segments.front();

    auto member_named = [&](ClassId owner, const std::string& name) -> std::optional<ClassId> {
        for (ClassId member : graph.node(owner).members) {
            if (graph.node(member).simple_name == name)
                return member;
        }
        return std::nullopt;
    };

    // Head segment lookup, nearest scope first.
    std::vector<ClassId> head_candidates;
    if (node.simple_name == head) {
        head_candidates.push_back(id);
    } else if (auto own_member = member_named(id, head)) {
        head_candidates.push_back(*own_member);
    }
    if (head_candidates.empty()) {
        for (ClassId enclosing : enclosing_chain(graph, id)) {
            if (graph.node(enclosing).simple_name == head) {
                head_candidates.push_back(enclosing);
                break;
            }
            if (auto member = member_named(enclosing, head)) {
                head_candidates.push_back(*member);
                break;
            }
        }
    }
    if (head_candidates.empty()) {
        auto it = graph.top_by_file_.find(node.file);
        if (it != graph.top_by_file_.end()) {
            for (ClassId top : it->second) {
                if (graph.node(top).simple_name == head) {
                    head_candidates.push_back(top);
                    break;
                }
            }
        }
    }
    bool ambiguous = false;
    if (head_candidates.empty()) {
        auto it = graph.top_by_simple_.find(head);
        if (it != graph.top_by_simple_.end())
            head_candidates = it->second; // already ordered by file path
        ambiguous = head_candidates.size() > 1;
    }
    if (head_candidates.empty())
        return ref; // External

    // Remaining segments navigate member classes of the resolved head; any
    // failure downgrades to External.
    ClassId current = head_candidates.front();
    for (std::size_t i = 1; i < segments.size(); ++i) {
        auto member = member_named(current, segments[i]);
        if (!member)
            return ref; // External
        current = *member;
    }

    ref.target = current;
    if (ambiguous) {
        ref.kind = SuperRef::Kind::Ambiguous;
        ref.candidates = head_candidates;
    } else {
        ref.kind = SuperRef::Kind::Internal;
    }
    return ref;
}

namespace {

void add_class(std::vector<ClassNode>& nodes, const ClassDecl& decl, const std::string& file,
               std::optional<ClassId> outer, const QualifiedName& outer_name) {
    ClassId id{static_cast<std::uint32_t>(nodes.size())};
    ClassNode node;
    node.name = outer_name;
    node.name.segments.push_back(decl.simple_name);
    node.file = file;
    node.span = decl.span;
    node.simple_name = decl.simple_name;
    node.extends_ref = decl.extends_ref;
    node.methods = decl.methods;
    node.is_static_nested = decl.is_static_nested;
    node.outer = outer;
    nodes.push_back(std::move(node));
    if (outer)
        nodes[outer->index].members.push_back(id);

    for (const ClassDecl& inner : decl.inners)
        add_class(nodes, inner, file, id, nodes[id.index].name);
}

} // namespace

ClassGraph build_graph(std::vector<ParsedFile> files) {
    std::sort(files.begin(), files.end(),
              [](const ParsedFile& a, const ParsedFile& b) { return a.path < b.path; });

    ClassGraph graph;
    for (const ParsedFile& file : files) {
        for (const ClassDecl& decl : file.classes)
            add_class(graph.nodes_, decl, file.path, std::nullopt, QualifiedName{});
    }

    for (std::uint32_t i = 0; i < graph.nodes_.size(); ++i) {
        ClassId id{i};
        const ClassNode& node = graph.nodes_[i];
        graph.by_display_[node.name.display()].push_back(id);
        if (!node.outer) {
            graph.top_by_simple_[node.simple_name].push_back(id);
            graph.top_by_file_[node.file].push_back(id);
        }
    }

    for (const auto& [simple, ids] : graph.top_by_simple_) {
        if (ids.size() < 2)
            continue;
        std::ostringstream msg;
        msg << "duplicate top-level class '" << simple << "' declared in ";
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i)
                msg << ", ";
            msg << graph.nodes_[ids[i].index].file;
        }
        graph.warnings_.push_back({GraphWarning::Kind::DuplicateTopLevel,
                                   graph.nodes_[ids.front().index].span, msg.str()});
    }

    for (std::uint32_t i = 0; i < graph.nodes_.size(); ++i) {
        ClassId id{i};
        ClassNode& node = graph.nodes_[i];
        node.super_ref = resolve_superclass(graph, id);
        if (node.super_ref.kind == SuperRef::Kind::Ambiguous) {
            std::ostringstream msg;
            msg << "'" << node.name.display() << "' extends '" << node.super_ref.raw
                << "' which matches top-level classes in ";
            for (std::size_t c = 0; c < node.super_ref.candidates.size(); ++c) {
                if (c)
                    msg << ", ";
                msg << graph.nodes_[node.super_ref.candidates[c].index].file;
            }
            msg << "; chose "
                << graph.nodes_[node.super_ref.candidates.front().index].file;
            graph.warnings_.push_back(
                {GraphWarning::Kind::AmbiguousSuperclass, node.span, msg.str()});
        }
    }

    for (std::uint32_t i = 0; i < graph.nodes_.size(); ++i) {
        const ClassNode& node = graph.nodes_[i];
        if (node.super_ref.kind == SuperRef::Kind::Internal)
            graph.nodes_[node.super_ref.target.index].subclasses.push_back(ClassId{i});
    }

    return graph;
}

} // namespace picip
