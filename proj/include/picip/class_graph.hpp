#pragma once

#include "picip/ast.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace picip {

// Dense handle to a class inside one ClassGraph. Ids are only meaningful for
// the graph that issued them.
struct ClassId {
    std::uint32_t index = UINT32_MAX;

    bool valid() const { return index != UINT32_MAX; }
    auto operator<=>(const ClassId&) const = default;
};

struct QualifiedName {
    std::vector<std::string> segments; // top-level class first

    std::string display() const; // dot-joined
    auto operator<=>(const QualifiedName&) const = default;
};

// Result of resolving an extends clause against the corpus.
struct SuperRef {
    enum class Kind { None, Internal, External, Ambiguous };

    Kind kind = Kind::None;
    ClassId target;                  // Internal target, or Ambiguous choice
    std::vector<ClassId> candidates; // Ambiguous only, ordered by file path
    std::string raw;                 // extends text as written (empty for None)
};

struct GraphWarning {
    enum class Kind { DuplicateTopLevel, AmbiguousSuperclass };

    Kind kind = Kind::DuplicateTopLevel;
    SourceSpan span;
    std::string message;
};

struct ClassNode {
    QualifiedName name;
    std::string file;
    SourceSpan span;
    std::string simple_name;
    std::optional<std::string> extends_ref;
    std::vector<MethodSig> methods;
    bool is_static_nested = false;
    std::optional<ClassId> outer;
    std::vector<ClassId> members;    // immediate nested classes, source order
    SuperRef super_ref;
    std::vector<ClassId> subclasses; // exact inverse of Internal super_refs
};

// Ancestor walk along Internal super_refs. The walk stops at External, None
// or Ambiguous references and halts on the first revisited class, flagging
// the chain cyclic.
struct SuperChain {
    std::vector<ClassId> classes;
    bool cyclic = false;
};

struct ParsedFile {
    std::string path;
    std::vector<ClassDecl> classes;
};

// Corpus-wide immutable index of classes: containment forest, qualified
// names, resolved superclass references and subclass lists. Safe for
// concurrent readers once built.
class ClassGraph {
public:
    const ClassNode& node(ClassId id) const { return nodes_[id.index]; }
    std::size_t size() const { return nodes_.size(); }

    // All ids in insertion order (files sorted by path, classes by position).
    std::vector<ClassId> all() const;
    std::vector<ClassId> top_level() const;

    // Lookup by dot-joined qualified name. With duplicate top-level names the
    // first match by (file, span) wins; find_all returns every match.
    std::optional<ClassId> find(const std::string& qualified) const;
    std::vector<ClassId> find_all(const std::string& qualified) const;

    const std::vector<GraphWarning>& warnings() const { return warnings_; }

private:
    friend ClassGraph build_graph(std::vector<ParsedFile> files);
    friend SuperRef resolve_superclass(const ClassGraph& graph, ClassId id);

    std::vector<ClassNode> nodes_;
    std::map<std::string, std::vector<ClassId>> by_display_;
    std::map<std::string, std::vector<ClassId>> top_by_simple_;
    std::map<std::string, std::vector<ClassId>> top_by_file_;
    std::vector<GraphWarning> warnings_;
};

// Indexes every class of every unit and resolves all superclass references.
// Never fails; duplicate top-level names and ambiguous resolutions become
// warnings. Output is independent of the order in which files are supplied.
ClassGraph build_graph(std::vector<ParsedFile> files);

// Resolves one class's extends clause using lexical scoping: own name and
// members first, then each enclosing class from innermost outward, then
// top-level classes of the same file, then the rest of the corpus.
SuperRef resolve_superclass(const ClassGraph& graph, ClassId id);

// Enclosing classes, innermost first; empty for top-level classes.
std::vector<ClassId> enclosing_chain(const ClassGraph& graph, ClassId id);

SuperChain superclass_chain(const ClassGraph& graph, ClassId id);

} // namespace picip
