#include "picip/class_graph.hpp"

#include "picip/parser.hpp"

#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace picip;

namespace {

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(PICIP_FIXTURE_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ClassGraph graph_from(const std::vector<std::pair<std::string, std::string>>& sources) {
    std::vector<ParsedFile> units;
    for (const auto& [path, text] : sources) {
        ParseResult parsed = parse_unit({path, text});
        REQUIRE(!parsed.error);
        units.push_back({path, std::move(parsed.classes)});
    }
    return build_graph(std::move(units));
}

ClassGraph fixture_graph(const std::string& name) {
    return graph_from({{name, read_fixture(name)}});
}

ClassId must_find(const ClassGraph& graph, const std::string& qualified) {
    std::optional<ClassId> id = graph.find(qualified);
    REQUIRE(id);
    return *id;
}

std::string super_display(const ClassGraph& graph, const std::string& qualified) {
    const SuperRef& ref = graph.node(must_find(graph, qualified)).super_ref;
    switch (ref.kind) {
    case SuperRef::Kind::None: return "<none>";
    case SuperRef::Kind::External: return "external:" + ref.raw;
    case SuperRef::Kind::Ambiguous: return "ambiguous:" + graph.node(ref.target).name.display();
    case SuperRef::Kind::Internal: return graph.node(ref.target).name.display();
    }
    return "<none>";
}

} // namespace

TEST_CASE("figure 5 graph: containment forest and enclosing shadows top-level") {
    ClassGraph graph = fixture_graph("figure5.java");
    CHECK(graph.size() == 4);
    CHECK(graph.find("House"));
    CHECK(graph.find("House.Bedroom"));
    CHECK(graph.find("House.Bedroom.Attachedwashroom"));
    CHECK(graph.find("Bedroom"));

    ClassId washroom = must_find(graph, "House.Bedroom.Attachedwashroom");
    const SuperRef& ref = graph.node(washroom).super_ref;
    REQUIRE(ref.kind == SuperRef::Kind::Internal);
    CHECK(graph.node(ref.target).name.display() == "House.Bedroom");

    std::vector<ClassId> chain = enclosing_chain(graph, washroom);
    REQUIRE(chain.size() == 2);
    CHECK(graph.node(chain[0]).name.display() == "House.Bedroom");
    CHECK(graph.node(chain[1]).name.display() == "House");
}

TEST_CASE("figure 2 graph: inner class resolves to its outer class") {
    ClassGraph graph = graph_from({{"figure2.java", read_fixture("figure2.java")}});
    CHECK(super_display(graph, "TestIn1.TestIn2") == "TestIn1");
    std::vector<ClassId> chain = enclosing_chain(graph, must_find(graph, "TestIn1.TestIn2"));
    REQUIRE(chain.size() == 1);
    CHECK(graph.node(chain[0]).name.display() == "TestIn1");
}

TEST_CASE("figure 3 graph: nested extends external-to-tree class which extends the outer") {
    ClassGraph graph = fixture_graph("figure3.java");
    CHECK(super_display(graph, "A.B") == "C");
    CHECK(super_display(graph, "C") == "A");

    SuperChain chain = superclass_chain(graph, must_find(graph, "A.B"));
    REQUIRE(chain.classes.size() == 2);
    CHECK(graph.node(chain.classes[0]).name.display() == "C");
    CHECK(graph.node(chain.classes[1]).name.display() == "A");
    CHECK(!chain.cyclic);
}

TEST_CASE("single empty class builds a one-node graph with no superclass") {
    ClassGraph graph = graph_from({{"a.java", "class Solo { }"}});
    CHECK(graph.size() == 1);
    CHECK(super_display(graph, "Solo") == "<none>");
    CHECK(enclosing_chain(graph, must_find(graph, "Solo")).empty());
    CHECK(superclass_chain(graph, must_find(graph, "Solo")).classes.empty());
    CHECK(graph.warnings().empty());
}

TEST_CASE("unknown superclasses resolve to External with the raw text preserved") {
    ClassGraph graph = graph_from({{"a.java", "class A extends java.util.ArrayList { }"}});
    const SuperRef& ref = graph.node(must_find(graph, "A")).super_ref;
    CHECK(ref.kind == SuperRef::Kind::External);
    CHECK(ref.raw == "java.util.ArrayList");
}

TEST_CASE("resolution prefers own members over enclosing and top-level names") {
    ClassGraph graph = graph_from({{"a.java",
                                    "class P extends Q { class Q { } }\n"
                                    "class Q { }\n"}});
    CHECK(super_display(graph, "P") == "P.Q");
}

TEST_CASE("own simple name resolves before anything else") {
    ClassGraph graph = graph_from({{"a.java", "class B { class InnerB extends InnerB { } }"}});
    CHECK(super_display(graph, "B.InnerB") == "B.InnerB");
    SuperChain chain = superclass_chain(graph, must_find(graph, "B.InnerB"));
    CHECK(chain.cyclic);
    REQUIRE(chain.classes.size() == 1);
    CHECK(chain.classes[0] == must_find(graph, "B.InnerB"));
}

TEST_CASE("same-file top-level match wins over other files") {
    ClassGraph graph = graph_from({
        {"a.java", "class X { }\nclass Y extends X { }\n"},
        {"b.java", "class X { }\n"},
    });
    ClassId y = must_find(graph, "Y");
    const SuperRef& ref = graph.node(y).super_ref;
    REQUIRE(ref.kind == SuperRef::Kind::Internal);
    CHECK(graph.node(ref.target).file == "a.java");
}

TEST_CASE("cross-file matches with several candidates are Ambiguous, smallest path wins") {
    ClassGraph graph = graph_from({
        {"m.java", "class Target { }"},
        {"b.java", "class Target { }"},
        {"z.java", "class User extends Target { }"},
    });
    const SuperRef& ref = graph.node(must_find(graph, "User")).super_ref;
    REQUIRE(ref.kind == SuperRef::Kind::Ambiguous);
    REQUIRE(ref.candidates.size() == 2);
    CHECK(graph.node(ref.target).file == "b.java");
    bool warned = std::any_of(graph.warnings().begin(), graph.warnings().end(),
                              [](const GraphWarning& w) {
                                  return w.kind == GraphWarning::Kind::AmbiguousSuperclass;
                              });
    CHECK(warned);
}

TEST_CASE("duplicate top-level names are both kept and warned about") {
    ClassGraph graph = graph_from({
        {"a.java", "class Dup { }"},
        {"b.java", "class Dup { }"},
    });
    CHECK(graph.size() == 2);
    CHECK(graph.find_all("Dup").size() == 2);
    REQUIRE(graph.warnings().size() == 1);
    CHECK(graph.warnings()[0].kind == GraphWarning::Kind::DuplicateTopLevel);
    CHECK(graph.warnings()[0].message.find("a.java") != std::string::npos);
    CHECK(graph.warnings()[0].message.find("b.java") != std::string::npos);
}

TEST_CASE("failed dotted navigation downgrades to External") {
    ClassGraph graph = graph_from({{"a.java",
                                    "class A extends B.Missing { }\n"
                                    "class B { }\n"}});
    const SuperRef& ref = graph.node(must_find(graph, "A")).super_ref;
    CHECK(ref.kind == SuperRef::Kind::External);
    CHECK(ref.raw == "B.Missing");
}

TEST_CASE("dotted navigation through members succeeds") {
    ClassGraph graph = graph_from({{"a.java",
                                    "class A extends B.Inner.Deep { }\n"
                                    "class B { class Inner { class Deep { } } }\n"}});
    CHECK(super_display(graph, "A") == "B.Inner.Deep");
}

TEST_CASE("superclass chains stop at external references and guard cycles") {
    SUBCASE("terminates at external") {
        ClassGraph graph = graph_from({{"a.java",
                                        "class A extends Unknown { }\n"
                                        "class B extends A { }\n"}});
        SuperChain chain = superclass_chain(graph, must_find(graph, "B"));
        REQUIRE(chain.classes.size() == 1);
        CHECK(!chain.cyclic);
    }
    SUBCASE("self loop halts after one revisit") {
        ClassGraph graph = graph_from({{"a.java", "class A extends A { }"}});
        SuperChain chain = superclass_chain(graph, must_find(graph, "A"));
        CHECK(chain.cyclic);
        REQUIRE(chain.classes.size() == 1);
        CHECK(chain.classes[0] == must_find(graph, "A"));
    }
    SUBCASE("two-class loop lists both before halting") {
        ClassGraph graph = graph_from({{"a.java",
                                        "class X extends Y { }\n"
                                        "class Y extends X { }\n"}});
        SuperChain chain = superclass_chain(graph, must_find(graph, "X"));
        CHECK(chain.cyclic);
        REQUIRE(chain.classes.size() == 2);
        CHECK(graph.node(chain.classes[0]).name.display() == "Y");
        CHECK(graph.node(chain.classes[1]).name.display() == "X");
    }
}

TEST_CASE("subclass lists invert Internal super references exactly") {
    ClassGraph graph = graph_from({{"a.java",
                                    "class Base { }\n"
                                    "class Left extends Base { }\n"
                                    "class Right extends Base { }\n"
                                    "class Leaf extends Left { }\n"
                                    "class Orphan extends Missing { }\n"}});
    for (ClassId id : graph.all()) {
        for (ClassId sub : graph.node(id).subclasses) {
            const SuperRef& ref = graph.node(sub).super_ref;
            REQUIRE(ref.kind == SuperRef::Kind::Internal);
            CHECK(ref.target == id);
        }
        const SuperRef& ref = graph.node(id).super_ref;
        if (ref.kind == SuperRef::Kind::Internal) {
            const auto& subs = graph.node(ref.target).subclasses;
            CHECK(std::find(subs.begin(), subs.end(), id) != subs.end());
        }
    }
    CHECK(graph.node(must_find(graph, "Base")).subclasses.size() == 2);
}

TEST_CASE("resolution is independent of file supply order") {
    std::vector<std::pair<std::string, std::string>> sources = {
        {"a.java", "class A { class B extends C { } }"},
        {"c.java", "class C extends A { }"},
        {"d.java", "class D extends C { }"},
    };
    ClassGraph forward = graph_from(sources);
    std::reverse(sources.begin(), sources.end());
    ClassGraph backward = graph_from(sources);

    REQUIRE(forward.size() == backward.size());
    for (ClassId id : forward.all()) {
        std::string name = forward.node(id).name.display();
        CHECK(super_display(forward, name) == super_display(backward, name));
    }
}

TEST_CASE("qualified name keys equal the outer-edge segment paths") {
    ClassGraph graph = fixture_graph("figure5.java");
    for (ClassId id : graph.all()) {
        const ClassNode& node = graph.node(id);
        std::vector<std::string> segments{node.simple_name};
        std::optional<ClassId> outer = node.outer;
        while (outer) {
            segments.insert(segments.begin(), graph.node(*outer).simple_name);
            outer = graph.node(*outer).outer;
        }
        CHECK(segments == node.name.segments);
    }
}
