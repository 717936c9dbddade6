#include "ontomesh/cli.hpp"

#include "ontomesh/document.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace ontomesh;

namespace {

std::string fixture(const std::string& name) {
    return std::string(ONTOMESH_FIXTURES) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

CommandResult run(std::initializer_list<std::string> args) {
    return run_command(std::vector<std::string>(args));
}

// Scratch file for inputs the fixtures do not cover.
class TempFile {
public:
    TempFile(const std::string& name, const std::string& content)
        : path_(std::filesystem::temp_directory_path() / name) {
        std::ofstream out(path_);
        out << content;
    }
    ~TempFile() { std::filesystem::remove(path_); }

    std::string str() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

} // namespace

TEST_CASE("validate prints a report and mirrors validity in the status") {
    const CommandResult good = run({"validate", fixture("mesh10.mesh")});
    CHECK(good.status == 0);
    CHECK(good.out.find("kind: mesh") != std::string::npos);
    CHECK(good.out.find("valid: yes") != std::string::npos);

    const TempFile broken("broken.tree", "ontomesh 1\nkind tree\nnodes a b c\n"
                                         "link a b\nlink b c\nlink c a\n");
    const CommandResult bad = run({"validate", broken.str()});
    CHECK(bad.status == 1);
    CHECK(bad.out.find("tree: no") != std::string::npos);
    CHECK(bad.out.find("cycle: a - b - c - a") != std::string::npos);

    const CommandResult json = run({"validate", fixture("tree_a.tree"), "--json"});
    CHECK(json.status == 0);
    CHECK(json.out.find("\"is_tree\": true") != std::string::npos);
}

TEST_CASE("validate covers every document kind") {
    for (const char* name :
         {"mesh10.prob", "tree_b.tree", "corpus10.corpus", "prereq10.prereq"}) {
        CAPTURE(name);
        const CommandResult result = run({"validate", fixture(name)});
        CHECK(result.status == 0);
        CHECK(result.out.find("valid: yes") != std::string::npos);
    }

    // Prerequisite reports include the teaching order.
    const CommandResult prereq = run({"validate", fixture("prereq10.prereq")});
    CHECK(prereq.out.find("order: 01 ") != std::string::npos);

    const TempFile hot("hot.prob", "ontomesh 1\nkind probability\nnodes a b\n"
                                   "link a b weight=3/2\n");
    const CommandResult bad = run({"validate", hot.str()});
    CHECK(bad.status == 1);
    CHECK(bad.out.find("outside [0,1]") != std::string::npos);
}

TEST_CASE("invert reproduces the reference inverse") {
    const CommandResult result = run({"invert", fixture("mesh10.mesh")});
    REQUIRE(result.status == 0);
    // First row of the exact inverse of the ten-node mesh.
    CHECK(result.out.find("1, 3/2, -1/2, -1/2, -1, -1/2, -1, 1/2, 1, 1/2") == 0);

    const RationalMatrix printed = parse_matrix_text(result.out);
    CHECK(printed == parse_matrix_text(slurp(fixture("mesh10_inverse.mat"))));
}

TEST_CASE("invert rejects singular input with a named error") {
    const TempFile path3("path3.mesh", "ontomesh 1\nkind mesh\nnodes a b c\n"
                                       "link a b\nlink b c\n");
    const CommandResult result = run({"invert", path3.str()});
    CHECK(result.status == 1);
    CHECK(result.err.find("SingularError") != std::string::npos);
    CHECK(result.err.find("rank 2") != std::string::npos);
}

TEST_CASE("equiv checks node sets only") {
    const CommandResult same = run({"equiv", fixture("tree_a.tree"), fixture("tree_b.tree")});
    CHECK(same.status == 0);
    CHECK(same.out.find("equivalent") == 0);

    const TempFile small("small.tree", "ontomesh 1\nkind tree\nnodes a b\nlink a b\n");
    const CommandResult different =
        run({"equiv", fixture("tree_a.tree"), small.str()});
    CHECK(different.status == 1);
    CHECK(different.out.find("not equivalent") == 0);
}

TEST_CASE("compose merges trees into a mesh document") {
    const CommandResult result =
        run({"compose", fixture("tree_a.tree"), fixture("tree_b.tree")});
    REQUIRE(result.status == 0);
    const OntologyDocument doc = parse_document(result.out);
    CHECK(doc.kind == DocumentKind::mesh);
    const MeshOntology mesh = doc.to_mesh();
    CHECK(mesh.adjacency().link_count() == 15); // 9 + 9 links, 3 shared

    // Two distinct spanning trees merge into a proper sub-mesh of the
    // ten-node mesh with more links than either tree alone.
    const MeshOntology reference = parse_document(slurp(fixture("mesh10.mesh"))).to_mesh();
    CHECK(is_sub_ontology(mesh.adjacency(), reference.adjacency()));
    CHECK(mesh.adjacency().link_count() > 9);
}

TEST_CASE("decompose cuts spanning trees") {
    const CommandResult removed = run({"decompose", fixture("mesh10.mesh"), "--remove",
                                       "03:04,05:06,06:07,07:08,07:10,08:09,08:10,09:10"});
    REQUIRE(removed.status == 0);
    const OntologyDocument doc = parse_document(removed.out);
    CHECK(doc.kind == DocumentKind::tree);
    CHECK(doc.to_tree().links().size() == 9);

    const CommandResult enumerated =
        run({"decompose", fixture("mesh10.mesh"), "--enumerate", "5"});
    REQUIRE(enumerated.status == 0);
    std::vector<std::string> parts;
    std::size_t begin = 0;
    for (std::size_t at = 0; (at = enumerated.out.find("---\n", begin)) != std::string::npos;) {
        parts.push_back(enumerated.out.substr(begin, at - begin));
        begin = at + 4;
    }
    parts.push_back(enumerated.out.substr(begin));
    REQUIRE(parts.size() == 5);
    std::set<std::string> distinct;
    for (const std::string& part : parts) {
        const OrderedTree tree = parse_document(part).to_tree(); // validates tree-ness
        CHECK(tree.size() == 10);
        distinct.insert(part);
    }
    CHECK(distinct.size() == 5);

    const CommandResult leftover = run({"decompose", fixture("mesh10.mesh"), "--remove", "01:02"});
    CHECK(leftover.status == 1);
    CHECK(leftover.err.find("NotATree") != std::string::npos);

    const CommandResult neither = run({"decompose", fixture("mesh10.mesh")});
    CHECK(neither.status == 2);
}

TEST_CASE("operator and reconstruct round trip through files") {
    const CommandResult op = run({"operator", fixture("mesh10.mesh"), fixture("tree_a.tree")});
    REQUIRE(op.status == 0);

    // The shipped operator fixture is this exact matrix.
    CHECK(parse_matrix_text(op.out) == parse_matrix_text(slurp(fixture("operator_a.mat"))));

    const CommandResult mesh =
        run({"reconstruct", fixture("operator_a.mat"), fixture("tree_a.tree")});
    REQUIRE(mesh.status == 0);
    const RationalMatrix restored = parse_matrix_text(mesh.out);
    const MeshOntology original = parse_document(slurp(fixture("mesh10.mesh"))).to_mesh();
    CHECK(restored == original.adjacency().to_rational());
}

TEST_CASE("ingest accumulates the corpus fixture") {
    const CommandResult result = run({"ingest", fixture("corpus10.corpus")});
    REQUIRE(result.status == 0);
    const ProbabilityMatrix p = parse_document(result.out).to_probability();
    CHECK(p.weight(NodeId("02"), NodeId("03")) == Rational(Integer(4), Integer(5)));
    CHECK(p.weight(NodeId("07"), NodeId("10")) == Rational(Integer(1), Integer(5)));
}

TEST_CASE("prereq emits a directed document") {
    const CommandResult result =
        run({"prereq", fixture("mesh10.prob"), fixture("prereq10.prereq")});
    REQUIRE(result.status == 0);
    const DirectedProbabilityMatrix d = parse_document(result.out).to_directed();
    CHECK(d.weight(NodeId("01"), NodeId("02")) == Rational(Integer(1), Integer(5)));
    CHECK(d.weight(NodeId("02"), NodeId("01")) == 0); // 01 must come first
}

TEST_CASE("plan finds the reference optimum and agrees with its oracle") {
    const CommandResult result = run({"plan", fixture("mesh10.prob"), "--oracle"});
    REQUIRE(result.status == 0);
    CHECK(result.out.find("order: 04 01 02 03 07 06 08 10 09 05") != std::string::npos);
    CHECK(result.out.find("probability: 4/3125") != std::string::npos);
    CHECK(result.out.find("oracle: agreed") != std::string::npos);

    const CommandResult started =
        run({"plan", fixture("mesh10.prob"), "--start", "01", "--oracle"});
    CHECK(started.status == 0);
    CHECK(started.out.find("order: 01 ") != std::string::npos);

    const CommandResult constrained = run({"plan", fixture("mesh10.prob"), "--precedence",
                                           fixture("prereq10.prereq"), "--oracle"});
    CHECK(constrained.status == 0);

    const CommandResult json = run({"plan", fixture("mesh10.prob"), "--json"});
    CHECK(json.status == 0);
    CHECK(json.out.find("\"probability\": \"4/3125\"") != std::string::npos);
}

TEST_CASE("count-trees prints the spanning tree count") {
    const CommandResult result = run({"count-trees", fixture("mesh10.mesh")});
    CHECK(result.status == 0);
    CHECK(result.out == "5246\n");

    const CommandResult json = run({"count-trees", fixture("mesh10.mesh"), "--json"});
    CHECK(json.out.find("\"spanning_trees\": \"5246\"") != std::string::npos);
}

TEST_CASE("failure paths map to named errors and exit codes") {
    SUBCASE("missing file") {
        const CommandResult result = run({"validate", "/nonexistent/x.mesh"});
        CHECK(result.status == 2);
        CHECK(result.err.find("IoError") != std::string::npos);
    }

    SUBCASE("malformed document") {
        const TempFile bad("bad.mesh", "ontomesh 1\nkind mesh\nnodes a b\nlnik a b\n");
        const CommandResult result = run({"validate", bad.str()});
        CHECK(result.status == 2);
        CHECK(result.err.find("SyntaxError") != std::string::npos);
        CHECK(result.err.find("line 4") != std::string::npos);
    }

    SUBCASE("node mismatch across documents") {
        const TempFile small("small2.tree", "ontomesh 1\nkind tree\nnodes a b\nlink a b\n");
        const CommandResult result =
            run({"operator", fixture("mesh10.mesh"), small.str()});
        CHECK(result.status == 1);
        CHECK(result.err.find("NodeMismatch") != std::string::npos);
    }

    SUBCASE("unknown subcommand and bare invocation are usage errors") {
        CHECK(run({"frobnicate"}).status == 2);
        CHECK(run({}).status == 2);
    }

    SUBCASE("help exits cleanly") {
        const CommandResult result = run({"--help"});
        CHECK(result.status == 0);
        CHECK(result.out.find("plan") != std::string::npos);
    }
}
