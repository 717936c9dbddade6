#include "ontomesh/ontology.hpp"

#include "generators.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ontomesh;

namespace {

NodeId id(const char* s) { return NodeId(s); }

std::vector<NodeId> ids(std::initializer_list<const char*> labels) {
    std::vector<NodeId> out;
    for (const char* label : labels) {
        out.emplace_back(label);
    }
    return out;
}

} // namespace

TEST_CASE("node ids are nonempty and ordered lexicographically") {
    CHECK_THROWS_AS(NodeId(""), DomainError);
    CHECK(id("10") < id("2")); // canonical order is textual, not numeric
    CHECK(id("a") < id("b"));
    CHECK(id("a") == id("a"));
}

TEST_CASE("validate_tree accepts exactly the trees") {
    SUBCASE("a path is a tree") {
        const TreeReport report =
            validate_tree({ids({"1", "2", "3"}), {{id("1"), id("2")}, {id("2"), id("3")}}});
        CHECK(report.is_tree);
        CHECK(report.edge_count == 2);
        CHECK(report.is_connected);
        CHECK(!report.cycle_witness.has_value());
    }

    SUBCASE("a triangle is not, and the witness walks the cycle") {
        const TreeReport report = validate_tree(
            {ids({"1", "2", "3"}),
             {{id("1"), id("2")}, {id("2"), id("3")}, {id("3"), id("1")}}});
        CHECK(!report.is_tree);
        CHECK(report.edge_count == 3);
        CHECK(report.is_connected);
        REQUIRE(report.cycle_witness.has_value());
        CHECK(*report.cycle_witness == ids({"1", "2", "3", "1"}));
    }

    SUBCASE("single node, no links") {
        const TreeReport report = validate_tree({ids({"only"}), {}});
        CHECK(report.is_tree);
        CHECK(report.edge_count == 0);
    }

    SUBCASE("disconnected forest: no cycle, not a tree") {
        const TreeReport report =
            validate_tree({ids({"1", "2", "3", "4"}), {{id("1"), id("2")}, {id("3"), id("4")}}});
        CHECK(!report.is_tree);
        CHECK(!report.is_connected);
        CHECK(!report.cycle_witness.has_value());
    }

    SUBCASE("self link is a cycle") {
        const TreeReport report = validate_tree({ids({"a", "b"}), {{id("a"), id("a")}}});
        CHECK(!report.is_tree);
        REQUIRE(report.cycle_witness.has_value());
        CHECK(*report.cycle_witness == ids({"a", "a"}));
    }

    SUBCASE("parallel links collapse") {
        const TreeReport report =
            validate_tree({ids({"1", "2"}), {{id("1"), id("2")}, {id("2"), id("1")}}});
        CHECK(report.edge_count == 1);
        CHECK(report.is_tree);
    }

    SUBCASE("duplicate ids are an error, not a report") {
        CHECK_THROWS_AS(validate_tree({ids({"1", "1"}), {}}), DuplicateNodeError);
    }

    SUBCASE("empty candidate is an error") {
        CHECK_THROWS_AS(validate_tree({{}, {}}), DomainError);
    }
}

TEST_CASE("validate_tree cross-checks connectivity and link count independently") {
    // Connected with an extra link: right count is n, not n-1.
    const TreeReport cyclic = validate_tree(
        {ids({"1", "2", "3"}), {{id("1"), id("2")}, {id("2"), id("3")}, {id("1"), id("3")}}});
    CHECK(cyclic.is_connected);
    CHECK(cyclic.edge_count == 3);
    CHECK(!cyclic.is_tree);

    // n-1 links but disconnected (self link burns one).
    const TreeReport split = validate_tree(
        {ids({"1", "2", "3"}), {{id("1"), id("2")}, {id("3"), id("3")}}});
    CHECK(split.edge_count == 2);
    CHECK(!split.is_connected);
    CHECK(!split.is_tree);
}

TEST_CASE("node equivalence ignores links") {
    const OrderedTree star(id("1"), {{id("1"), {id("2"), id("3")}}});
    const OrderedTree path(id("1"), {{id("1"), {id("2")}}, {id("2"), {id("3")}}});
    CHECK(node_equivalent(star, path));
    CHECK(node_equivalent(star, star));

    const OrderedTree other(id("1"), {{id("1"), {id("2"), id("4")}}});
    CHECK(!node_equivalent(star, other));
}

TEST_CASE("node equivalence is an equivalence relation") {
    testgen::Rng rng(2001);
    for (int round = 0; round < 30; ++round) {
        const std::size_t n = 1 + testgen::pick(rng, 6);
        const auto nodes_a = testgen::make_nodes(n);
        const auto a = testgen::random_ordered_tree(nodes_a, rng);
        const auto b = testgen::random_ordered_tree(nodes_a, rng);
        const auto c = testgen::random_ordered_tree(nodes_a, rng);
        const auto d =
            testgen::random_ordered_tree(testgen::make_nodes(1 + testgen::pick(rng, 6), "m"), rng);

        CHECK(node_equivalent(a, a));
        CHECK(node_equivalent(a, b) == node_equivalent(b, a));
        if (node_equivalent(a, b) && node_equivalent(b, c)) {
            CHECK(node_equivalent(a, c));
        }
        CHECK(!node_equivalent(a, d));
    }
}

TEST_CASE("ordered trees enforce their shape") {
    SUBCASE("two parents") {
        CHECK_THROWS_AS(
            OrderedTree(id("r"), {{id("r"), {id("a"), id("b")}}, {id("a"), {id("b")}}}),
            InvariantError);
    }
    SUBCASE("root with a parent") {
        CHECK_THROWS_AS(OrderedTree(id("r"), {{id("r"), {id("a")}}, {id("a"), {id("r")}}}),
                        InvariantError);
    }
    SUBCASE("duplicate siblings") {
        CHECK_THROWS_AS(OrderedTree(id("r"), {{id("r"), {id("a"), id("a")}}}), InvariantError);
    }
    SUBCASE("unreachable island") {
        CHECK_THROWS_AS(OrderedTree(id("r"), {{id("a"), {id("b")}}, {id("b"), {id("a")}}}),
                        InvariantError);
    }
    SUBCASE("sibling order is preserved") {
        const OrderedTree tree(id("r"), {{id("r"), {id("z"), id("a")}}});
        REQUIRE(tree.children_of(id("r")).size() == 2);
        CHECK(tree.children_of(id("r"))[0] == id("z"));
        CHECK(tree.children_of(id("r"))[1] == id("a"));
        CHECK(tree.children_of(id("z")).empty());
        CHECK_THROWS_AS(tree.children_of(id("missing")), DomainError);
    }
}

TEST_CASE("from_links orients deterministically") {
    // Root is the smallest node and children come out sorted.
    const auto tree = OrderedTree::from_links(
        ids({"b", "d", "a", "c"}), {{id("c"), id("a")}, {id("a"), id("b")}, {id("d"), id("a")}});
    CHECK(tree.root() == id("a"));
    const auto kids = tree.children_of(id("a"));
    REQUIRE(kids.size() == 3);
    CHECK(kids[0] == id("b"));
    CHECK(kids[1] == id("c"));
    CHECK(kids[2] == id("d"));

    CHECK_THROWS_AS(OrderedTree::from_links(ids({"a", "b", "c"}), {{id("a"), id("b")}}),
                    DomainError);
}

TEST_CASE("tree adjacency projection") {
    SUBCASE("two nodes") {
        const OrderedTree tree(id("r"), {{id("r"), {id("x")}}});
        const AdjacencyMatrix adj = to_adjacency(tree);
        CHECK(adj.dimension() == 2);
        CHECK(!adj.at(0, 0));
        CHECK(adj.at(0, 1));
        CHECK(adj.at(1, 0));
        CHECK(!adj.at(1, 1));
    }

    SUBCASE("path 1-2-3 lands on the right cells") {
        const OrderedTree tree(id("1"), {{id("1"), {id("2")}}, {id("2"), {id("3")}}});
        const AdjacencyMatrix adj = to_adjacency(tree);
        CHECK(adj.has_link(id("1"), id("2")));
        CHECK(adj.has_link(id("2"), id("3")));
        CHECK(!adj.has_link(id("1"), id("3")));
    }

    SUBCASE("always symmetric, zero diagonal, 2(n-1) ones") {
        testgen::Rng rng(2002);
        for (int round = 0; round < 25; ++round) {
            const std::size_t n = 1 + testgen::pick(rng, 8);
            const auto tree = testgen::random_ordered_tree(testgen::make_nodes(n), rng);
            const AdjacencyMatrix adj = to_adjacency(tree);
            std::size_t ones = 0;
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(!adj.at(i, i));
                for (std::size_t j = 0; j < n; ++j) {
                    CHECK(adj.at(i, j) == adj.at(j, i));
                    ones += adj.at(i, j) ? 1 : 0;
                }
            }
            CHECK(ones == 2 * (n - 1));

            // Round trip back through validation.
            CHECK(validate_tree({tree.nodes(), adj.links()}).is_tree);
        }
    }
}

TEST_CASE("adjacency matrix basics") {
    const AdjacencyMatrix adj(ids({"b", "a"}), {{id("a"), id("b")}});
    CHECK(adj.nodes() == ids({"a", "b"})); // canonical order
    CHECK(adj.link_count() == 1);
    CHECK(adj.index_of(id("b")) == 1);
    CHECK_THROWS_AS(adj.index_of(id("zz")), DomainError);
    CHECK_THROWS_AS(AdjacencyMatrix(ids({"a"}), {{id("a"), id("a")}}), DomainError);
    CHECK_THROWS_AS(AdjacencyMatrix(ids({"a", "a"}), {}), DuplicateNodeError);

    const AdjacencyMatrix complete = AdjacencyMatrix::complete(ids({"a", "b", "c"}));
    CHECK(complete.link_count() == 3);
    CHECK(complete.to_rational() == k_matrix(3));
}

TEST_CASE("mesh ontologies must be connected") {
    CHECK_THROWS_AS(MeshOntology(ids({"1", "2", "3"}), {{id("1"), id("2")}}), InvariantError);

    const MeshOntology triangle(
        ids({"1", "2", "3"}), {{id("1"), id("2")}, {id("2"), id("3")}, {id("3"), id("1")}});
    CHECK(triangle.dimension() == 3);
    CHECK(triangle.adjacency().link_count() == 3);

    const MeshOntology single(ids({"solo"}), {});
    CHECK(single.dimension() == 1);
}

TEST_CASE("arrangement bound is n!/2") {
    CHECK(arrangement_bound(2) == 1);
    CHECK(arrangement_bound(3) == 3);
    CHECK(arrangement_bound(10) == 1814400);
    CHECK_THROWS_AS(arrangement_bound(1), DomainError);
    CHECK_THROWS_AS(arrangement_bound(0), DomainError);

    Integer factorial = 1;
    for (unsigned n = 2; n <= 12; ++n) {
        factorial = 1;
        for (unsigned i = 2; i <= n; ++i) {
            factorial *= i;
        }
        CHECK(arrangement_bound(n) * 2 == factorial);
    }
}
