#pragma once

#include "ontomesh/errors.hpp"
#include "ontomesh/matrix.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ontomesh {

// Identity of a knowledge node. Ordering is lexicographic on the label and
// fixes the canonical matrix index order everywhere in the engine.
class NodeId {
public:
    explicit NodeId(std::string label);

    const std::string& str() const noexcept { return label_; }

    auto operator<=>(const NodeId&) const = default;

private:
    std::string label_;
};

std::ostream& operator<<(std::ostream& os, const NodeId& id);

// A node-to-node link. The from/to reading matters only where a
// parent -> child direction is documented (tree documents); everywhere else
// links are undirected and comparisons should go through normalized().
struct Link {
    NodeId from;
    NodeId to;

    Link normalized() const { return from <= to ? *this : Link{to, from}; }

    auto operator<=>(const Link&) const = default;
};

struct TreeReport {
    bool is_tree = false;
    std::size_t edge_count = 0;
    bool is_connected = false;
    // Closed walk witnessing a cycle (first id repeated at the end); present
    // iff the candidate contains a cycle.
    std::optional<std::vector<NodeId>> cycle_witness;

    bool operator==(const TreeReport&) const = default;
};

struct NotATreeError : Error {
    NotATreeError(const std::string& message, TreeReport tree_report)
        : Error("NotATree", message), report(std::move(tree_report)) {}

    TreeReport report;
};

// A raw node/link set prior to any validation.
struct TreeCandidate {
    std::vector<NodeId> nodes;
    std::vector<Link> links;
};

// Tree test over an undirected link set: connected, acyclic, exactly n-1
// distinct links. Duplicate links collapse; duplicate node ids raise
// DuplicateNode. Both conditions (connectivity, link count) are derived
// independently; is_tree is their conjunction.
TreeReport validate_tree(const TreeCandidate& candidate);

// Rooted tree whose sibling sequences carry significant order.
class OrderedTree {
public:
    OrderedTree(NodeId root, std::map<NodeId, std::vector<NodeId>> children);

    // Orients an undirected link set that is already known to form a tree:
    // root = smallest node, children sorted lexicographically.
    static OrderedTree from_links(std::vector<NodeId> nodes, const std::vector<Link>& links);

    const NodeId& root() const noexcept { return root_; }
    const std::vector<NodeId>& nodes() const noexcept { return nodes_; } // canonical order
    std::span<const NodeId> children_of(const NodeId& parent) const;
    bool contains(const NodeId& id) const;
    std::size_t size() const noexcept { return nodes_.size(); }

    // Parent -> child pairs: parents in canonical order, children in sibling order.
    std::vector<Link> links() const;

    bool operator==(const OrderedTree&) const = default;

private:
    NodeId root_;
    std::map<NodeId, std::vector<NodeId>> children_;
    std::vector<NodeId> nodes_;
};

// Symmetric zero-diagonal 0/1 matrix over a canonical node order.
class AdjacencyMatrix {
public:
    AdjacencyMatrix(std::vector<NodeId> nodes, const std::vector<Link>& links);

    // Every pair of distinct nodes linked (the K_n pattern).
    static AdjacencyMatrix complete(std::vector<NodeId> nodes);

    std::size_t dimension() const noexcept { return nodes_.size(); }
    const std::vector<NodeId>& nodes() const noexcept { return nodes_; }
    std::size_t index_of(const NodeId& id) const;
    bool at(std::size_t row, std::size_t col) const { return bits_[row * nodes_.size() + col] != 0; }
    bool has_link(const NodeId& a, const NodeId& b) const;

    std::vector<Link> links() const; // normalized and sorted
    std::size_t link_count() const;

    RationalMatrix to_rational() const;

    bool operator==(const AdjacencyMatrix&) const = default;

private:
    std::vector<NodeId> nodes_;
    std::vector<std::uint8_t> bits_;
};

// Multi-connected ontology: a connected mesh of knowledge nodes. Symmetry
// and the zero diagonal come from AdjacencyMatrix; connectivity is enforced
// here, at construction.
class MeshOntology {
public:
    MeshOntology(std::vector<NodeId> nodes, const std::vector<Link>& links);
    explicit MeshOntology(AdjacencyMatrix adjacency);

    const AdjacencyMatrix& adjacency() const noexcept { return adjacency_; }
    const std::vector<NodeId>& nodes() const noexcept { return adjacency_.nodes(); }
    std::size_t dimension() const noexcept { return adjacency_.dimension(); }

    bool operator==(const MeshOntology&) const = default;

private:
    AdjacencyMatrix adjacency_;
};

// Projection of an ordered tree onto its symmetric adjacency matrix. Sibling
// order is not representable there and is deliberately dropped.
AdjacencyMatrix to_adjacency(const OrderedTree& tree);

// Two ontologies cover the same knowledge domain iff their node sets are
// identical; links are disregarded.
bool node_equivalent(const std::vector<NodeId>& a, const std::vector<NodeId>& b);

template <typename A, typename B>
    requires requires(const A& a, const B& b) { a.nodes(); b.nodes(); }
bool node_equivalent(const A& a, const B& b) {
    return node_equivalent(a.nodes(), b.nodes());
}

// Number of distinct arrangements of n nodes with reverse orders identified:
// n!/2. Requires n >= 2.
Integer arrangement_bound(unsigned n);

} // namespace ontomesh
