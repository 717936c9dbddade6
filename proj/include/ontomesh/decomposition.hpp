#pragma once

#include "ontomesh/ontology.hpp"

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace ontomesh {

// X in X * M = O. The label records provenance (an expert id, "historical",
// ...) and carries no structure of its own.
struct DecompositionOperator {
    RationalMatrix matrix;
    std::optional<std::string> label;
};

// A specific tree-shaped reading of a mesh: an ordered tree over exactly the
// source mesh's node set.
class InstanceOntology {
public:
    explicit InstanceOntology(OrderedTree tree, std::optional<std::string> label = {});

    // Records the mesh node set the instance was cut from; throws
    // NodeMismatch unless the tree spans exactly those nodes.
    InstanceOntology(OrderedTree tree, const std::vector<NodeId>& source_mesh_nodes,
                     std::optional<std::string> label = {});

    const OrderedTree& tree() const noexcept { return tree_; }
    const std::vector<NodeId>& nodes() const noexcept { return tree_.nodes(); }
    const std::optional<std::string>& label() const noexcept { return label_; }

    AdjacencyMatrix adjacency() const { return to_adjacency(tree_); }

    bool operator==(const InstanceOntology&) const = default;

private:
    OrderedTree tree_;
    std::optional<std::string> label_;
};

// X = O * M^-1, so that X * M = O exactly. Requires identical node sets
// (NodeMismatch) and an invertible mesh adjacency (SingularMesh).
DecompositionOperator decomposition_operator(const MeshOntology& mesh,
                                             const InstanceOntology& instance);

// The raw product X * M. Arbitrary operators need not land on a 0/1 tree
// matrix, so the result stays rational; validate separately if a tree is
// expected.
RationalMatrix apply_decomposition(const DecompositionOperator& op, const MeshOntology& mesh);

// X^-1 * O: restores the mesh adjacency whenever op came out of
// decomposition_operator and is invertible (SingularOperator otherwise).
RationalMatrix reconstruct(const DecompositionOperator& op, const InstanceOntology& instance);

// Entrywise union: 1 where either operand is 1. Operands must share the
// node set (NodeMismatch).
AdjacencyMatrix merge(const AdjacencyMatrix& a, const AdjacencyMatrix& b);

// Breaks the given links out of the mesh; what remains must be a spanning
// tree (NotATree otherwise, with the failing report attached). The tree is
// rooted at the smallest node with lexicographic sibling order.
InstanceOntology extract_spanning_tree(const MeshOntology& mesh,
                                       const std::vector<Link>& removed_links);

// Deterministic enumeration of distinct spanning trees, up to limit
// (>= 1). Without an explicit limit the sequence is exhaustive.
std::vector<InstanceOntology>
enumerate_spanning_trees(const MeshOntology& mesh,
                         std::size_t limit = std::numeric_limits<std::size_t>::max());

// Number of labeled spanning trees, by the matrix-tree theorem on the exact
// rational Laplacian.
Integer count_spanning_trees(const MeshOntology& mesh);

// True iff every link of part is a link of whole. Dimensions must match
// (DimensionError); node labels are not compared.
bool is_sub_ontology(const AdjacencyMatrix& part, const AdjacencyMatrix& whole);

} // namespace ontomesh
