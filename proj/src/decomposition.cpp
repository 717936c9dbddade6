#include "ontomesh/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace ontomesh {

namespace {

std::string node_set_text(const std::vector<NodeId>& nodes) {
    std::string text;
    for (const NodeId& id : nodes) {
        if (!text.empty()) {
            text += ", ";
        }
        text += id.str();
    }
    return "{" + text + "}";
}

// Union-find over node indices, copied freely during enumeration.
struct Components {
    std::vector<std::size_t> parent;

    explicit Components(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    std::size_t find(std::size_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }

    // Returns false when already joined.
    bool join(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent[a] = b;
        return true;
    }
};

struct EdgeIndex {
    std::size_t a;
    std::size_t b;
};

// Every spanning tree corresponds to one include/exclude path over the
// sorted edge list, so each is produced exactly once; excluding an edge is
// only explored when the still-available edges can span.
void enumerate_trees_rec(const std::vector<EdgeIndex>& edges, std::size_t next_edge,
                         std::size_t node_count, Components chosen,
                         std::vector<std::size_t>& picked, std::size_t limit,
                         std::vector<std::vector<std::size_t>>& out) {
    if (out.size() == limit) {
        return;
    }
    if (picked.size() == node_count - 1) {
        out.push_back(picked);
        return;
    }
    if (next_edge == edges.size() ||
        picked.size() + (edges.size() - next_edge) < node_count - 1) {
        return;
    }

    const EdgeIndex edge = edges[next_edge];
    Components with_edge = chosen;
    if (with_edge.join(edge.a, edge.b)) {
        picked.push_back(next_edge);
        enumerate_trees_rec(edges, next_edge + 1, node_count, std::move(with_edge), picked,
                            limit, out);
        picked.pop_back();
    }

    // Skip this edge only if the rest can still connect everything.
    Components rest = chosen;
    std::size_t components = node_count - picked.size();
    for (std::size_t i = next_edge + 1; i < edges.size(); ++i) {
        if (rest.join(edges[i].a, edges[i].b)) {
            --components;
        }
    }
    if (components == 1) {
        enumerate_trees_rec(edges, next_edge + 1, node_count, std::move(chosen), picked, limit,
                            out);
    }
}

} // namespace

InstanceOntology::InstanceOntology(OrderedTree tree, std::optional<std::string> label)
    : tree_(std::move(tree)), label_(std::move(label)) {}

InstanceOntology::InstanceOntology(OrderedTree tree, const std::vector<NodeId>& source_mesh_nodes,
                                   std::optional<std::string> label)
    : InstanceOntology(std::move(tree), std::move(label)) {
    if (!node_equivalent(tree_.nodes(), source_mesh_nodes)) {
        throw NodeMismatchError("instance tree spans " + node_set_text(tree_.nodes()) +
                                " but the source mesh has " +
                                node_set_text(source_mesh_nodes));
    }
}

DecompositionOperator decomposition_operator(const MeshOntology& mesh,
                                             const InstanceOntology& instance) {
    if (!node_equivalent(mesh, instance)) {
        throw NodeMismatchError("mesh nodes " + node_set_text(mesh.nodes()) +
                                " differ from instance nodes " +
                                node_set_text(instance.nodes()));
    }
    RationalMatrix mesh_inverse = [&] {
        try {
            return invert(mesh.adjacency().to_rational());
        } catch (const SingularError& e) {
            throw SingularMeshError("mesh adjacency has no inverse, so no decomposition "
                                    "operator exists (rank " +
                                        std::to_string(e.rank) + " of " +
                                        std::to_string(mesh.dimension()) + ")",
                                    e.rank);
        }
    }();
    return {multiply(instance.adjacency().to_rational(), mesh_inverse), instance.label()};
}

RationalMatrix apply_decomposition(const DecompositionOperator& op, const MeshOntology& mesh) {
    return multiply(op.matrix, mesh.adjacency().to_rational());
}

RationalMatrix reconstruct(const DecompositionOperator& op, const InstanceOntology& instance) {
    RationalMatrix operator_inverse = [&] {
        try {
            return invert(op.matrix);
        } catch (const SingularError& e) {
            throw SingularOperatorError(
                "decomposition operator is singular (rank " + std::to_string(e.rank) + " of " +
                    std::to_string(op.matrix.dimension()) + "); cannot restore the mesh",
                e.rank);
        }
    }();
    return multiply(operator_inverse, instance.adjacency().to_rational());
}

AdjacencyMatrix merge(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
    if (a.nodes() != b.nodes()) {
        throw NodeMismatchError("cannot merge over different node sets " +
                                node_set_text(a.nodes()) + " and " + node_set_text(b.nodes()));
    }
    std::vector<Link> links = a.links();
    std::vector<Link> more = b.links();
    links.insert(links.end(), more.begin(), more.end());
    return AdjacencyMatrix(a.nodes(), links);
}

InstanceOntology extract_spanning_tree(const MeshOntology& mesh,
                                       const std::vector<Link>& removed_links) {
    std::set<Link> removed;
    for (const Link& link : removed_links) {
        const Link normal = link.normalized();
        if (!mesh.adjacency().has_link(normal.from, normal.to)) {
            throw DomainError("link " + normal.from.str() + "-" + normal.to.str() +
                              " is not part of the mesh");
        }
        removed.insert(normal);
    }

    std::vector<Link> remaining;
    for (const Link& link : mesh.adjacency().links()) {
        if (!removed.contains(link)) {
            remaining.push_back(link);
        }
    }

    TreeReport report = validate_tree({mesh.nodes(), remaining});
    if (!report.is_tree) {
        std::string reason = report.is_connected
                                 ? "still has " + std::to_string(report.edge_count) +
                                       " links (needs " + std::to_string(mesh.dimension() - 1) +
                                       ")"
                                 : "is disconnected";
        throw NotATreeError("removing " + std::to_string(removed.size()) +
                                " links leaves a graph that " + reason,
                            std::move(report));
    }
    return InstanceOntology(OrderedTree::from_links(mesh.nodes(), remaining), mesh.nodes());
}

std::vector<InstanceOntology> enumerate_spanning_trees(const MeshOntology& mesh,
                                                       std::size_t limit) {
    if (limit < 1) {
        throw DomainError("enumeration limit must be at least 1");
    }

    const std::vector<Link> links = mesh.adjacency().links(); // sorted
    std::vector<EdgeIndex> edges;
    edges.reserve(links.size());
    for (const Link& link : links) {
        edges.push_back({mesh.adjacency().index_of(link.from), mesh.adjacency().index_of(link.to)});
    }

    std::vector<std::vector<std::size_t>> picks;
    if (mesh.dimension() == 1) {
        picks.push_back({}); // the single-node tree
    } else {
        std::vector<std::size_t> picked;
        enumerate_trees_rec(edges, 0, mesh.dimension(), Components(mesh.dimension()), picked,
                            limit, picks);
    }

    std::vector<InstanceOntology> trees;
    trees.reserve(picks.size());
    for (const auto& pick : picks) {
        std::vector<Link> tree_links;
        tree_links.reserve(pick.size());
        for (std::size_t index : pick) {
            tree_links.push_back(links[index]);
        }
        trees.emplace_back(OrderedTree::from_links(mesh.nodes(), tree_links), mesh.nodes());
    }
    return trees;
}

Integer count_spanning_trees(const MeshOntology& mesh) {
    const std::size_t n = mesh.dimension();
    if (n == 1) {
        return 1;
    }

    // Kirchhoff: any cofactor of the Laplacian D - A counts spanning trees.
    // The first row and column are dropped.
    RationalMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t degree = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (mesh.adjacency().at(i, j)) {
                ++degree;
            }
            if (j >= 1 && i != j && mesh.adjacency().at(i, j)) {
                minor.at(i - 1, j - 1) = -1;
            }
        }
        minor.at(i - 1, i - 1) = static_cast<long long>(degree);
    }

    const Rational det = determinant(minor);
    return numerator(det) / denominator(det);
}

bool is_sub_ontology(const AdjacencyMatrix& part, const AdjacencyMatrix& whole) {
    if (part.dimension() != whole.dimension()) {
        throw DimensionError("cannot compare a " + std::to_string(part.dimension()) +
                             "-node matrix against a " + std::to_string(whole.dimension()) +
                             "-node matrix");
    }
    for (std::size_t i = 0; i < part.dimension(); ++i) {
        for (std::size_t j = 0; j < part.dimension(); ++j) {
            if (part.at(i, j) && !whole.at(i, j)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace ontomesh
