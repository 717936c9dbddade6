#include "ontomesh/ontology.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>
#include <set>
#include <utility>

namespace ontomesh {

namespace {

std::vector<NodeId> sorted_unique_nodes(std::vector<NodeId> nodes) {
    std::sort(nodes.begin(), nodes.end());
    auto dup = std::adjacent_find(nodes.begin(), nodes.end());
    if (dup != nodes.end()) {
        throw DuplicateNodeError("duplicate node id '" + dup->str() + "'");
    }
    return nodes;
}

std::size_t index_in(const std::vector<NodeId>& nodes, const NodeId& id) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
    if (it == nodes.end() || *it != id) {
        throw DomainError("unknown node id '" + id.str() + "'");
    }
    return static_cast<std::size_t>(it - nodes.begin());
}

// Sorted neighbor lists for the deduped undirected link set; self loops are
// kept as a neighbor entry on their own node.
std::vector<std::vector<std::size_t>> neighbor_lists(const std::vector<NodeId>& nodes,
                                                     const std::set<Link>& links) {
    std::vector<std::vector<std::size_t>> adjacent(nodes.size());
    for (const Link& link : links) {
        const std::size_t a = index_in(nodes, link.from);
        const std::size_t b = index_in(nodes, link.to);
        adjacent[a].push_back(b);
        if (a != b) {
            adjacent[b].push_back(a);
        }
    }
    for (auto& list : adjacent) {
        std::sort(list.begin(), list.end());
    }
    return adjacent;
}

bool all_reachable(const std::vector<std::vector<std::size_t>>& adjacent) {
    if (adjacent.empty()) {
        return false;
    }
    std::vector<bool> seen(adjacent.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t at = stack.back();
        stack.pop_back();
        for (std::size_t next : adjacent[at]) {
            if (!seen[next]) {
                seen[next] = true;
                ++reached;
                stack.push_back(next);
            }
        }
    }
    return reached == adjacent.size();
}

// Deterministic cycle search: DFS from the smallest unvisited node with
// sorted neighbors; the first back edge closes the witness walk.
std::optional<std::vector<std::size_t>>
find_cycle_indices(const std::vector<std::vector<std::size_t>>& adjacent) {
    const std::size_t n = adjacent.size();
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u : adjacent[v]) {
            if (u == v) {
                return std::vector<std::size_t>{v, v};
            }
        }
    }

    std::vector<int> state(n, 0); // 0 unvisited, 1 on stack, 2 done
    std::vector<std::size_t> parent(n, n);
    for (std::size_t start = 0; start < n; ++start) {
        if (state[start] != 0) {
            continue;
        }
        std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
        state[start] = 1;
        while (!stack.empty()) {
            const std::size_t at = stack.back().first;
            if (stack.back().second < adjacent[at].size()) {
                const std::size_t to = adjacent[at][stack.back().second++];
                if (to == parent[at]) {
                    // The edge back to the parent is tree structure, not a
                    // cycle; parallel links were already collapsed, so it
                    // occurs exactly once.
                    continue;
                }
                if (state[to] == 1) {
                    std::vector<std::size_t> walk;
                    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
                        walk.push_back(it->first);
                        if (it->first == to) {
                            break;
                        }
                    }
                    std::reverse(walk.begin(), walk.end());
                    walk.push_back(to);
                    return walk;
                }
                if (state[to] == 0) {
                    state[to] = 1;
                    parent[to] = at;
                    stack.emplace_back(to, 0);
                }
            } else {
                state[at] = 2;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

} // namespace

NodeId::NodeId(std::string label) : label_(std::move(label)) {
    if (label_.empty()) {
        throw DomainError("node id must be a nonempty label");
    }
}

std::ostream& operator<<(std::ostream& os, const NodeId& id) { return os << id.str(); }

TreeReport validate_tree(const TreeCandidate& candidate) {
    if (candidate.nodes.empty()) {
        throw DomainError("tree candidate needs at least one node");
    }
    const std::vector<NodeId> nodes = sorted_unique_nodes(candidate.nodes);

    std::set<Link> links;
    for (const Link& link : candidate.links) {
        links.insert(link.normalized());
    }

    const auto adjacent = neighbor_lists(nodes, links);

    TreeReport report;
    report.edge_count = links.size();
    report.is_connected = all_reachable(adjacent);
    if (auto cycle = find_cycle_indices(adjacent)) {
        std::vector<NodeId> witness;
        witness.reserve(cycle->size());
        for (std::size_t index : *cycle) {
            witness.push_back(nodes[index]);
        }
        report.cycle_witness = std::move(witness);
    }
    report.is_tree = report.is_connected && report.edge_count == nodes.size() - 1;
    return report;
}

OrderedTree::OrderedTree(NodeId root, std::map<NodeId, std::vector<NodeId>> children)
    : root_(std::move(root)), children_(std::move(children)) {
    std::map<NodeId, std::size_t> parent_count;
    parent_count[root_]; // ensure presence
    for (const auto& [parent, kids] : children_) {
        parent_count[parent];
        for (const NodeId& kid : kids) {
            ++parent_count[kid];
        }
    }

    for (const auto& [node, count] : parent_count) {
        if (node == root_) {
            if (count != 0) {
                throw InvariantError("root '" + node.str() + "' must not have a parent");
            }
        } else if (count != 1) {
            throw InvariantError("node '" + node.str() + "' has " + std::to_string(count) +
                                 " parents; ordered trees give every non-root node exactly one");
        }
    }

    // Walk from the root; every node must be reached exactly once.
    std::size_t reached = 0;
    std::vector<const NodeId*> stack{&root_};
    std::set<NodeId> seen{root_};
    while (!stack.empty()) {
        const NodeId* at = stack.back();
        stack.pop_back();
        ++reached;
        if (auto it = children_.find(*at); it != children_.end()) {
            for (const NodeId& kid : it->second) {
                if (!seen.insert(kid).second) {
                    throw InvariantError("node '" + kid.str() + "' appears twice below the root");
                }
                stack.push_back(&kid);
            }
        }
    }
    if (reached != parent_count.size()) {
        throw InvariantError("tree has nodes unreachable from root '" + root_.str() + "'");
    }

    // Canonical node order, and a canonical children map (no empty leaf entries).
    nodes_.reserve(parent_count.size());
    for (const auto& [node, count] : parent_count) {
        nodes_.push_back(node);
    }
    std::erase_if(children_, [](const auto& entry) { return entry.second.empty(); });
}

OrderedTree OrderedTree::from_links(std::vector<NodeId> nodes, const std::vector<Link>& links) {
    TreeReport report = validate_tree({nodes, links});
    if (!report.is_tree) {
        throw DomainError("link set does not form a tree (" + std::to_string(report.edge_count) +
                          " links, " + (report.is_connected ? "connected" : "disconnected") + ")");
    }

    const std::vector<NodeId> ordered = sorted_unique_nodes(std::move(nodes));
    std::set<Link> normalized;
    for (const Link& link : links) {
        normalized.insert(link.normalized());
    }
    const auto adjacent = neighbor_lists(ordered, normalized);

    // Orient away from the smallest node; neighbor lists are sorted, so
    // sibling order is lexicographic.
    std::map<NodeId, std::vector<NodeId>> children;
    std::vector<std::size_t> parent(ordered.size(), ordered.size());
    std::vector<std::size_t> stack{0};
    std::vector<bool> seen(ordered.size(), false);
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t at = stack.back();
        stack.pop_back();
        for (std::size_t next : adjacent[at]) {
            if (!seen[next]) {
                seen[next] = true;
                parent[next] = at;
                children[ordered[at]].push_back(ordered[next]);
                stack.push_back(next);
            }
        }
    }
    return OrderedTree(ordered[0], std::move(children));
}

std::span<const NodeId> OrderedTree::children_of(const NodeId& parent) const {
    if (!contains(parent)) {
        throw DomainError("unknown node id '" + parent.str() + "'");
    }
    auto it = children_.find(parent);
    if (it == children_.end()) {
        return {};
    }
    return it->second;
}

bool OrderedTree::contains(const NodeId& id) const {
    return std::binary_search(nodes_.begin(), nodes_.end(), id);
}

std::vector<Link> OrderedTree::links() const {
    std::vector<Link> result;
    result.reserve(nodes_.size() - 1);
    for (const auto& [parent, kids] : children_) {
        for (const NodeId& kid : kids) {
            result.push_back({parent, kid});
        }
    }
    return result;
}

AdjacencyMatrix::AdjacencyMatrix(std::vector<NodeId> nodes, const std::vector<Link>& links)
    : nodes_(sorted_unique_nodes(std::move(nodes))) {
    if (nodes_.empty()) {
        throw DomainError("adjacency matrix needs at least one node");
    }
    bits_.assign(nodes_.size() * nodes_.size(), 0);
    for (const Link& link : links) {
        const std::size_t a = index_in(nodes_, link.from);
        const std::size_t b = index_in(nodes_, link.to);
        if (a == b) {
            throw DomainError("self link on '" + link.from.str() +
                              "': the diagonal must stay zero");
        }
        bits_[a * nodes_.size() + b] = 1;
        bits_[b * nodes_.size() + a] = 1;
    }
}

AdjacencyMatrix AdjacencyMatrix::complete(std::vector<NodeId> nodes) {
    AdjacencyMatrix m(std::move(nodes), {});
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        for (std::size_t j = 0; j < m.dimension(); ++j) {
            if (i != j) {
                m.bits_[i * m.dimension() + j] = 1;
            }
        }
    }
    return m;
}

std::size_t AdjacencyMatrix::index_of(const NodeId& id) const { return index_in(nodes_, id); }

bool AdjacencyMatrix::has_link(const NodeId& a, const NodeId& b) const {
    return at(index_of(a), index_of(b));
}

std::vector<Link> AdjacencyMatrix::links() const {
    std::vector<Link> result;
    for (std::size_t i = 0; i < dimension(); ++i) {
        for (std::size_t j = i + 1; j < dimension(); ++j) {
            if (at(i, j)) {
                result.push_back({nodes_[i], nodes_[j]});
            }
        }
    }
    return result;
}

std::size_t AdjacencyMatrix::link_count() const {
    std::size_t ones = 0;
    for (std::uint8_t bit : bits_) {
        ones += bit;
    }
    return ones / 2;
}

RationalMatrix AdjacencyMatrix::to_rational() const {
    RationalMatrix m(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) {
        for (std::size_t j = 0; j < dimension(); ++j) {
            if (at(i, j)) {
                m.at(i, j) = 1;
            }
        }
    }
    return m;
}

MeshOntology::MeshOntology(std::vector<NodeId> nodes, const std::vector<Link>& links)
    : MeshOntology(AdjacencyMatrix(std::move(nodes), links)) {}

MeshOntology::MeshOntology(AdjacencyMatrix adjacency) : adjacency_(std::move(adjacency)) {
    std::set<Link> links;
    for (const Link& link : adjacency_.links()) {
        links.insert(link);
    }
    if (!all_reachable(neighbor_lists(adjacency_.nodes(), links))) {
        throw InvariantError("mesh ontology must be connected");
    }
}

AdjacencyMatrix to_adjacency(const OrderedTree& tree) {
    return AdjacencyMatrix(tree.nodes(), tree.links());
}

bool node_equivalent(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    std::vector<NodeId> lhs = a;
    std::vector<NodeId> rhs = b;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
}

Integer arrangement_bound(unsigned n) {
    if (n < 2) {
        throw DomainError("arrangement bound needs at least 2 nodes");
    }
    Integer count = 1;
    for (unsigned i = 2; i <= n; ++i) {
        count *= i;
    }
    return count / 2;
}

} // namespace ontomesh
