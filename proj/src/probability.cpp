#include "ontomesh/probability.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace ontomesh {

namespace {

std::vector<NodeId> checked_sorted_nodes(std::vector<NodeId> nodes) {
    std::sort(nodes.begin(), nodes.end());
    auto dup = std::adjacent_find(nodes.begin(), nodes.end());
    if (dup != nodes.end()) {
        throw DuplicateNodeError("duplicate node id '" + dup->str() + "'");
    }
    if (nodes.empty()) {
        throw DomainError("node set must not be empty");
    }
    return nodes;
}

std::size_t checked_index(const std::vector<NodeId>& nodes, const NodeId& id) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
    if (it == nodes.end() || *it != id) {
        throw NodeMismatchError("node '" + id.str() + "' is not part of this matrix");
    }
    return static_cast<std::size_t>(it - nodes.begin());
}

void require_valid_weights(const std::vector<NodeId>& nodes, const RationalMatrix& weights,
                           bool require_symmetry) {
    if (weights.dimension() != nodes.size()) {
        throw DimensionError("weight matrix is " + std::to_string(weights.dimension()) +
                             "-dimensional but there are " + std::to_string(nodes.size()) +
                             " nodes");
    }
    ProbabilityMatrixReport report = validate_probability_matrix(weights, require_symmetry);
    if (!report.valid) {
        throw InvariantError("invalid probability matrix: " + report.violations.front());
    }
}

} // namespace

PrerequisiteRelation::PrerequisiteRelation(std::vector<NodeId> nodes,
                                           std::vector<PrerequisitePair> pairs)
    : nodes_(checked_sorted_nodes(std::move(nodes))), pairs_(std::move(pairs)) {
    for (const PrerequisitePair& pair : pairs_) {
        for (const NodeId* id : {&pair.before, &pair.after}) {
            if (!std::binary_search(nodes_.begin(), nodes_.end(), *id)) {
                throw NodeMismatchError("prerequisite pair mentions '" + id->str() +
                                        "', which is outside the node universe");
            }
        }
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

std::optional<std::vector<NodeId>> PrerequisiteRelation::find_cycle() const {
    const std::size_t n = nodes_.size();
    std::vector<std::vector<std::size_t>> successors(n);
    for (const PrerequisitePair& pair : pairs_) {
        successors[checked_index(nodes_, pair.before)].push_back(
            checked_index(nodes_, pair.after));
    }
    for (auto& list : successors) {
        std::sort(list.begin(), list.end());
    }

    std::vector<int> state(n, 0); // 0 unvisited, 1 on stack, 2 done
    for (std::size_t start = 0; start < n; ++start) {
        if (state[start] != 0) {
            continue;
        }
        std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
        state[start] = 1;
        while (!stack.empty()) {
            const std::size_t at = stack.back().first;
            if (stack.back().second < successors[at].size()) {
                const std::size_t to = successors[at][stack.back().second++];
                if (state[to] == 1) {
                    std::vector<NodeId> walk;
                    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
                        walk.push_back(nodes_[it->first]);
                        if (it->first == to) {
                            break;
                        }
                    }
                    std::reverse(walk.begin(), walk.end());
                    walk.push_back(nodes_[to]);
                    return walk;
                }
                if (state[to] == 0) {
                    state[to] = 1;
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

ProbabilityMatrixReport validate_probability_matrix(const RationalMatrix& weights,
                                                    bool require_symmetry) {
    ProbabilityMatrixReport report;
    const std::size_t n = weights.dimension();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& w = weights.at(i, j);
            if (w < 0 || w > 1) {
                report.violations.push_back("entry (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ") = " + format_rational(w) +
                                            " is outside [0,1]");
            }
            if (i == j && w != 0) {
                report.violations.push_back("diagonal entry (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ") = " + format_rational(w) +
                                            " must be zero");
            }
            if (require_symmetry && j > i && w != weights.at(j, i)) {
                report.violations.push_back(
                    "asymmetric pair: (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                    ") = " + format_rational(w) + " but (" + std::to_string(j + 1) + "," +
                    std::to_string(i + 1) + ") = " + format_rational(weights.at(j, i)));
            }
        }
    }
    report.valid = report.violations.empty();
    return report;
}

ProbabilityMatrix::ProbabilityMatrix(std::vector<NodeId> nodes, RationalMatrix weights)
    : nodes_(checked_sorted_nodes(std::move(nodes))), weights_(std::move(weights)) {
    require_valid_weights(nodes_, weights_, /*require_symmetry=*/true);
}

const Rational& ProbabilityMatrix::weight(const NodeId& a, const NodeId& b) const {
    return weights_.at(checked_index(nodes_, a), checked_index(nodes_, b));
}

AdjacencyMatrix ProbabilityMatrix::support() const {
    std::vector<Link> links;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
            if (weights_.at(i, j) > 0) {
                links.push_back({nodes_[i], nodes_[j]});
            }
        }
    }
    return AdjacencyMatrix(nodes_, links);
}

DirectedProbabilityMatrix ProbabilityMatrix::to_directed() const {
    return DirectedProbabilityMatrix(nodes_, weights_);
}

DirectedProbabilityMatrix::DirectedProbabilityMatrix(std::vector<NodeId> nodes,
                                                     RationalMatrix weights)
    : nodes_(checked_sorted_nodes(std::move(nodes))), weights_(std::move(weights)) {
    require_valid_weights(nodes_, weights_, /*require_symmetry=*/false);
}

const Rational& DirectedProbabilityMatrix::weight(const NodeId& from, const NodeId& to) const {
    return weights_.at(checked_index(nodes_, from), checked_index(nodes_, to));
}

ExpertCorpus::ExpertCorpus(std::vector<NodeId> mesh_nodes, std::vector<ExpertEntry> entries)
    : mesh_nodes_(checked_sorted_nodes(std::move(mesh_nodes))), entries_(std::move(entries)) {
    std::set<std::string> labels;
    for (const ExpertEntry& entry : entries_) {
        if (!labels.insert(entry.label).second) {
            throw InvariantError("duplicate expert label '" + entry.label + "'");
        }
        if (!node_equivalent(entry.instance.nodes(), mesh_nodes_)) {
            throw NodeMismatchError("tree of expert '" + entry.label +
                                    "' does not cover the corpus node set");
        }
    }
}

ProbabilityMatrix accumulate(const ExpertCorpus& corpus) {
    if (corpus.entries().empty()) {
        throw EmptyCorpusError("cannot accumulate an empty expert corpus");
    }

    const std::vector<NodeId>& nodes = corpus.mesh_nodes();
    const Integer total = corpus.entries().size();
    std::map<std::pair<std::size_t, std::size_t>, Integer> counts;
    for (const ExpertEntry& entry : corpus.entries()) {
        if (!node_equivalent(entry.instance.nodes(), nodes)) {
            throw NodeMismatchError("tree of expert '" + entry.label +
                                    "' does not cover the corpus node set");
        }
        for (const Link& link : entry.instance.tree().links()) {
            const Link normal = link.normalized();
            std::size_t a = checked_index(nodes, normal.from);
            std::size_t b = checked_index(nodes, normal.to);
            ++counts[{a, b}];
        }
    }

    RationalMatrix weights(nodes.size());
    for (const auto& [cell, count] : counts) {
        const Rational frequency(count, total);
        weights.at(cell.first, cell.second) = frequency;
        weights.at(cell.second, cell.first) = frequency;
    }
    return ProbabilityMatrix(nodes, std::move(weights));
}

DirectedProbabilityMatrix apply_prerequisites(const ProbabilityMatrix& base,
                                              const PrerequisiteRelation& prerequisites) {
    for (const NodeId& id : prerequisites.nodes()) {
        if (!std::binary_search(base.nodes().begin(), base.nodes().end(), id)) {
            throw NodeMismatchError("prerequisite node '" + id.str() +
                                    "' is not part of the probability matrix");
        }
    }
    if (auto cycle = prerequisites.find_cycle()) {
        std::string walk;
        for (const NodeId& id : *cycle) {
            if (!walk.empty()) {
                walk += " -> ";
            }
            walk += id.str();
        }
        throw CyclicPrerequisitesError("prerequisites are cyclic: " + walk, std::move(*cycle));
    }

    RationalMatrix weights = base.weights();
    for (const PrerequisitePair& pair : prerequisites.pairs()) {
        const std::size_t before = checked_index(base.nodes(), pair.before);
        const std::size_t after = checked_index(base.nodes(), pair.after);
        weights.at(after, before) = 0; // the reverse step is forbidden
    }
    return DirectedProbabilityMatrix(base.nodes(), std::move(weights));
}

std::vector<NodeId> prerequisite_order(const PrerequisiteRelation& prerequisites) {
    if (auto cycle = prerequisites.find_cycle()) {
        std::string walk;
        for (const NodeId& id : *cycle) {
            if (!walk.empty()) {
                walk += " -> ";
            }
            walk += id.str();
        }
        throw CyclicPrerequisitesError("prerequisites are cyclic: " + walk, std::move(*cycle));
    }

    const std::vector<NodeId>& nodes = prerequisites.nodes();
    std::vector<std::size_t> pending(nodes.size(), 0);
    std::vector<std::vector<std::size_t>> successors(nodes.size());
    for (const PrerequisitePair& pair : prerequisites.pairs()) {
        const std::size_t before = checked_index(nodes, pair.before);
        const std::size_t after = checked_index(nodes, pair.after);
        successors[before].push_back(after);
        ++pending[after];
    }

    // Kahn's algorithm; the ready pool is an ordered set, so ties always go
    // to the smallest id.
    std::set<std::size_t> ready;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (pending[i] == 0) {
            ready.insert(i);
        }
    }
    std::vector<NodeId> order;
    order.reserve(nodes.size());
    while (!ready.empty()) {
        const std::size_t at = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(nodes[at]);
        for (std::size_t next : successors[at]) {
            if (--pending[next] == 0) {
                ready.insert(next);
            }
        }
    }
    return order;
}

} // namespace ontomesh
