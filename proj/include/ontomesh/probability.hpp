#pragma once

#include "ontomesh/decomposition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ontomesh {

struct CyclicPrerequisitesError : Error {
    CyclicPrerequisitesError(const std::string& message, std::vector<NodeId> cycle_witness)
        : Error("CyclicPrerequisites", message), cycle(std::move(cycle_witness)) {}

    // Closed walk through the offending pairs; first id repeated at the end.
    std::vector<NodeId> cycle;
};

// "before must be taught prior to after".
struct PrerequisitePair {
    NodeId before;
    NodeId after;

    auto operator<=>(const PrerequisitePair&) const = default;
};

// Ordered teaching constraints over a node universe. The relation is meant
// to be acyclic; consumers check (find_cycle) and reject cyclic input with
// CyclicPrerequisites rather than this type refusing to hold it.
class PrerequisiteRelation {
public:
    PrerequisiteRelation(std::vector<NodeId> nodes, std::vector<PrerequisitePair> pairs);

    const std::vector<NodeId>& nodes() const noexcept { return nodes_; }
    const std::vector<PrerequisitePair>& pairs() const noexcept { return pairs_; }

    // Deterministic witness of a cycle in the induced relation, if any.
    std::optional<std::vector<NodeId>> find_cycle() const;

    bool operator==(const PrerequisiteRelation&) const = default;

private:
    std::vector<NodeId> nodes_;
    std::vector<PrerequisitePair> pairs_;
};

struct ProbabilityMatrixReport {
    bool valid = true;
    std::vector<std::string> violations;
};

// Flags entries outside [0,1], a nonzero diagonal, and (when required)
// asymmetry. Reports, never throws.
ProbabilityMatrixReport validate_probability_matrix(const RationalMatrix& weights,
                                                    bool require_symmetry);

class DirectedProbabilityMatrix;

// Symmetric link weights in [0,1] with a zero diagonal: the accumulated
// expert-frequency view of a mesh.
class ProbabilityMatrix {
public:
    ProbabilityMatrix(std::vector<NodeId> nodes, RationalMatrix weights);

    const std::vector<NodeId>& nodes() const noexcept { return nodes_; }
    const RationalMatrix& weights() const noexcept { return weights_; }
    const Rational& weight(const NodeId& a, const NodeId& b) const;

    // Links carrying positive weight.
    AdjacencyMatrix support() const;

    // The same weights read as a (trivially symmetric) directed matrix.
    DirectedProbabilityMatrix to_directed() const;

    bool operator==(const ProbabilityMatrix&) const = default;

private:
    std::vector<NodeId> nodes_;
    RationalMatrix weights_;
};

// Asymmetric variant: one-way links encode prerequisite direction.
class DirectedProbabilityMatrix {
public:
    DirectedProbabilityMatrix(std::vector<NodeId> nodes, RationalMatrix weights);

    const std::vector<NodeId>& nodes() const noexcept { return nodes_; }
    const RationalMatrix& weights() const noexcept { return weights_; }
    const Rational& weight(const NodeId& from, const NodeId& to) const;

    bool operator==(const DirectedProbabilityMatrix&) const = default;

private:
    std::vector<NodeId> nodes_;
    RationalMatrix weights_;
};

struct ExpertEntry {
    std::string label;
    InstanceOntology instance;

    bool operator==(const ExpertEntry&) const = default;
};

// One instance ontology per expert, all over the same node set.
class ExpertCorpus {
public:
    ExpertCorpus(std::vector<NodeId> mesh_nodes, std::vector<ExpertEntry> entries);

    const std::vector<NodeId>& mesh_nodes() const noexcept { return mesh_nodes_; }
    const std::vector<ExpertEntry>& entries() const noexcept { return entries_; }

private:
    std::vector<NodeId> mesh_nodes_;
    std::vector<ExpertEntry> entries_;
};

// weight(i,j) = (trees containing link i-j) / (number of trees), exactly.
ProbabilityMatrix accumulate(const ExpertCorpus& corpus);

// Zeroes the reverse of every prerequisite pair: (i before j) forbids the
// j -> i step. Links untouched by the relation stay symmetric.
DirectedProbabilityMatrix apply_prerequisites(const ProbabilityMatrix& base,
                                              const PrerequisiteRelation& prerequisites);

// Topological order of the relation's universe, smallest-id-first among the
// available nodes at every step.
std::vector<NodeId> prerequisite_order(const PrerequisiteRelation& prerequisites);

} // namespace ontomesh
