#pragma once

#include "ontomesh/probability.hpp"

#include <optional>
#include <span>
#include <vector>

namespace ontomesh {

// An ordering of every node, scored by the exact product of the traversed
// step weights. Feasible paths use strictly positive steps only, so the
// probability lies in (0, 1].
struct LearningPath {
    std::vector<NodeId> order;
    Rational probability;

    bool operator==(const LearningPath&) const = default;
};

// Product of consecutive step weights along order, which must visit every
// node exactly once. A zero-weight step raises InfeasibleStep.
Rational path_probability(const DirectedProbabilityMatrix& weights,
                          std::span<const NodeId> order);
Rational path_probability(const ProbabilityMatrix& weights, std::span<const NodeId> order);

// Maximum-probability open Hamiltonian order by exact dynamic programming
// over node subsets. Zero-weight steps are impassable. `precedence`, when
// given, is enforced as a global constraint: every `before` node is placed
// somewhere ahead of its `after` node. Among optimal orders the
// lexicographically smallest is returned. Requires n >= 2; throws
// NoFeasiblePath when every order crosses a zero weight.
LearningPath plan_path(const DirectedProbabilityMatrix& weights,
                       std::optional<NodeId> start = {},
                       const PrerequisiteRelation* precedence = nullptr);
LearningPath plan_path(const ProbabilityMatrix& weights, std::optional<NodeId> start = {},
                       const PrerequisiteRelation* precedence = nullptr);

// Exhaustive oracle with the identical contract (order, probability,
// tie-break) to plan_path; guards n <= 11 with TooLarge.
LearningPath brute_force_plan(const DirectedProbabilityMatrix& weights,
                              std::optional<NodeId> start = {},
                              const PrerequisiteRelation* precedence = nullptr);
LearningPath brute_force_plan(const ProbabilityMatrix& weights, std::optional<NodeId> start = {},
                              const PrerequisiteRelation* precedence = nullptr);

} // namespace ontomesh
