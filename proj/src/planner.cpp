#include "ontomesh/planner.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace ontomesh {

namespace {

using Mask = std::uint32_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

struct PlanInstance {
    const std::vector<NodeId>& nodes;
    const RationalMatrix& weights;
    std::optional<std::size_t> start;
    std::vector<Mask> must_precede; // per node: nodes required somewhere before it
};

PlanInstance make_instance(const std::vector<NodeId>& nodes, const RationalMatrix& weights,
                           const std::optional<NodeId>& start,
                           const PrerequisiteRelation* precedence) {
    if (nodes.size() < 2) {
        throw DomainError("path planning needs at least 2 nodes");
    }
    if (nodes.size() > 16) {
        // The subset table holds n * 2^n exact rationals.
        throw TooLargeError("planning over " + std::to_string(nodes.size()) +
                            " nodes exceeds the subset dynamic program's practical bound (16)");
    }

    PlanInstance instance{nodes, weights, std::nullopt, std::vector<Mask>(nodes.size(), 0)};
    if (start) {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), *start);
        if (it == nodes.end() || *it != *start) {
            throw DomainError("start node '" + start->str() + "' is not part of the matrix");
        }
        instance.start = static_cast<std::size_t>(it - nodes.begin());
    }
    if (precedence) {
        if (auto cycle = precedence->find_cycle()) {
            std::string walk;
            for (const NodeId& id : *cycle) {
                if (!walk.empty()) {
                    walk += " -> ";
                }
                walk += id.str();
            }
            throw CyclicPrerequisitesError("precedence constraints are cyclic: " + walk,
                                           std::move(*cycle));
        }
        for (const PrerequisitePair& pair : precedence->pairs()) {
            auto index_of = [&](const NodeId& id) {
                auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
                if (it == nodes.end() || *it != id) {
                    throw NodeMismatchError("precedence constraint mentions '" + id.str() +
                                            "', which is not part of the matrix");
                }
                return static_cast<std::size_t>(it - nodes.begin());
            };
            instance.must_precede[index_of(pair.after)] |= bit(index_of(pair.before));
        }
    }
    return instance;
}

// Held-Karp over suffixes. value(v, S) is the best product of a path that
// starts at v and visits exactly the set S (v in S), given that everything
// outside S is already placed earlier. A state is infeasible when one of
// v's required predecessors still sits in S, i.e. would come after v.
class SuffixPlanner {
public:
    explicit SuffixPlanner(const PlanInstance& instance)
        : inst_(instance), n_(instance.nodes.size()), memo_(n_ << n_), known_(n_ << n_, false) {}

    const std::optional<Rational>& value(std::size_t v, Mask s) {
        const std::size_t key = (static_cast<std::size_t>(v) << n_) | s;
        if (known_[key]) {
            return memo_[key];
        }
        known_[key] = true;
        std::optional<Rational>& best = memo_[key];

        if (inst_.must_precede[v] & s) {
            return best; // a prerequisite of v would be visited after it
        }
        if (s == bit(v)) {
            best = Rational(1);
            return best;
        }
        const Mask rest = s & ~bit(v);
        for (std::size_t u = 0; u < n_; ++u) {
            if (!(rest & bit(u)) || inst_.weights.at(v, u) == 0) {
                continue;
            }
            const auto& sub = value(u, rest);
            if (!sub) {
                continue;
            }
            Rational candidate = inst_.weights.at(v, u) * *sub;
            if (!best || candidate > *best) {
                best = std::move(candidate);
            }
        }
        return best;
    }

    LearningPath best_path() {
        const Mask full = (Mask{1} << n_) - 1;

        std::optional<Rational> best;
        std::size_t best_first = 0;
        if (inst_.start) {
            best = value(*inst_.start, full);
            best_first = *inst_.start;
        } else {
            for (std::size_t v = 0; v < n_; ++v) {
                const auto& candidate = value(v, full);
                if (candidate && (!best || *candidate > *best)) {
                    best = candidate;
                    best_first = v; // first strictly better start = smallest id
                }
            }
        }
        if (!best) {
            throw NoFeasiblePathError(
                "no ordering visits every node over strictly positive steps");
        }

        // Greedy reconstruction: at each step take the smallest next node
        // whose suffix value completes the optimum. That makes the whole
        // order lexicographically smallest among the optima.
        LearningPath path;
        path.probability = *best;
        path.order.reserve(n_);
        std::size_t at = best_first;
        Mask remaining = full;
        path.order.push_back(inst_.nodes[at]);
        while (remaining != bit(at)) {
            const Mask rest = remaining & ~bit(at);
            const Rational target = *value(at, remaining);
            for (std::size_t u = 0; u < n_; ++u) {
                if (!(rest & bit(u)) || inst_.weights.at(at, u) == 0) {
                    continue;
                }
                const auto& sub = value(u, rest);
                if (sub && inst_.weights.at(at, u) * *sub == target) {
                    path.order.push_back(inst_.nodes[u]);
                    remaining = rest;
                    at = u;
                    break;
                }
            }
        }
        return path;
    }

private:
    const PlanInstance& inst_;
    std::size_t n_;
    std::vector<std::optional<Rational>> memo_;
    std::vector<bool> known_;
};

// Depth-first walk over all placements in lexicographic order; replacing the
// incumbent only on strict improvement keeps the smallest optimal order.
// Zero-weight extensions and precedence violations cannot reach a feasible
// leaf, so skipping them leaves the search exhaustive.
class ExhaustivePlanner {
public:
    explicit ExhaustivePlanner(const PlanInstance& instance)
        : inst_(instance), n_(instance.nodes.size()) {}

    LearningPath best_path() {
        std::vector<std::size_t> prefix;
        prefix.reserve(n_);
        for (std::size_t first = 0; first < n_; ++first) {
            if (inst_.start && *inst_.start != first) {
                continue;
            }
            if (inst_.must_precede[first] != 0) {
                continue;
            }
            prefix.push_back(first);
            extend(prefix, bit(first), Rational(1));
            prefix.pop_back();
        }
        if (!best_) {
            throw NoFeasiblePathError(
                "no ordering visits every node over strictly positive steps");
        }
        LearningPath path;
        path.probability = std::move(*best_);
        path.order.reserve(n_);
        for (std::size_t index : best_order_) {
            path.order.push_back(inst_.nodes[index]);
        }
        return path;
    }

private:
    void extend(std::vector<std::size_t>& prefix, Mask used, Rational probability) {
        if (prefix.size() == n_) {
            if (!best_ || probability > *best_) {
                best_ = std::move(probability);
                best_order_ = prefix;
            }
            return;
        }
        const std::size_t last = prefix.back();
        for (std::size_t next = 0; next < n_; ++next) {
            if (used & bit(next)) {
                continue;
            }
            if (inst_.weights.at(last, next) == 0) {
                continue;
            }
            if (inst_.must_precede[next] & ~used) {
                continue; // a required predecessor is still unplaced
            }
            prefix.push_back(next);
            extend(prefix, used | bit(next), probability * inst_.weights.at(last, next));
            prefix.pop_back();
        }
    }

    const PlanInstance& inst_;
    std::size_t n_;
    std::optional<Rational> best_;
    std::vector<std::size_t> best_order_;
};

} // namespace

Rational path_probability(const DirectedProbabilityMatrix& weights,
                          std::span<const NodeId> order) {
    std::vector<NodeId> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted != weights.nodes()) {
        throw DomainError("order must visit every node of the matrix exactly once");
    }

    Rational probability(1);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const Rational& step = weights.weight(order[i], order[i + 1]);
        if (step == 0) {
            throw InfeasibleStepError("step " + order[i].str() + " -> " + order[i + 1].str() +
                                      " has zero weight");
        }
        probability *= step;
    }
    return probability;
}

Rational path_probability(const ProbabilityMatrix& weights, std::span<const NodeId> order) {
    return path_probability(weights.to_directed(), order);
}

LearningPath plan_path(const DirectedProbabilityMatrix& weights, std::optional<NodeId> start,
                       const PrerequisiteRelation* precedence) {
    const PlanInstance instance =
        make_instance(weights.nodes(), weights.weights(), start, precedence);
    return SuffixPlanner(instance).best_path();
}

LearningPath plan_path(const ProbabilityMatrix& weights, std::optional<NodeId> start,
                       const PrerequisiteRelation* precedence) {
    return plan_path(weights.to_directed(), std::move(start), precedence);
}

LearningPath brute_force_plan(const DirectedProbabilityMatrix& weights,
                              std::optional<NodeId> start,
                              const PrerequisiteRelation* precedence) {
    if (weights.nodes().size() > 11) {
        throw TooLargeError("exhaustive planning over " +
                            std::to_string(weights.nodes().size()) +
                            " nodes would walk more than 11! orders");
    }
    const PlanInstance instance =
        make_instance(weights.nodes(), weights.weights(), start, precedence);
    return ExhaustivePlanner(instance).best_path();
}

LearningPath brute_force_plan(const ProbabilityMatrix& weights, std::optional<NodeId> start,
                              const PrerequisiteRelation* precedence) {
    return brute_force_plan(weights.to_directed(), std::move(start), precedence);
}

} // namespace ontomesh
