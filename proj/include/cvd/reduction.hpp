#pragma once

#include <utility>

#include "cvd/graph.hpp"
#include "cvd/hitting_set.hpp"

namespace cvd {

/// Record of one optimum-preserving preprocessing step, with enough context
/// to lift a solution of the reduced instance back to the original one.
struct ReductionStep {
    enum class Kind { ZeroCostRemoval, TwinMerge };
    Kind kind;
    Vertex u;               // removed zero-cost vertex, or the surviving twin
    Vertex u2 = 0;          // deleted twin (TwinMerge only)
    WeightedGraph before;
    WeightedGraph after;
};

/// Delete u2 and transfer its whole cost to its true twin u. The optimum is
/// unchanged. Rejects pairs that are not true twins.
std::pair<WeightedGraph, ReductionStep> merge_true_twins(const WeightedGraph& wg, Vertex u,
                                                         Vertex u2);

/// Delete a vertex of cost exactly zero.
std::pair<WeightedGraph, ReductionStep> remove_zero_cost(const WeightedGraph& wg, Vertex u);

/// Map an inclusionwise minimal hitting set of the reduced instance to one of
/// the original instance with the same cost. Rejects infeasible inputs.
HittingSet lift_solution(const ReductionStep& step, const HittingSet& x_reduced,
                         const WeightedGraph& original);

}  // namespace cvd
