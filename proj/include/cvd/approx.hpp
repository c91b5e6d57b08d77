#pragma once

#include <variant>
#include <vector>

#include "cvd/graph.hpp"
#include "cvd/hitting_set.hpp"
#include "cvd/weighting.hpp"

namespace cvd {

struct ZeroCostRemovalStep {
    Vertex vertex;
};
struct TwinMergeStep {
    Vertex kept;
    Vertex removed;
};
struct WeightSubtractionStep {
    LocalWeighting weighting;
    Rational lambda;  // > 0, zeroes at least one vertex
};

using TraceStep = std::variant<ZeroCostRemovalStep, TwinMergeStep, WeightSubtractionStep>;

struct LocalRatioTrace {
    std::vector<TraceStep> steps;

    std::size_t zero_steps() const;
    std::size_t twin_steps() const;
    std::size_t weight_steps() const;
    bool has_k5_step() const;
};

struct SolveOptions {
    /// Skip the K5 rule; valid on diamond-free inputs, where every
    /// neighborhood component is a clique. Brings the guarantee down to 2.
    bool diamond_free_mode = false;
};

struct SolveOutcome {
    HittingSet hitting_set;
    LocalRatioTrace trace;
    Rational cost;  // of hitting_set under the input cost function
};

/// The local ratio solver: guarantees cost <= (9/4) * OPT, and <= 2 * OPT
/// when the trace contains no K5 step (in particular on K5-free inputs).
/// Branch priority per iteration: cluster-graph base case, least zero-cost
/// vertex, least true-twin pair, weight subtraction by the first rule of
/// weighting_list. Runs as an explicit loop with a reverse replay pass, so
/// recursion depth does not scale with the instance.
SolveOutcome cluster_vd_apx(const WeightedGraph& wg, const SolveOptions& options = {});

/// 2-approximation for hitting all 3-vertex path subgraphs (not necessarily
/// induced), via the weighted star rule.
HittingSet hitting_p3_subgraphs_apx(const WeightedGraph& wg);

/// Local ratio with unit weights on an arbitrary induced P3; 3-approximation.
HittingSet naive_3apx(const WeightedGraph& wg);

/// True iff G - X is a disjoint union of cliques. Unknown vertices rejected.
bool verify_feasible(const Graph& g, const HittingSet& x);

/// True iff removing any single vertex from X breaks feasibility. Rejects
/// infeasible X.
bool verify_minimal(const Graph& g, const HittingSet& x);

}  // namespace cvd
