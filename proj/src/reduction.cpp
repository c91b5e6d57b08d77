#include "cvd/reduction.hpp"

#include <algorithm>

#include "cvd/errors.hpp"

namespace cvd {

namespace {

bool hits_all_p3(const Graph& g, const std::vector<Vertex>& x) {
    return is_cluster_graph(g.remove_vertices(x));
}

void require_feasible_for(const WeightedGraph& instance, const HittingSet& x,
                          const char* what) {
    for (Vertex v : x.vertices)
        if (!instance.graph.has_vertex(v))
            throw PreconditionError(std::string(what) + ": solution uses unknown vertex " +
                                    std::to_string(v));
    if (!hits_all_p3(instance.graph, x.vertices))
        throw PreconditionError(std::string(what) + ": solution infeasible for reduced instance");
}

}  // namespace

std::pair<WeightedGraph, ReductionStep> merge_true_twins(const WeightedGraph& wg, Vertex u,
                                                         Vertex u2) {
    if (!are_true_twins(wg.graph, u, u2))
        throw PreconditionError("merge_true_twins: " + std::to_string(u) + "," +
                                std::to_string(u2) + " is not a true-twin pair");
    WeightedGraph reduced;
    reduced.graph = wg.graph.remove_vertex(u2);
    reduced.cost = wg.cost;
    reduced.cost[u] += reduced.cost.at(u2);
    reduced.cost.erase(u2);

    ReductionStep step{ReductionStep::Kind::TwinMerge, u, u2, wg, reduced};
    return {std::move(reduced), std::move(step)};
}

std::pair<WeightedGraph, ReductionStep> remove_zero_cost(const WeightedGraph& wg, Vertex u) {
    if (wg.cost_of(u) != 0)
        throw PreconditionError("remove_zero_cost: vertex " + std::to_string(u) +
                                " has nonzero cost");
    WeightedGraph reduced;
    reduced.graph = wg.graph.remove_vertex(u);
    reduced.cost = wg.cost;
    reduced.cost.erase(u);

    ReductionStep step{ReductionStep::Kind::ZeroCostRemoval, u, 0, wg, reduced};
    return {std::move(reduced), std::move(step)};
}

HittingSet lift_solution(const ReductionStep& step, const HittingSet& x_reduced,
                         const WeightedGraph& original) {
    require_feasible_for(step.after, x_reduced, "lift_solution");
    HittingSet lifted = x_reduced;
    if (step.kind == ReductionStep::Kind::TwinMerge) {
        if (lifted.contains(step.u)) lifted.vertices.push_back(step.u2);
    } else {
        // X' hits every P3 avoiding u, so only P3s through the restored
        // vertex can force u into the solution.
        Graph rest = original.graph.remove_vertices(x_reduced.vertices);
        if (has_induced_p3_through(rest, step.u)) lifted.vertices.push_back(step.u);
    }
    std::sort(lifted.vertices.begin(), lifted.vertices.end());
    return lifted;
}

}  // namespace cvd
