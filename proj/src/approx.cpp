#include "cvd/approx.hpp"

#include <algorithm>
#include <set>

#include "cvd/errors.hpp"

namespace cvd {

std::size_t LocalRatioTrace::zero_steps() const {
    std::size_t n = 0;
    for (const auto& s : steps) n += std::holds_alternative<ZeroCostRemovalStep>(s);
    return n;
}

std::size_t LocalRatioTrace::twin_steps() const {
    std::size_t n = 0;
    for (const auto& s : steps) n += std::holds_alternative<TwinMergeStep>(s);
    return n;
}

std::size_t LocalRatioTrace::weight_steps() const {
    std::size_t n = 0;
    for (const auto& s : steps) n += std::holds_alternative<WeightSubtractionStep>(s);
    return n;
}

bool LocalRatioTrace::has_k5_step() const {
    for (const auto& s : steps)
        if (const auto* w = std::get_if<WeightSubtractionStep>(&s))
            if (w->weighting.kind == WeightingKind::K5Distinguishing) return true;
    return false;
}

namespace {

// Induced P3 through u in g restricted to the alive vertices.
template <typename Alive>
bool p3_through(const Graph& g, Vertex u, Alive alive) {
    std::vector<Vertex> an;
    for (Vertex v : g.neighbors(u))
        if (alive(v)) an.push_back(v);
    for (std::size_t i = 0; i < an.size(); ++i)
        for (std::size_t j = i + 1; j < an.size(); ++j)
            if (!g.adjacent(an[i], an[j])) return true;
    for (Vertex b : an)
        for (Vertex c : g.neighbors(b))
            if (c != u && alive(c) && !g.adjacent(c, u)) return true;
    return false;
}

// 3-vertex path subgraph through u, same restriction.
template <typename Alive>
bool p3_subgraph_through(const Graph& g, Vertex u, Alive alive) {
    int deg_u = 0;
    for (Vertex v : g.neighbors(u))
        deg_u += alive(v);
    if (deg_u >= 2) return true;
    for (Vertex b : g.neighbors(u)) {
        if (!alive(b)) continue;
        for (Vertex c : g.neighbors(b))
            if (c != u && alive(c)) return true;
    }
    return false;
}

std::optional<Vertex> least_zero_cost(const Graph& g, const std::map<Vertex, Rational>& cost) {
    for (Vertex v : g.vertices())
        if (cost.at(v) == 0) return v;
    return std::nullopt;
}

HittingSet to_hitting_set(const std::set<Vertex>& solution) {
    return HittingSet{std::vector<Vertex>(solution.begin(), solution.end()), ""};
}

}  // namespace

SolveOutcome cluster_vd_apx(const WeightedGraph& input, const SolveOptions& options) {
    input.validate();
    Graph cur = input.graph;
    std::map<Vertex, Rational> cost;
    for (Vertex v : cur.vertices()) cost[v] = input.cost_of(v);

    LocalRatioTrace trace;
    while (!is_cluster_graph(cur)) {
        if (auto zero = least_zero_cost(cur, cost)) {
            trace.steps.push_back(ZeroCostRemovalStep{*zero});
            cur = cur.remove_vertex(*zero);
            cost.erase(*zero);
            continue;
        }
        if (auto twins = find_true_twins(cur)) {
            auto [kept, removed] = *twins;
            trace.steps.push_back(TwinMergeStep{kept, removed});
            cost[kept] += cost.at(removed);
            cost.erase(removed);
            cur = cur.remove_vertex(removed);
            continue;
        }
        LocalWeighting lw = first_weighting(cur, options.diamond_free_mode);
        Rational lambda;
        bool have = false;
        for (const auto& [v, w] : lw.weights) {
            if (w == 0) continue;
            Rational q = cost.at(v) / w;
            if (!have || q < lambda) {
                lambda = q;
                have = true;
            }
        }
        if (!have || lambda <= 0)
            throw InvariantError("weight subtraction with no positive weight or nonpositive lambda");
        bool zeroed = false;
        for (const auto& [v, w] : lw.weights) {
            if (w == 0) continue;
            cost[v] -= lambda * w;
            if (cost[v] == 0) zeroed = true;
        }
        if (!zeroed) throw InvariantError("weight subtraction zeroed no vertex");
        trace.steps.push_back(WeightSubtractionStep{std::move(lw), lambda});
    }

    // Replay in reverse, restoring removed vertices. Every intermediate graph
    // is an induced subgraph of the input, so presence flags are enough.
    std::set<Vertex> present(cur.vertices().begin(), cur.vertices().end());
    std::set<Vertex> solution;
    auto alive = [&](Vertex v) { return present.count(v) && !solution.count(v); };
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        if (const auto* z = std::get_if<ZeroCostRemovalStep>(&*it)) {
            present.insert(z->vertex);
            if (p3_through(input.graph, z->vertex, alive)) solution.insert(z->vertex);
        } else if (const auto* t = std::get_if<TwinMergeStep>(&*it)) {
            present.insert(t->removed);
            if (solution.count(t->kept)) solution.insert(t->removed);
        }
    }

    SolveOutcome out;
    out.hitting_set = to_hitting_set(solution);
    out.cost = input.cost_of(out.hitting_set.vertices);
    out.trace = std::move(trace);
    return out;
}

HittingSet hitting_p3_subgraphs_apx(const WeightedGraph& input) {
    input.validate();
    Graph cur = input.graph;
    std::map<Vertex, Rational> cost;
    for (Vertex v : cur.vertices()) cost[v] = input.cost_of(v);

    std::vector<Vertex> zero_removals;
    while (true) {
        Vertex star_center = -1;
        for (Vertex v : cur.vertices())
            if (cur.degree(v) >= 2) {
                star_center = v;
                break;
            }
        if (star_center == -1) break;  // max degree <= 1: no P3 subgraph

        if (auto zero = least_zero_cost(cur, cost)) {
            zero_removals.push_back(*zero);
            cur = cur.remove_vertex(*zero);
            cost.erase(*zero);
            continue;
        }

        // Weighted star at the least vertex of degree >= 2: center weight
        // d(u) - 1, unit on the neighbors. Its optimum is d(u) - 1.
        Vertex u = star_center;
        Rational du_minus_1 = cur.degree(u) - 1;
        Rational lambda = cost.at(u) / du_minus_1;
        for (Vertex v : cur.neighbors(u)) lambda = std::min(lambda, cost.at(v));
        if (lambda <= 0) throw InvariantError("star subtraction with nonpositive lambda");
        cost[u] -= lambda * du_minus_1;
        for (Vertex v : cur.neighbors(u)) cost[v] -= lambda;
    }

    std::set<Vertex> present(cur.vertices().begin(), cur.vertices().end());
    std::set<Vertex> solution;
    auto alive = [&](Vertex v) { return present.count(v) && !solution.count(v); };
    for (auto it = zero_removals.rbegin(); it != zero_removals.rend(); ++it) {
        present.insert(*it);
        if (p3_subgraph_through(input.graph, *it, alive)) solution.insert(*it);
    }
    return to_hitting_set(solution);
}

HittingSet naive_3apx(const WeightedGraph& input) {
    input.validate();
    Graph cur = input.graph;
    std::map<Vertex, Rational> cost;
    for (Vertex v : cur.vertices()) cost[v] = input.cost_of(v);

    std::vector<Vertex> zero_removals;
    while (true) {
        auto p3 = find_induced_p3(cur);
        if (!p3) break;
        if (auto zero = least_zero_cost(cur, cost)) {
            zero_removals.push_back(*zero);
            cur = cur.remove_vertex(*zero);
            cost.erase(*zero);
            continue;
        }
        // Unit weights on one induced P3; any hitting set pays at most 3
        // against its optimum of 1.
        Vertex tri[3] = {p3->endpoint_a, p3->middle, p3->endpoint_b};
        Rational lambda = cost.at(tri[0]);
        for (Vertex v : tri) lambda = std::min(lambda, cost.at(v));
        for (Vertex v : tri) cost[v] -= lambda;
    }

    std::set<Vertex> present(cur.vertices().begin(), cur.vertices().end());
    std::set<Vertex> solution;
    auto alive = [&](Vertex v) { return present.count(v) && !solution.count(v); };
    for (auto it = zero_removals.rbegin(); it != zero_removals.rend(); ++it) {
        present.insert(*it);
        if (p3_through(input.graph, *it, alive)) solution.insert(*it);
    }
    return to_hitting_set(solution);
}

bool verify_feasible(const Graph& g, const HittingSet& x) {
    for (Vertex v : x.vertices)
        if (!g.has_vertex(v))
            throw PreconditionError("verify_feasible: unknown vertex " + std::to_string(v));
    return is_cluster_graph(g.remove_vertices(x.vertices));
}

bool verify_minimal(const Graph& g, const HittingSet& x) {
    if (!verify_feasible(g, x))
        throw PreconditionError("verify_minimal: set is not a hitting set");
    for (Vertex v : x.vertices) {
        std::vector<Vertex> rest;
        for (Vertex w : x.vertices)
            if (w != v) rest.push_back(w);
        // G - X is P3-free, so any P3 of G - (X \ {v}) goes through v.
        if (!has_induced_p3_through(g.remove_vertices(rest), v)) return false;
    }
    return true;
}

}  // namespace cvd
