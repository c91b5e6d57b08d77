#include "cvd/approx.hpp"

#include <doctest.h>

#include <bit>

#include "cvd/errors.hpp"
#include "cvd/exact_oracle.hpp"
#include "cvd/generators.hpp"
#include "test_util.hpp"

using namespace cvd;
using namespace cvdtest;

namespace {

// Trace sanity shared by the random suites: step bound, lambda positivity,
// and the decomposition of the solution's cost over the subtraction steps.
void check_trace(const WeightedGraph& wg, const SolveOutcome& out) {
    CHECK(out.trace.steps.size() <= 3 * wg.graph.vertex_count());
    Rational recovered = 0;
    for (const auto& step : out.trace.steps) {
        if (const auto* w = std::get_if<WeightSubtractionStep>(&step)) {
            CHECK(w->lambda > 0);
            recovered += w->lambda * w->weighting.weight_within(out.hitting_set.vertices);
        }
    }
    CHECK(recovered == out.cost);
}

// Every subtraction step satisfies the goodness inequality against the exact
// optimum of its weighted subgraph.
void check_steps_alpha_good(const WeightedGraph& wg, const SolveOutcome& out) {
    for (const auto& step : out.trace.steps) {
        const auto* w = std::get_if<WeightSubtractionStep>(&step);
        if (!w) continue;
        WeightedGraph hw;
        hw.graph = wg.graph.induced(w->weighting.subgraph_vertices);
        hw.cost = w->weighting.weights;
        Rational opt = exact_cluster_vd(hw).cost;
        CHECK(w->weighting.weight_within(out.hitting_set.vertices) <= w->weighting.alpha * opt);
    }
}

long long brute_force_vertex_cover(const Graph& g) {
    int n = static_cast<int>(g.vertex_count());
    auto vs = g.vertices();
    long long best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool covers = true;
        for (auto [u, v] : g.edges()) {
            bool u_in = false, v_in = false;
            for (int i = 0; i < n; ++i) {
                if (!(mask >> i & 1)) continue;
                u_in |= vs[i] == u;
                v_in |= vs[i] == v;
            }
            if (!u_in && !v_in) { covers = false; break; }
        }
        if (covers) best = std::min<long long>(best, std::popcount(mask));
    }
    return best;
}

}  // namespace

TEST_SUITE("approx") {

TEST_CASE("disjoint cliques solve to the empty set") {
    auto wg = with_costs(make_graph(5, {{1, 2}, {1, 3}, {2, 3}, {4, 5}}), {7, 2, 9, 1, 4});
    auto out = cluster_vd_apx(wg);
    CHECK(out.hitting_set.vertices.empty());
    CHECK(out.cost == 0);
    CHECK(out.trace.steps.empty());
}

TEST_CASE("unit P3 is solved optimally") {
    auto wg = with_unit_costs(make_graph(3, {{1, 2}, {2, 3}}));
    auto out = cluster_vd_apx(wg);
    CHECK(out.cost == 1);
    CHECK(verify_feasible(wg.graph, out.hitting_set));
    CHECK(verify_minimal(wg.graph, out.hitting_set));
    CHECK(exact_cluster_vd(wg).cost == 1);
}

TEST_CASE("pendant construction stays within 9/4 of the vertex cover") {
    TestRng rng(71);
    for (int t = 0; t < 60; ++t) {
        int n = rng.in_range(2, 7);
        Graph inner = random_gnp(rng, n, 0.5);
        EdgeList edges = inner.edges();
        for (Vertex v = 1; v <= n; ++v) edges.emplace_back(v, n + v);
        auto wg = with_unit_costs(make_graph(2 * n, edges));
        auto out = cluster_vd_apx(wg);
        CHECK(verify_feasible(wg.graph, out.hitting_set));
        CHECK(verify_minimal(wg.graph, out.hitting_set));
        CHECK(out.cost <= Rational(9, 4) * brute_force_vertex_cover(inner));
    }
}

TEST_CASE("random instances: ratio, feasibility, minimality, trace") {
    TestRng rng(73);
    for (int t = 0; t < 400; ++t) {
        Graph g = random_gnp(rng, rng.in_range(3, 10), rng.unit());
        WeightedGraph wg = random_weighted(rng, g, 1, 10);
        auto out = cluster_vd_apx(wg);
        CHECK(verify_feasible(wg.graph, out.hitting_set));
        CHECK(verify_minimal(wg.graph, out.hitting_set));
        Rational opt = exact_cluster_vd(wg).cost;
        CHECK(out.cost <= Rational(9, 4) * opt);
        if (!out.trace.has_k5_step()) CHECK(out.cost <= 2 * opt);
        check_trace(wg, out);
        if (t % 10 == 0) check_steps_alpha_good(wg, out);
    }
}

TEST_CASE("solves are deterministic") {
    TestRng rng(79);
    for (int t = 0; t < 30; ++t) {
        WeightedGraph wg = random_weighted(rng, random_gnp(rng, 9, 0.5), 1, 10);
        auto a = cluster_vd_apx(wg);
        auto b = cluster_vd_apx(wg);
        CHECK(a.hitting_set.vertices == b.hitting_set.vertices);
        CHECK(a.trace.steps.size() == b.trace.steps.size());
    }
}

TEST_CASE("diamond-free mode on the K5 gadget") {
    auto wg = with_unit_costs(generate("k5-gadget", 0).graph);
    REQUIRE(is_diamond_free(wg.graph));
    auto general = cluster_vd_apx(wg);
    CHECK(general.trace.has_k5_step());

    auto df = cluster_vd_apx(wg, SolveOptions{.diamond_free_mode = true});
    CHECK(!df.trace.has_k5_step());
    for (const auto& step : df.trace.steps)
        if (const auto* w = std::get_if<WeightSubtractionStep>(&step)) {
            REQUIRE(w->weighting.sn.has_value());
            for (const auto& tag : w->weighting.sn->component_cases)
                CHECK((tag == "1.1" || tag == "2.1"));
        }
    Rational opt = exact_cluster_vd(wg).cost;
    CHECK(df.cost <= 2 * opt);
    CHECK(general.cost <= Rational(9, 4) * opt);
    CHECK(verify_minimal(wg.graph, df.hitting_set));
}

TEST_CASE("hitting p3 subgraphs: matching, star, triangle") {
    auto matching = with_unit_costs(make_graph(4, {{1, 2}, {3, 4}}));
    CHECK(hitting_p3_subgraphs_apx(matching).vertices.empty());

    auto star = with_unit_costs(make_graph(4, {{1, 2}, {1, 3}, {1, 4}}));
    auto xs = hitting_p3_subgraphs_apx(star);
    CHECK(xs.vertices == std::vector<Vertex>{1});
    CHECK(exact_p3_subgraph_hitting(star).cost == 1);

    auto tri = with_unit_costs(make_graph(3, {{1, 2}, {2, 3}, {1, 3}}));
    auto xt = hitting_p3_subgraphs_apx(tri);
    CHECK(xt.vertices.size() == 1);
    CHECK(exact_p3_subgraph_hitting(tri).cost == 1);
}

TEST_CASE("hitting p3 subgraphs is a 2-approximation on random instances") {
    TestRng rng(83);
    for (int t = 0; t < 300; ++t) {
        Graph g = random_gnp(rng, rng.in_range(3, 10), rng.unit());
        WeightedGraph wg = random_weighted(rng, g, 1, 10);
        auto x = hitting_p3_subgraphs_apx(wg);
        Graph rest = g.remove_vertices(x.vertices);
        for (Vertex v : rest.vertices()) CHECK(rest.degree(v) <= 1);
        // minimality in the subgraph sense
        for (Vertex v : x.vertices) {
            std::vector<Vertex> keep;
            for (Vertex w : x.vertices)
                if (w != v) keep.push_back(w);
            Graph sub = g.remove_vertices(keep);
            bool exposes = sub.degree(v) >= 2;
            for (Vertex b : sub.neighbors(v)) exposes |= sub.degree(b) >= 2;
            CHECK(exposes);
        }
        CHECK(wg.cost_of(x.vertices) <= 2 * exact_p3_subgraph_hitting(wg).cost);
    }
}

TEST_CASE("naive baseline: cluster graph, P3, random ratio 3") {
    auto cliques = with_unit_costs(make_graph(4, {{1, 2}, {3, 4}}));
    CHECK(naive_3apx(cliques).vertices.empty());

    auto p3 = with_unit_costs(make_graph(3, {{1, 2}, {2, 3}}));
    auto xp = naive_3apx(p3);
    CHECK(p3.cost_of(xp.vertices) == 1);
    CHECK(verify_minimal(p3.graph, xp));

    TestRng rng(89);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_gnp(rng, 8, rng.unit());
        auto wg = with_unit_costs(g);
        auto x = naive_3apx(wg);
        CHECK(verify_feasible(g, x));
        CHECK(verify_minimal(g, x));
        CHECK(wg.cost_of(x.vertices) <= 3 * exact_cluster_vd(wg).cost);
    }
}

TEST_CASE("verifiers: examples and error paths") {
    Graph p3 = make_graph(3, {{1, 2}, {2, 3}});
    CHECK(verify_feasible(p3, HittingSet{{2}, ""}));
    CHECK(!verify_feasible(p3, HittingSet{}));
    CHECK(verify_minimal(p3, HittingSet{{2}, ""}));
    CHECK(!verify_minimal(p3, HittingSet{{1, 2}, ""}));

    Graph c5 = make_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
    CHECK(verify_feasible(c5, HittingSet{{1, 3}, ""}));

    CHECK_THROWS_AS(verify_feasible(p3, HittingSet{{7}, ""}), PreconditionError);
    CHECK_THROWS_AS(verify_minimal(p3, HittingSet{}), PreconditionError);
}

TEST_CASE("zero costs and zero-weight instances behave") {
    // all-zero costs: everything removable for free, solution must still be
    // minimal and feasible
    auto wg = with_costs(make_graph(4, {{1, 2}, {2, 3}, {3, 4}}), {0, 0, 0, 0});
    auto out = cluster_vd_apx(wg);
    CHECK(out.cost == 0);
    CHECK(verify_feasible(wg.graph, out.hitting_set));
    CHECK(verify_minimal(wg.graph, out.hitting_set));

    WeightedGraph bad;
    bad.graph = make_graph(2, {{1, 2}});
    bad.cost[1] = -1;
    bad.cost[2] = 1;
    CHECK_THROWS_AS(cluster_vd_apx(bad), PreconditionError);
}

}  // TEST_SUITE
