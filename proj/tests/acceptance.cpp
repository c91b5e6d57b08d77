// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything is checked in exact arithmetic; ratios have zero tolerance.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cvd/approx.hpp"
#include "cvd/errors.hpp"
#include "cvd/exact_oracle.hpp"
#include "cvd/generators.hpp"
#include "cvd/reduction.hpp"
#include "cvd/weighting.hpp"
#include "test_util.hpp"

using namespace cvd;
using namespace cvdtest;

namespace {

struct Tally {
    long long checked = 0;
    long long violations = 0;
    std::string first_violation;

    void fail(const std::string& why) {
        ++violations;
        if (first_violation.empty()) first_violation = why;
    }
};

Tally g_verifier_tally;  // criterion 8, fed by criteria 1-4
Tally g_trace_tally;     // criterion 10, fed by criteria 1-3

Rational g_worst_ratio_94 = 0;

// Independent replay of a solve trace against the untouched input: branch
// preconditions, nonnegativity, and that every subtraction zeroes a vertex.
bool replay_trace(const WeightedGraph& input, const SolveOutcome& out, std::string* why) {
    Graph cur = input.graph;
    std::map<Vertex, Rational> cost;
    for (Vertex v : cur.vertices()) cost[v] = input.cost_of(v);
    for (const auto& step : out.trace.steps) {
        if (const auto* z = std::get_if<ZeroCostRemovalStep>(&step)) {
            if (cost.at(z->vertex) != 0) {
                *why = "zero-cost removal of a costed vertex";
                return false;
            }
            cur = cur.remove_vertex(z->vertex);
            cost.erase(z->vertex);
        } else if (const auto* t = std::get_if<TwinMergeStep>(&step)) {
            if (!are_true_twins(cur, t->kept, t->removed)) {
                *why = "twin merge of a non-twin pair";
                return false;
            }
            cost[t->kept] += cost.at(t->removed);
            cost.erase(t->removed);
            cur = cur.remove_vertex(t->removed);
        } else if (const auto* w = std::get_if<WeightSubtractionStep>(&step)) {
            if (w->lambda <= 0) {
                *why = "nonpositive lambda";
                return false;
            }
            bool zeroed = false;
            for (const auto& [v, cw] : w->weighting.weights) {
                if (cw == 0) continue;
                cost[v] -= w->lambda * cw;
                if (cost.at(v) < 0) {
                    *why = "negative cost after subtraction";
                    return false;
                }
                if (cost.at(v) == 0) zeroed = true;
            }
            if (!zeroed) {
                *why = "subtraction zeroed no vertex";
                return false;
            }
        }
    }
    if (!is_cluster_graph(cur)) {
        *why = "trace ends on a non-cluster graph";
        return false;
    }
    return true;
}

// Shared per-instance harness for the ratio criteria; also feeds the
// verifier and trace tallies.
Rational checked_solve_ratio(const WeightedGraph& wg, const SolveOptions& opts, Tally& tally) {
    SolveOutcome out = cluster_vd_apx(wg, opts);

    ++g_verifier_tally.checked;
    if (!verify_feasible(wg.graph, out.hitting_set))
        g_verifier_tally.fail("lr94 output infeasible");
    else if (!verify_minimal(wg.graph, out.hitting_set))
        g_verifier_tally.fail("lr94 output not inclusionwise minimal");

    ++g_trace_tally.checked;
    if (out.trace.steps.size() > 3 * wg.graph.vertex_count())
        g_trace_tally.fail("more than 3|V| trace steps");
    std::string why;
    if (!replay_trace(wg, out, &why)) g_trace_tally.fail(why);

    Rational opt = exact_cluster_vd(wg).cost;
    if (opt == 0) {
        if (out.cost != 0) tally.fail("positive cost on a zero-optimum instance");
        return 1;
    }
    return out.cost / opt;
}

WeightedGraph random_instance(TestRng& rng, int nmax) {
    int n = rng.in_range(3, nmax);
    Graph g;
    if (rng.chance(0.7)) {
        g = random_gnp(rng, n, 0.1 + 0.8 * rng.unit());
    } else {
        int k = rng.in_range(1, std::min(4, n));
        double noise = 0.3 * rng.unit();
        g = generate("planted-clusters(" + std::to_string(n) + "," + std::to_string(k) + "," +
                         std::to_string(noise) + ")",
                     rng.eng())
                .graph;
    }
    return random_weighted(rng, g, 1, 10);
}

// ---- criteria ----

Tally criterion_ratio_94() {
    Tally tally;
    TestRng rng(1001);
    for (int t = 0; t < 10000; ++t) {
        WeightedGraph wg = random_instance(rng, 12);
        ++tally.checked;
        Rational ratio = checked_solve_ratio(wg, {}, tally);
        if (ratio > g_worst_ratio_94) g_worst_ratio_94 = ratio;
        if (ratio > Rational(9, 4)) tally.fail("ratio " + to_string(ratio) + " exceeds 9/4");
    }
    return tally;
}

Tally criterion_k5_free() {
    Tally tally;
    TestRng rng(2002);
    for (int t = 0; t < 2000; ++t) {
        WeightedGraph wg = random_instance(rng, 12);
        wg.graph = make_k5_free(wg.graph);
        ++tally.checked;
        SolveOutcome out = cluster_vd_apx(wg);
        if (out.trace.has_k5_step()) tally.fail("K5 rule fired on a K5-free instance");
        Rational opt = exact_cluster_vd(wg).cost;
        if (out.cost > 2 * opt) tally.fail("ratio above 2 on a K5-free instance");

        ++g_verifier_tally.checked;
        if (!verify_feasible(wg.graph, out.hitting_set) ||
            !verify_minimal(wg.graph, out.hitting_set))
            g_verifier_tally.fail("lr94 output on K5-free instance fails verification");
        ++g_trace_tally.checked;
        std::string why;
        if (out.trace.steps.size() > 3 * wg.graph.vertex_count() || !replay_trace(wg, out, &why))
            g_trace_tally.fail(why.empty() ? "step bound exceeded" : why);
    }
    return tally;
}

Tally criterion_diamond_free() {
    Tally tally;
    TestRng rng(3003);
    for (int t = 0; t < 1000; ++t) {
        WeightedGraph wg;
        if (t % 4 == 0) {
            // K5s survive in diamond-free graphs only behind pendants; make
            // sure that path is exercised
            wg = generate("k5-gadget", rng.eng(), 1, 10);
        } else {
            wg = random_weighted(rng, make_diamond_free(random_gnp(rng, rng.in_range(4, 12),
                                                                   0.1 + 0.5 * rng.unit())),
                                 1, 10);
        }
        if (!is_diamond_free(wg.graph)) {
            tally.fail("generator produced a diamond");
            continue;
        }
        ++tally.checked;
        SolveOptions opts{.diamond_free_mode = true};
        SolveOutcome out = cluster_vd_apx(wg, opts);
        for (const auto& step : out.trace.steps)
            if (const auto* w = std::get_if<WeightSubtractionStep>(&step))
                if (w->weighting.sn)
                    for (const auto& tag : w->weighting.sn->component_cases)
                        if (tag != "1.1" && tag != "2.1")
                            tally.fail("non-clique dispatch case " + tag);
        Rational opt = exact_cluster_vd(wg).cost;
        if (out.cost > 2 * opt) tally.fail("ratio above 2 on a diamond-free instance");

        ++g_verifier_tally.checked;
        if (!verify_feasible(wg.graph, out.hitting_set) ||
            !verify_minimal(wg.graph, out.hitting_set))
            g_verifier_tally.fail("diamond-free output fails verification");
        ++g_trace_tally.checked;
        std::string why;
        if (out.trace.steps.size() > 3 * wg.graph.vertex_count() || !replay_trace(wg, out, &why))
            g_trace_tally.fail(why.empty() ? "step bound exceeded" : why);
    }
    return tally;
}

Tally criterion_p3_subgraphs() {
    Tally tally;
    TestRng rng(4004);
    for (int t = 0; t < 2000; ++t) {
        WeightedGraph wg = random_instance(rng, 12);
        ++tally.checked;
        HittingSet x = hitting_p3_subgraphs_apx(wg);
        Rational opt = exact_p3_subgraph_hitting(wg).cost;
        Rational cost = wg.cost_of(x.vertices);
        if (cost > 2 * opt) tally.fail("p3sub ratio above 2");

        // subgraph-variant feasibility and minimality
        ++g_verifier_tally.checked;
        Graph rest = wg.graph.remove_vertices(x.vertices);
        for (Vertex v : rest.vertices())
            if (rest.degree(v) > 1) {
                g_verifier_tally.fail("p3sub output leaves a P3 subgraph");
                break;
            }
        for (Vertex v : x.vertices) {
            std::vector<Vertex> keep;
            for (Vertex w : x.vertices)
                if (w != v) keep.push_back(w);
            Graph sub = wg.graph.remove_vertices(keep);
            bool exposes = sub.degree(v) >= 2;
            for (Vertex b : sub.neighbors(v)) exposes |= sub.degree(b) >= 2;
            if (!exposes) {
                g_verifier_tally.fail("p3sub output not minimal for the subgraph variant");
                break;
            }
        }

        // the naive baseline rides along here, with the induced verifiers
        HittingSet nx = naive_3apx(wg);
        ++g_verifier_tally.checked;
        if (!verify_feasible(wg.graph, nx) || !verify_minimal(wg.graph, nx))
            g_verifier_tally.fail("naive3 output fails verification");
        Rational nopt = exact_cluster_vd(wg).cost;
        if (wg.cost_of(nx.vertices) > 3 * nopt) tally.fail("naive3 ratio above 3");
    }
    return tally;
}

Tally criterion_distinguishing_weights() {
    Tally tally;
    TestRng rng(5005);
    while (tally.checked < 500) {
        int csz = rng.in_range(2, 6), dsz = rng.in_range(1, 4);
        EdgeList edges;
        for (Vertex i = 1; i <= csz; ++i)
            for (Vertex j = i + 1; j <= csz; ++j) edges.emplace_back(i, j);
        for (Vertex w = csz + 1; w <= csz + dsz; ++w) {
            for (Vertex u = 1; u <= csz; ++u)
                if (rng.chance(0.5)) edges.emplace_back(u, w);
            for (Vertex w2 = csz + 1; w2 < w; ++w2)
                if (rng.chance(0.3)) edges.emplace_back(w2, w);
        }
        Graph g = make_graph(csz + dsz, edges);
        DistinguishingInstance inst;
        for (Vertex i = 1; i <= csz; ++i) inst.clique.push_back(i);
        for (Vertex w = csz + 1; w <= csz + dsz; ++w) inst.distinguishing_set.push_back(w);
        bool valid = true;
        for (Vertex i = 1; i <= csz && valid; ++i)
            for (Vertex j = i + 1; j <= csz && valid; ++j) {
                bool covered = false;
                for (Vertex w : inst.distinguishing_set)
                    covered |= g.adjacent(w, i) != g.adjacent(w, j);
                valid = covered;
            }
        if (!valid) continue;
        ++tally.checked;

        std::map<Vertex, long long> weights;
        try {
            weights = distinguishing_set_weights(g, inst);
        } catch (const InvariantError& e) {
            tally.fail(std::string("matching claim violated: ") + e.what());
            continue;
        }
        long long sum = 0;
        for (const auto& [w, x] : weights) sum += x;
        if (sum != csz - 1) tally.fail("weight sum != |C|-1");

        // brute-force minimum weight of a set hitting all distinguishing P3s
        std::vector<Vertex> verts(inst.clique);
        verts.insert(verts.end(), inst.distinguishing_set.begin(),
                     inst.distinguishing_set.end());
        int nv = static_cast<int>(verts.size());
        Rational best = -1;
        for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
            auto in = [&](Vertex v) {
                for (int i = 0; i < nv; ++i)
                    if (verts[i] == v && (mask >> i & 1)) return true;
                return false;
            };
            bool hits = true;
            for (Vertex w : inst.distinguishing_set) {
                for (std::size_t i = 0; i < inst.clique.size() && hits; ++i)
                    for (std::size_t j = i + 1; j < inst.clique.size() && hits; ++j) {
                        Vertex u = inst.clique[i], v = inst.clique[j];
                        if (g.adjacent(w, u) == g.adjacent(w, v)) continue;
                        if (!in(w) && !in(u) && !in(v)) hits = false;
                    }
                if (!hits) break;
            }
            if (!hits) continue;
            Rational c = 0;
            for (int i = 0; i < nv; ++i) {
                if (!(mask >> i & 1)) continue;
                auto it = weights.find(verts[i]);
                c += it == weights.end() ? Rational(1) : Rational(it->second);
            }
            if (best < 0 || c < best) best = c;
        }
        if (best < csz - 1) tally.fail("a cheap set hits all distinguishing P3s");
    }
    return tally;
}

Tally criterion_alpha_goodness() {
    Tally tally;
    TestRng rng(6006);

    auto check_host = [&](const Graph& host, const LocalWeighting& lw) {
        ++tally.checked;
        WeightedGraph hw;
        hw.graph = host.induced(lw.subgraph_vertices);
        hw.cost = lw.weights;
        Rational opt = exact_cluster_vd(hw).cost;
        for (const auto& x : enumerate_minimal_hitting_sets(host))
            if (lw.weight_within(x) > lw.alpha * opt) {
                tally.fail("minimal hitting set exceeds alpha * OPT(H, c_H)");
                return;
            }
    };

    // C4 rule hosts
    int done = 0;
    while (done < 200) {
        Graph g = random_gnp(rng, rng.in_range(4, 11), 0.3 + 0.4 * rng.unit());
        auto cyc = find_induced_c4(g);
        if (!cyc) continue;
        ++done;
        check_host(g, c4_weighting(g, *cyc));
    }

    // K5 rule hosts: gadget plus random twin-free decoration
    done = 0;
    while (done < 200) {
        WeightedGraph base = generate("k5-gadget", rng.eng());
        Graph g = base.graph;
        int extra = rng.in_range(0, 3);
        std::vector<Vertex> vs(g.vertices().begin(), g.vertices().end());
        EdgeList edges = g.edges();
        for (int e = 0; e < extra; ++e) {
            Vertex fresh = static_cast<Vertex>(10 + e);
            vs.push_back(fresh);
            for (Vertex u = 1; u <= 9; ++u)
                if (rng.chance(0.25)) edges.emplace_back(u, fresh);
        }
        g = Graph::from_vertices(vs, edges);
        if (find_true_twins(g)) continue;
        auto k5 = find_k5(g);
        if (!k5) continue;
        ++done;
        check_host(g, k5_weighting(g, *k5));
    }

    // second-neighborhood hosts: twin-free, C4-free, K5-free, not clusters
    done = 0;
    while (done < 200) {
        Graph g = make_k5_free(make_c4_free(random_gnp(rng, rng.in_range(5, 12),
                                                       0.2 + 0.4 * rng.unit())));
        if (is_cluster_graph(g) || find_true_twins(g)) continue;
        ++done;
        Vertex v0 = -1;
        int best = -1;
        for (Vertex v : g.vertices())
            if (g.degree(v) > best) {
                best = g.degree(v);
                v0 = v;
            }
        check_host(g, second_neighborhood_weighting(g, v0));
    }

    return tally;
}

Tally criterion_reduction() {
    Tally tally;
    TestRng rng(7007);
    for (int t = 0; t < 1000; ++t) {
        // plant a twin so the reduction always applies
        WeightedGraph wg = random_instance(rng, 10);
        auto vs = wg.graph.vertices();
        Vertex v = vs[rng.below(vs.size())];
        Vertex fresh = vs.back() + 1;
        std::vector<Vertex> verts(vs.begin(), vs.end());
        verts.push_back(fresh);
        EdgeList edges = wg.graph.edges();
        for (Vertex u : wg.graph.neighbors(v)) edges.emplace_back(fresh, u);
        edges.emplace_back(fresh, v);
        wg.graph = Graph::from_vertices(verts, edges);
        wg.cost[fresh] = rng.in_range(1, 10);

        auto twins = find_true_twins(wg.graph);
        if (!twins) {
            tally.fail("planted twin not found");
            continue;
        }
        ++tally.checked;
        auto [reduced, step] = merge_true_twins(wg, twins->first, twins->second);
        Rational before = exact_cluster_vd(wg).cost;
        Rational after = exact_cluster_vd(reduced).cost;
        if (before != after) tally.fail("optimum changed under twin merge");

        HittingSet x_red = exact_cluster_vd(reduced).set;
        HittingSet lifted = lift_solution(step, x_red, wg);
        if (!verify_feasible(wg.graph, lifted) || !verify_minimal(wg.graph, lifted))
            tally.fail("lifted solution fails verification");
        if (wg.cost_of(lifted.vertices) != before) tally.fail("lifted solution not optimal");
    }
    return tally;
}

Tally criterion_verifiers() {
    Tally tally = g_verifier_tally;
    if (tally.checked == 0) tally.fail("no outputs were verified");
    return tally;
}

Tally criterion_oracle_cross_validation() {
    Tally tally;
    TestRng rng(9009);
    for (int t = 0; t < 2500; ++t) {
        WeightedGraph wg = random_instance(rng, 10);
        ++tally.checked;
        if (exact_cluster_vd(wg).cost != exact_cluster_vd_enumeration(wg).cost)
            tally.fail("cluster-vd oracles disagree");
        if (exact_p3_subgraph_hitting(wg).cost != exact_p3_subgraph_hitting_enumeration(wg).cost)
            tally.fail("p3-subgraph oracles disagree");
    }
    return tally;
}

Tally criterion_trace() {
    Tally tally = g_trace_tally;
    if (tally.checked == 0) tally.fail("no traces were checked");
    return tally;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        std::function<Tally()> run;
        const char* detail;
    };
    std::vector<Entry> entries = {
        {1, "ratio guarantee 9/4 over random instances", criterion_ratio_94, ""},
        {2, "2-approximation and no K5 steps on K5-free instances", criterion_k5_free, ""},
        {3, "2-approximation with clique-only dispatch on diamond-free instances",
         criterion_diamond_free, ""},
        {4, "P3-subgraph algorithm stays within twice its optimum", criterion_p3_subgraphs, ""},
        {5, "distinguishing-set weights: sum |C|-1, brute-force lower bound",
         criterion_distinguishing_weights, ""},
        {6, "alpha-goodness of every weighting rule on small hosts", criterion_alpha_goodness,
         ""},
        {7, "twin merge keeps the optimum; lifted solutions verify", criterion_reduction, ""},
        {8, "all algorithm outputs pass the feasibility/minimality verifiers",
         criterion_verifiers, ""},
        {9, "branching and enumeration oracles agree (n <= 10)",
         criterion_oracle_cross_validation, ""},
        {10, "trace bounds: <= 3|V| steps, positive lambda, zeroing subtractions",
         criterion_trace, ""},
    };

    int failures = 0;
    for (auto& entry : entries) {
        Tally tally;
        std::string crashed;
        try {
            tally = entry.run();
        } catch (const std::exception& e) {
            crashed = e.what();
        }
        bool pass = crashed.empty() && tally.violations == 0;
        failures += !pass;
        std::printf("[%s] criterion %2d: %s — %lld checks", pass ? "PASS" : "FAIL", entry.id,
                    entry.name, tally.checked);
        if (entry.id == 1 && pass)
            std::printf(", worst ratio %s", to_string(g_worst_ratio_94).c_str());
        if (!crashed.empty()) std::printf(" — crashed: %s", crashed.c_str());
        if (tally.violations > 0)
            std::printf(" — %lld violations, first: %s", tally.violations,
                        tally.first_violation.c_str());
        std::printf("\n");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
