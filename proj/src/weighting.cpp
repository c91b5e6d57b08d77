#include "cvd/weighting.hpp"

#include <algorithm>
#include <set>

#include "cvd/errors.hpp"

namespace cvd {

Rational LocalWeighting::total_weight() const {
    Rational t = 0;
    for (const auto& [v, w] : weights) t += w;
    return t;
}

Rational LocalWeighting::weight_within(std::span<const Vertex> vs) const {
    Rational t = 0;
    for (Vertex v : vs)
        if (auto it = weights.find(v); it != weights.end()) t += it->second;
    return t;
}

namespace {

bool distinguishes(const Graph& g, Vertex w, Vertex u, Vertex v) {
    return g.adjacent(w, u) != g.adjacent(w, v);
}

bool is_clique_set(const Graph& g, std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

// Clique number of G[a], capped at 4; a is never empty here.
int clique_number_up_to_4(const Graph& g, const std::vector<Vertex>& a) {
    int best = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (!g.adjacent(a[i], a[j])) continue;
            best = std::max(best, 2);
            for (std::size_t k = j + 1; k < a.size(); ++k) {
                if (!g.adjacent(a[i], a[k]) || !g.adjacent(a[j], a[k])) continue;
                best = std::max(best, 3);
                for (std::size_t l = k + 1; l < a.size(); ++l)
                    if (g.adjacent(a[i], a[l]) && g.adjacent(a[j], a[l]) &&
                        g.adjacent(a[k], a[l]))
                        return 4;
            }
        }
    return best;
}

// Least v such that G[a] - v has no induced P3, if any.
std::optional<Vertex> single_vertex_hitter(const Graph& g, const std::vector<Vertex>& a) {
    Graph in_a = g.induced(a);
    for (Vertex v : a)
        if (is_cluster_graph(in_a.remove_vertex(v))) return v;
    return std::nullopt;
}

// One distinguisher in b per true-twin pair of G[a]; the pairs are
// vertex-disjoint and get pairwise distinct distinguishers when the host is
// C4-free. Both claims are checked.
std::vector<Vertex> build_bprime(const Graph& g, const std::vector<Vertex>& a,
                                 const std::vector<Vertex>& b) {
    Graph in_a = g.induced(a);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::set<Vertex> paired;
    for (Vertex u : a)
        for (Vertex v : in_a.neighbors(u)) {
            if (v <= u || !are_true_twins(in_a, u, v)) continue;
            if (!paired.insert(u).second || !paired.insert(v).second)
                throw InvariantError("true-twin pairs of the component are not vertex-disjoint");
            pairs.emplace_back(u, v);
        }
    if (pairs.empty())
        throw InvariantError("component with clique number 3 and a single hitter has no true-twin pair");
    std::vector<Vertex> bprime;
    std::set<Vertex> used;
    for (auto [u, v] : pairs) {
        Vertex pick = -1;
        for (Vertex w : b)
            if (distinguishes(g, w, u, v)) { pick = w; break; }
        if (pick == -1)
            throw InvariantError("true-twin pair of a component has no outside distinguisher; host is not twin-free");
        if (!used.insert(pick).second)
            throw InvariantError("two twin pairs share a distinguisher; host contains an induced C4");
        bprime.push_back(pick);
    }
    std::sort(bprime.begin(), bprime.end());
    return bprime;
}

// Exact structural check; returns the two degree-1 vertices sorted.
std::optional<std::pair<Vertex, Vertex>> bull_legs(const Graph& h) {
    if (h.vertex_count() != 5 || h.edge_count() != 5) return std::nullopt;
    std::vector<Vertex> legs, horns, waist;
    for (Vertex v : h.vertices()) {
        switch (h.degree(v)) {
            case 1: legs.push_back(v); break;
            case 2: waist.push_back(v); break;
            case 3: horns.push_back(v); break;
            default: return std::nullopt;
        }
    }
    if (legs.size() != 2 || horns.size() != 2 || waist.size() != 1) return std::nullopt;
    Vertex t1 = h.neighbors(legs[0])[0], t2 = h.neighbors(legs[1])[0];
    if (t1 == t2) return std::nullopt;
    if (!h.adjacent(t1, t2) || !h.adjacent(waist[0], t1) || !h.adjacent(waist[0], t2))
        return std::nullopt;
    return std::make_pair(legs[0], legs[1]);
}

}  // namespace

std::map<Vertex, long long> distinguishing_set_weights(const Graph& g,
                                                       const DistinguishingInstance& inst,
                                                       std::span<const Vertex> pick_order) {
    if (inst.clique.empty())
        throw PreconditionError("distinguishing_set_weights: empty clique");
    if (!is_clique_set(g, inst.clique))
        throw PreconditionError("distinguishing_set_weights: C is not a clique");
    std::set<Vertex> cset(inst.clique.begin(), inst.clique.end());
    for (Vertex w : inst.distinguishing_set)
        if (cset.count(w))
            throw PreconditionError("distinguishing_set_weights: D intersects C");

    std::vector<Vertex> order(inst.distinguishing_set.begin(), inst.distinguishing_set.end());
    std::sort(order.begin(), order.end());
    if (!pick_order.empty()) {
        std::vector<Vertex> perm(pick_order.begin(), pick_order.end());
        std::vector<Vertex> sorted_perm = perm;
        std::sort(sorted_perm.begin(), sorted_perm.end());
        if (sorted_perm != order)
            throw PreconditionError("distinguishing_set_weights: pick order is not a permutation of D");
        order = std::move(perm);
    }

    std::vector<Vertex> clique(inst.clique.begin(), inst.clique.end());
    std::sort(clique.begin(), clique.end());
    std::map<Vertex, long long> weight;
    for (Vertex w : order) weight[w] = 0;

    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        Vertex w = order[idx];
        std::vector<std::pair<Vertex, Vertex>> matched;
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j) {
                Vertex u = clique[i], v = clique[j];
                if (!distinguishes(g, w, u, v)) continue;
                bool unique = true;
                for (std::size_t later = idx + 1; later < order.size() && unique; ++later)
                    if (distinguishes(g, order[later], u, v)) unique = false;
                if (unique) matched.emplace_back(u, v);
            }
        std::set<Vertex> touched;
        for (auto [u, v] : matched)
            if (!touched.insert(u).second || !touched.insert(v).second)
                throw InvariantError("edges uniquely distinguished by one vertex do not form a matching");
        weight[w] = static_cast<long long>(matched.size());
        for (auto [u, v] : matched) {
            Vertex drop = std::min(u, v);
            clique.erase(std::find(clique.begin(), clique.end(), drop));
        }
    }
    if (clique.size() != 1)
        throw InvariantError("weighting procedure ended with clique size " +
                             std::to_string(clique.size()) +
                             "; D is not a distinguishing set for C");
    return weight;
}

LocalWeighting c4_weighting(const Graph& g, const std::array<Vertex, 4>& cycle) {
    auto [a, b, c, d] = cycle;
    std::set<Vertex> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != 4 || !g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(c, d) ||
        !g.adjacent(d, a) || g.adjacent(a, c) || g.adjacent(b, d))
        throw PreconditionError("c4_weighting: vertices do not form an induced 4-cycle");
    LocalWeighting lw;
    lw.subgraph_vertices.assign(distinct.begin(), distinct.end());
    for (Vertex v : lw.subgraph_vertices) lw.weights[v] = 1;
    lw.alpha = 2;
    lw.kind = WeightingKind::C4;
    return lw;
}

LocalWeighting k5_weighting(const Graph& g, const std::array<Vertex, 5>& clique) {
    std::vector<Vertex> cl(clique.begin(), clique.end());
    std::sort(cl.begin(), cl.end());
    if (std::adjacent_find(cl.begin(), cl.end()) != cl.end() || !is_clique_set(g, cl))
        throw PreconditionError("k5_weighting: vertices do not form a 5-clique");

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) edges.emplace_back(cl[i], cl[j]);

    // Greedy distinguishing set: ascending scan, take a vertex when it
    // distinguishes some still-uncovered clique edge.
    std::vector<bool> covered(edges.size(), false);
    std::size_t remaining = edges.size();
    std::vector<Vertex> dset;
    std::set<Vertex> cset(cl.begin(), cl.end());
    for (Vertex w : g.vertices()) {
        if (remaining == 0) break;
        if (cset.count(w)) continue;
        bool helps = false;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (!covered[e] && distinguishes(g, w, edges[e].first, edges[e].second)) {
                helps = true;
                break;
            }
        if (!helps) continue;
        dset.push_back(w);
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (!covered[e] && distinguishes(g, w, edges[e].first, edges[e].second)) {
                covered[e] = true;
                --remaining;
            }
    }
    if (remaining != 0)
        throw InvariantError("5-clique has an edge without distinguisher; host is not twin-free");

    auto dw = distinguishing_set_weights(g, DistinguishingInstance{cl, dset});

    LocalWeighting lw;
    lw.subgraph_vertices = cl;
    lw.subgraph_vertices.insert(lw.subgraph_vertices.end(), dset.begin(), dset.end());
    std::sort(lw.subgraph_vertices.begin(), lw.subgraph_vertices.end());
    for (Vertex v : cl) lw.weights[v] = 1;
    for (const auto& [w, x] : dw) lw.weights[w] = x;
    lw.alpha = Rational(9, 4);
    lw.kind = WeightingKind::K5Distinguishing;
    return lw;
}

LocalWeighting second_neighborhood_weighting(const Graph& g, Vertex v0,
                                             bool require_clique_cases) {
    NeighborhoodDecomposition decomp = neighborhood_decomposition(g, v0);
    std::size_t k = decomp.components.size();
    if (k == 0)
        throw PreconditionError("second_neighborhood_weighting: vertex " + std::to_string(v0) +
                                " is isolated");

    std::set<Vertex> seen_b;
    for (const auto& b : decomp.outside)
        for (Vertex w : b)
            if (!seen_b.insert(w).second)
                throw InvariantError("outside sets overlap; host contains an induced C4");

    LocalWeighting lw;
    lw.kind = WeightingKind::SecondNeighborhood;
    lw.alpha = 2;
    SecondNeighborhoodInfo info;
    info.v0 = v0;

    lw.subgraph_vertices.push_back(v0);
    lw.weights[v0] = 0;  // set by the case analysis
    for (Vertex a : g.neighbors(v0)) {
        lw.subgraph_vertices.push_back(a);
        lw.weights[a] = 1;
    }
    for (const auto& b : decomp.outside)
        for (Vertex w : b) {
            lw.subgraph_vertices.push_back(w);
            lw.weights[w] = 0;
        }
    std::sort(lw.subgraph_vertices.begin(), lw.subgraph_vertices.end());

    if (k == 1) {
        const auto& a = decomp.components[0];
        const auto& b = decomp.outside[0];
        if (is_clique_set(g, a)) {
            info.component_cases.push_back("1.1");
            lw.weights[v0] = 1;
            std::vector<Vertex> c{v0};
            c.insert(c.end(), a.begin(), a.end());
            for (const auto& [w, x] : distinguishing_set_weights(g, DistinguishingInstance{c, b}))
                lw.weights[w] = x;
        } else {
            int omega = clique_number_up_to_4(g, a);
            if (omega >= 4)
                throw InvariantError("neighborhood component has clique number > 3; host contains a K5");
            long long asz = static_cast<long long>(a.size());
            if (omega == 2) {
                if (asz >= 4) {
                    info.component_cases.push_back("1.2a");
                    lw.weights[v0] = asz - 3;
                } else {
                    // Connected, not a clique, triangle-free: a 3-vertex path.
                    info.component_cases.push_back("1.2b");
                    Graph in_a = g.induced(a);
                    Vertex middle = -1;
                    for (Vertex v : a)
                        if (in_a.degree(v) == 2) middle = v;
                    if (asz != 3 || middle == -1)
                        throw InvariantError("component with clique number 2 and < 4 vertices is not a P3");
                    Vertex v2 = -1;
                    for (Vertex w : b)
                        if (g.adjacent(w, middle)) { v2 = w; break; }
                    if (v2 == -1)
                        throw InvariantError("P3 middle has no outside neighbor; v0 has a true twin, host is not twin-free");
                    lw.weights[v0] = 1;
                    lw.weights[v2] = 1;
                }
            } else {
                auto hitter = single_vertex_hitter(g, a);
                if (hitter) {
                    info.component_cases.push_back("1.3b");
                    auto bprime = build_bprime(g, a, b);
                    long long slack = asz - static_cast<long long>(bprime.size()) - 3;
                    if (slack < 1)
                        throw InvariantError("1.3b slack is nonpositive; v0 would have a true twin, host violates twin-freeness or maximum degree");
                    lw.weights[v0] = slack;
                    for (Vertex w : bprime) lw.weights[w] = 1;
                } else if (asz >= 6) {
                    info.component_cases.push_back("1.3a");
                    lw.weights[v0] = asz - 5;
                } else {
                    info.component_cases.push_back("1.3c");
                    auto legs = bull_legs(g.induced(a));
                    if (!legs)
                        throw InvariantError("component with clique number 3, no single hitter and <= 5 vertices is not a bull");
                    lw.weights[std::min(legs->first, legs->second)] = 2;
                    lw.weights[v0] = 1;
                }
            }
        }
    } else {
        std::vector<long long> asz(k), cb(k);
        info.lb.assign(k, 0);
        info.lb_off_v0.assign(k, 0);
        for (std::size_t j = 0; j < k; ++j) {
            const auto& a = decomp.components[j];
            const auto& b = decomp.outside[j];
            asz[j] = static_cast<long long>(a.size());
            if (is_clique_set(g, a)) {
                info.component_cases.push_back("2.1");
                long long sum = 0;
                for (const auto& [w, x] :
                     distinguishing_set_weights(g, DistinguishingInstance{a, b})) {
                    lw.weights[w] = x;
                    sum += x;
                }
                cb[j] = sum;  // equals |A_j| - 1 by the procedure
                info.lb[j] = asz[j] - 1;
                info.lb_off_v0[j] = asz[j] - 1;
            } else {
                int omega = clique_number_up_to_4(g, a);
                if (omega >= 4)
                    throw InvariantError("neighborhood component has clique number > 3; host contains a K5");
                if (omega == 2) {
                    info.component_cases.push_back("2.2");
                    cb[j] = 0;
                    info.lb[j] = 1;
                    info.lb_off_v0[j] = asz[j] - 2;
                } else if (auto hitter = single_vertex_hitter(g, a)) {
                    info.component_cases.push_back("2.3b");
                    auto bprime = build_bprime(g, a, b);
                    for (Vertex w : bprime) lw.weights[w] = 1;
                    cb[j] = static_cast<long long>(bprime.size());
                    info.lb[j] = cb[j] + 1;
                    info.lb_off_v0[j] = asz[j] - 2;
                } else {
                    info.component_cases.push_back("2.3a");
                    cb[j] = 0;
                    info.lb[j] = 2;
                    info.lb_off_v0[j] = asz[j] - 3;
                }
            }
            if (cb[j] > info.lb[j] || cb[j] > asz[j] - 1)
                throw InvariantError("component weights exceed their lower-bound caps");
        }
        long long want = -1;
        for (std::size_t i = 0; i < k; ++i) want += asz[i] + cb[i] - 2 * info.lb[i];
        long long v0w = std::max<long long>(1, want);
        for (std::size_t j = 0; j < k; ++j) {
            long long ub = 2 * info.lb_off_v0[j] - asz[j] - cb[j] + 1;
            for (std::size_t i = 0; i < k; ++i)
                if (i != j) ub += asz[i] - cb[i];
            if (v0w > ub)
                throw InvariantError("v0 weight interval is empty; host violates the rule's preconditions");
        }
        lw.weights[v0] = v0w;
    }

    if (require_clique_cases)
        for (const auto& tag : info.component_cases)
            if (tag != "1.1" && tag != "2.1")
                throw InvariantError("non-clique neighborhood component (case " + tag +
                                     ") on a diamond-free run");

    lw.sn = std::move(info);
    return lw;
}

std::vector<LocalWeighting> weighting_list(const Graph& g, bool diamond_free_mode,
                                           std::size_t max_items) {
    std::vector<LocalWeighting> out;
    if (max_items == 0) return out;
    for_each_induced_c4(g, [&](const std::array<Vertex, 4>& cyc) {
        out.push_back(c4_weighting(g, cyc));
        return out.size() < max_items;
    });
    if (out.size() >= max_items) return out;
    bool c4_free = out.empty();
    bool k5_free = true;
    if (!diamond_free_mode) {
        for_each_k5(g, [&](const std::array<Vertex, 5>& cl) {
            k5_free = false;
            out.push_back(k5_weighting(g, cl));
            return out.size() < max_items;
        });
        if (out.size() >= max_items) return out;
    }
    // The second-neighborhood rule assumes a C4-free and (unless every
    // neighborhood component is a clique) K5-free host, so it only joins the
    // materialized list once the earlier stages are empty.
    if (c4_free && (k5_free || diamond_free_mode) && !is_cluster_graph(g)) {
        Vertex v0 = -1;
        int best = -1;
        for (Vertex v : g.vertices())
            if (g.degree(v) > best) {
                best = g.degree(v);
                v0 = v;
            }
        out.push_back(second_neighborhood_weighting(g, v0, diamond_free_mode));
    }
    return out;
}

LocalWeighting first_weighting(const Graph& g, bool diamond_free_mode) {
    auto list = weighting_list(g, diamond_free_mode, 1);
    if (list.empty())
        throw PreconditionError("first_weighting: graph is a disjoint union of cliques");
    return std::move(list.front());
}

}  // namespace cvd
