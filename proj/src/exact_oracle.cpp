#include "cvd/exact_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "cvd/errors.hpp"

namespace cvd {

bool HittingSet::contains(Vertex v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

namespace {

constexpr int kEnumerationCap = 20;  // 2^20 subsets at most

// Index-compressed view with one adjacency bitmask per vertex.
struct MaskGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;
    std::vector<Vertex> ids;        // index -> original vertex id (ascending)
    std::vector<Rational> cost;

    static MaskGraph build(const Graph& g, const std::map<Vertex, Rational>* costs) {
        MaskGraph m;
        m.n = static_cast<int>(g.vertex_count());
        m.ids.assign(g.vertices().begin(), g.vertices().end());
        m.adj.assign(m.n, 0);
        for (int i = 0; i < m.n; ++i)
            for (Vertex w : g.neighbors(m.ids[i])) {
                auto it = std::lower_bound(m.ids.begin(), m.ids.end(), w);
                m.adj[i] |= std::uint64_t{1} << (it - m.ids.begin());
            }
        if (costs) {
            m.cost.resize(m.n);
            for (int i = 0; i < m.n; ++i) {
                auto it = costs->find(m.ids[i]);
                if (it == costs->end())
                    throw PreconditionError("vertex " + std::to_string(m.ids[i]) + " has no cost");
                if (it->second < 0)
                    throw PreconditionError("negative cost at vertex " + std::to_string(m.ids[i]));
                m.cost[i] = it->second;
            }
        }
        return m;
    }

    std::uint64_t full() const { return m_full(n); }
    static std::uint64_t m_full(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }
};

void check_budget(std::size_t n, const OracleBudget& b, int hard_cap) {
    int limit = std::min(b.max_vertices, hard_cap);
    if (static_cast<int>(n) > limit)
        throw BudgetExceeded("instance has " + std::to_string(n) + " vertices, budget allows " +
                             std::to_string(limit));
}

// Least (middle, a, c) induced P3 inside `mask`, as index triple, or n markers.
struct Triple {
    int a = -1, mid = -1, c = -1;
    bool found() const { return mid >= 0; }
};

Triple find_p3_induced(const MaskGraph& g, std::uint64_t mask) {
    for (int mid = 0; mid < g.n; ++mid) {
        if (!(mask >> mid & 1)) continue;
        std::uint64_t nb = g.adj[mid] & mask;
        for (std::uint64_t rest = nb; rest;) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t nonadj = nb & ~g.adj[a] & ~(std::uint64_t{1} << a);
            nonadj &= ~((std::uint64_t{1} << (a + 1)) - 1);  // want c > a
            if (nonadj) return Triple{a, mid, std::countr_zero(nonadj)};
        }
    }
    return {};
}

Triple find_p3_subgraph(const MaskGraph& g, std::uint64_t mask) {
    for (int mid = 0; mid < g.n; ++mid) {
        if (!(mask >> mid & 1)) continue;
        std::uint64_t nb = g.adj[mid] & mask;
        if (std::popcount(nb) < 2) continue;
        int a = std::countr_zero(nb);
        nb &= nb - 1;
        return Triple{a, mid, std::countr_zero(nb)};
    }
    return {};
}

using P3Finder = Triple (*)(const MaskGraph&, std::uint64_t);

struct BranchSolver {
    const MaskGraph& g;
    P3Finder find;
    const OracleBudget& budget;
    long long nodes = 0;
    std::unordered_map<std::uint64_t, Rational> memo;

    Rational solve(std::uint64_t mask) {
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        if (++nodes > budget.max_branch_nodes)
            throw BudgetExceeded("branch node budget exhausted (" +
                                 std::to_string(budget.max_branch_nodes) + ")");
        Triple t = find(g, mask);
        Rational best;
        if (t.found()) {
            int order[3] = {t.a, t.mid, t.c};
            std::sort(order, order + 3);
            bool first = true;
            for (int v : order) {
                Rational val = g.cost[v] + solve(mask & ~(std::uint64_t{1} << v));
                if (first || val < best) { best = val; first = false; }
            }
        }
        memo.emplace(mask, best);
        return best;
    }

    std::vector<Vertex> reconstruct(std::uint64_t mask) {
        std::vector<Vertex> out;
        while (true) {
            Triple t = find(g, mask);
            if (!t.found()) break;
            Rational total = memo.at(mask);
            int order[3] = {t.a, t.mid, t.c};
            std::sort(order, order + 3);
            for (int v : order) {
                std::uint64_t next = mask & ~(std::uint64_t{1} << v);
                if (g.cost[v] + memo.at(next) == total) {
                    out.push_back(g.ids[v]);
                    mask = next;
                    break;
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

OracleResult run_branching(const WeightedGraph& wg, const OracleBudget& b, P3Finder find) {
    check_budget(wg.graph.vertex_count(), b, 64);
    MaskGraph g = MaskGraph::build(wg.graph, &wg.cost);
    BranchSolver solver{.g = g, .find = find, .budget = b};
    Rational opt = solver.solve(g.full());
    return OracleResult{HittingSet{solver.reconstruct(g.full()), ""}, opt};
}

bool p3_free(const MaskGraph& g, std::uint64_t mask) {
    for (int mid = 0; mid < g.n; ++mid) {
        if (!(mask >> mid & 1)) continue;
        std::uint64_t nb = g.adj[mid] & mask;
        for (std::uint64_t rest = nb; rest;) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            if (nb & ~g.adj[a] & ~(std::uint64_t{1} << a)) return false;
        }
    }
    return true;
}

bool degree_le_one(const MaskGraph& g, std::uint64_t mask) {
    for (int v = 0; v < g.n; ++v) {
        if (!(mask >> v & 1)) continue;
        if (std::popcount(g.adj[v] & mask) > 1) return false;
    }
    return true;
}

OracleResult run_enumeration(const WeightedGraph& wg, const OracleBudget& b,
                             bool (*feasible_remaining)(const MaskGraph&, std::uint64_t)) {
    check_budget(wg.graph.vertex_count(), b, kEnumerationCap);
    MaskGraph g = MaskGraph::build(wg.graph, &wg.cost);
    std::uint64_t full = g.full();
    bool have = false;
    Rational best;
    std::uint64_t best_mask = 0;
    for (std::uint64_t del = 0; del <= full; ++del) {
        if (!feasible_remaining(g, full & ~del)) continue;
        Rational c = 0;
        for (std::uint64_t rest = del; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            c += g.cost[v];
        }
        if (!have || c < best) {
            have = true;
            best = c;
            best_mask = del;
        }
    }
    std::vector<Vertex> out;
    for (std::uint64_t rest = best_mask; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        out.push_back(g.ids[v]);
    }
    return OracleResult{HittingSet{std::move(out), ""}, best};
}

}  // namespace

OracleResult exact_cluster_vd(const WeightedGraph& wg, const OracleBudget& b) {
    return run_branching(wg, b, &find_p3_induced);
}

OracleResult exact_cluster_vd_enumeration(const WeightedGraph& wg, const OracleBudget& b) {
    return run_enumeration(wg, b, &p3_free);
}

OracleResult exact_p3_subgraph_hitting(const WeightedGraph& wg, const OracleBudget& b) {
    return run_branching(wg, b, &find_p3_subgraph);
}

OracleResult exact_p3_subgraph_hitting_enumeration(const WeightedGraph& wg,
                                                   const OracleBudget& b) {
    return run_enumeration(wg, b, &degree_le_one);
}

std::vector<std::vector<Vertex>> enumerate_minimal_hitting_sets(const Graph& g,
                                                                const OracleBudget& b) {
    check_budget(g.vertex_count(), b, kEnumerationCap);
    MaskGraph m = MaskGraph::build(g, nullptr);
    std::uint64_t full = m.full();
    std::vector<char> free_of_p3(std::size_t{1} << m.n);
    for (std::uint64_t s = 0; s <= full; ++s) free_of_p3[s] = p3_free(m, s);
    std::vector<std::vector<Vertex>> out;
    for (std::uint64_t del = 0; del <= full; ++del) {
        std::uint64_t remaining = full & ~del;
        if (!free_of_p3[remaining]) continue;
        bool minimal = true;
        for (std::uint64_t rest = del; rest && minimal;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (free_of_p3[remaining | (std::uint64_t{1} << v)]) minimal = false;
        }
        if (!minimal) continue;
        std::vector<Vertex> set;
        for (std::uint64_t rest = del; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            set.push_back(m.ids[v]);
        }
        out.push_back(std::move(set));
    }
    return out;
}

}  // namespace cvd
