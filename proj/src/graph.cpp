#include "cvd/graph.hpp"

#include <algorithm>
#include <set>

#include "cvd/errors.hpp"

namespace cvd {

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<Vertex> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i + 1;
    return from_vertices(std::move(vs), edges);
}

Graph Graph::from_vertices(std::vector<Vertex> vertices,
                           const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g;
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw PreconditionError("duplicate vertex id");
    g.verts_ = std::move(vertices);
    g.adj_.assign(g.verts_.size(), {});
    for (auto [u, v] : edges) {
        if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
        int iu = g.index_of(u), iv = g.index_of(v);
        if (iu < 0 || iv < 0)
            throw PreconditionError("edge endpoint not a vertex: " + std::to_string(iu < 0 ? u : v));
        g.adj_[iu].push_back(v);
        g.adj_[iv].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return g;
}

int Graph::index_of(Vertex v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) return -1;
    return static_cast<int>(it - verts_.begin());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    int i = index_of(v);
    if (i < 0) throw PreconditionError("unknown vertex " + std::to_string(v));
    return adj_[i];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u == v) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj_) twice += nb.size();
    return twice / 2;
}

Graph Graph::remove_vertex(Vertex v) const {
    return remove_vertices(std::span<const Vertex>(&v, 1));
}

Graph Graph::remove_vertices(std::span<const Vertex> vs) const {
    std::set<Vertex> drop;
    for (Vertex v : vs) {
        if (index_of(v) < 0) throw PreconditionError("unknown vertex " + std::to_string(v));
        drop.insert(v);
    }
    std::vector<Vertex> keep;
    keep.reserve(verts_.size());
    for (Vertex v : verts_)
        if (!drop.count(v)) keep.push_back(v);
    return induced(keep);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
    Graph g;
    g.verts_.assign(keep.begin(), keep.end());
    std::sort(g.verts_.begin(), g.verts_.end());
    g.verts_.erase(std::unique(g.verts_.begin(), g.verts_.end()), g.verts_.end());
    for (Vertex v : g.verts_)
        if (index_of(v) < 0) throw PreconditionError("unknown vertex " + std::to_string(v));
    g.adj_.assign(g.verts_.size(), {});
    for (std::size_t i = 0; i < g.verts_.size(); ++i) {
        for (Vertex w : neighbors(g.verts_[i]))
            if (std::binary_search(g.verts_.begin(), g.verts_.end(), w))
                g.adj_[i].push_back(w);
    }
    return g;
}

std::vector<std::vector<Vertex>> Graph::components() const {
    std::vector<std::vector<Vertex>> comps;
    std::set<Vertex> seen;
    for (Vertex start : verts_) {
        if (seen.count(start)) continue;
        std::vector<Vertex> comp, queue{start};
        seen.insert(start);
        while (!queue.empty()) {
            Vertex v = queue.back();
            queue.pop_back();
            comp.push_back(v);
            for (Vertex w : neighbors(v))
                if (seen.insert(w).second) queue.push_back(w);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;  // ordered by least vertex: starts scan ascending
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u : verts_)
        for (Vertex v : neighbors(u))
            if (u < v) es.emplace_back(u, v);
    return es;
}

Rational WeightedGraph::cost_of(Vertex v) const {
    auto it = cost.find(v);
    if (it == cost.end()) throw PreconditionError("vertex " + std::to_string(v) + " has no cost");
    return it->second;
}

Rational WeightedGraph::cost_of(std::span<const Vertex> vs) const {
    Rational total = 0;
    for (Vertex v : vs) total += cost_of(v);
    return total;
}

void WeightedGraph::validate() const {
    for (Vertex v : graph.vertices()) {
        Rational c = cost_of(v);
        if (c < 0)
            throw PreconditionError("vertex " + std::to_string(v) + " has negative cost");
    }
}

std::optional<InducedP3> find_induced_p3(const Graph& g) {
    for (Vertex mid : g.vertices()) {
        auto nb = g.neighbors(mid);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.adjacent(nb[i], nb[j])) return InducedP3{nb[i], mid, nb[j]};
    }
    return std::nullopt;
}

bool is_cluster_graph(const Graph& g) {
    for (const auto& comp : g.components())
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                if (!g.adjacent(comp[i], comp[j])) return false;
    return true;
}

namespace {

// N(u) \ {v} == N(v) \ {u}, by merged scan over the sorted lists.
bool same_neighborhood_outside(const Graph& g, Vertex u, Vertex v) {
    auto nu = g.neighbors(u), nv = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < nu.size() || j < nv.size()) {
        if (i < nu.size() && nu[i] == v) { ++i; continue; }
        if (j < nv.size() && nv[j] == u) { ++j; continue; }
        if (i >= nu.size() || j >= nv.size()) return false;
        if (nu[i] != nv[j]) return false;
        ++i; ++j;
    }
    return true;
}

}  // namespace

std::optional<std::pair<Vertex, Vertex>> find_true_twins(const Graph& g) {
    for (Vertex u : g.vertices())
        for (Vertex v : g.neighbors(u)) {
            if (v <= u) continue;
            if (same_neighborhood_outside(g, u, v)) return std::make_pair(u, v);
        }
    return std::nullopt;
}

bool are_true_twins(const Graph& g, Vertex u, Vertex v) {
    return u != v && g.adjacent(u, v) && same_neighborhood_outside(g, u, v);
}

std::vector<Vertex> distinguishers(const Graph& g, Vertex u, Vertex v) {
    if (!g.adjacent(u, v))
        throw PreconditionError("distinguishers: vertices " + std::to_string(u) + " and " +
                                std::to_string(v) + " are not adjacent");
    std::vector<Vertex> out;
    for (Vertex w : g.vertices()) {
        if (w == u || w == v) continue;
        if (g.adjacent(w, u) != g.adjacent(w, v)) out.push_back(w);
    }
    return out;
}

NeighborhoodDecomposition neighborhood_decomposition(const Graph& g, Vertex v0) {
    NeighborhoodDecomposition d;
    d.v0 = v0;
    auto nb = g.neighbors(v0);
    std::vector<Vertex> nbv(nb.begin(), nb.end());
    Graph inner = g.induced(nbv);
    d.components = inner.components();
    for (const auto& comp : d.components) {
        std::vector<Vertex> bi;
        for (Vertex w : g.vertices()) {
            if (w == v0 || g.adjacent(w, v0)) continue;
            for (Vertex a : comp)
                if (g.adjacent(w, a)) { bi.push_back(w); break; }
        }
        d.outside.push_back(std::move(bi));
    }
    return d;
}

void for_each_induced_c4(const Graph& g,
                         const std::function<bool(const std::array<Vertex, 4>&)>& fn) {
    // Canonical traversal (a,b,c,d): a least on the cycle, b its smaller
    // cycle neighbor, c opposite a. Ascending scans give the least witness
    // first and visit each induced 4-cycle exactly once.
    for (Vertex a : g.vertices()) {
        for (Vertex b : g.neighbors(a)) {
            if (b < a) continue;
            for (Vertex c : g.neighbors(b)) {
                if (c <= a || g.adjacent(a, c)) continue;
                for (Vertex d : g.neighbors(c)) {
                    if (d <= b) continue;
                    if (g.adjacent(a, d) && !g.adjacent(b, d))
                        if (!fn({a, b, c, d})) return;
                }
            }
        }
    }
}

void for_each_k5(const Graph& g, const std::function<bool(const std::array<Vertex, 5>&)>& fn) {
    auto vs = g.vertices();
    std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!g.adjacent(vs[i], vs[j])) continue;
            for (std::size_t k = j + 1; k < n; ++k) {
                if (!g.adjacent(vs[i], vs[k]) || !g.adjacent(vs[j], vs[k])) continue;
                for (std::size_t l = k + 1; l < n; ++l) {
                    if (!g.adjacent(vs[i], vs[l]) || !g.adjacent(vs[j], vs[l]) ||
                        !g.adjacent(vs[k], vs[l]))
                        continue;
                    for (std::size_t m = l + 1; m < n; ++m) {
                        if (g.adjacent(vs[i], vs[m]) && g.adjacent(vs[j], vs[m]) &&
                            g.adjacent(vs[k], vs[m]) && g.adjacent(vs[l], vs[m]))
                            if (!fn({vs[i], vs[j], vs[k], vs[l], vs[m]})) return;
                    }
                }
            }
        }
}

std::optional<std::array<Vertex, 4>> find_induced_c4(const Graph& g) {
    std::optional<std::array<Vertex, 4>> out;
    for_each_induced_c4(g, [&](const std::array<Vertex, 4>& cyc) {
        out = cyc;
        return false;
    });
    return out;
}

std::optional<std::array<Vertex, 5>> find_k5(const Graph& g) {
    std::optional<std::array<Vertex, 5>> out;
    for_each_k5(g, [&](const std::array<Vertex, 5>& c) {
        out = c;
        return false;
    });
    return out;
}

bool is_diamond_free(const Graph& g) {
    for (Vertex u : g.vertices())
        for (Vertex v : g.neighbors(u)) {
            if (v < u) continue;
            std::vector<Vertex> common;
            for (Vertex w : g.neighbors(u))
                if (w != v && g.adjacent(w, v)) common.push_back(w);
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j)
                    if (!g.adjacent(common[i], common[j])) return false;
        }
    return true;
}

bool has_induced_p3_through(const Graph& g, Vertex v) {
    auto nb = g.neighbors(v);
    // v as middle
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.adjacent(nb[i], nb[j])) return true;
    // v as endpoint
    for (Vertex b : nb)
        for (Vertex c : g.neighbors(b))
            if (c != v && !g.adjacent(c, v)) return true;
    return false;
}

}  // namespace cvd
