#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cvd/rational.hpp"

namespace cvd {

using Vertex = int;

/// Immutable simple undirected graph. Vertex identifiers are arbitrary
/// distinct ints, kept stable across deletions so that solutions computed on
/// a reduced graph map back to the original instance. All queries scan in
/// ascending vertex order, which is what makes every "find" deterministic.
class Graph {
public:
    Graph() = default;

    // Vertices 1..n.
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);
    static Graph from_vertices(std::vector<Vertex> vertices,
                               const std::vector<std::pair<Vertex, Vertex>>& edges);

    std::span<const Vertex> vertices() const { return verts_; }
    std::span<const Vertex> neighbors(Vertex v) const;
    bool has_vertex(Vertex v) const { return index_of(v) >= 0; }
    bool adjacent(Vertex u, Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const;

    Graph remove_vertex(Vertex v) const;
    Graph remove_vertices(std::span<const Vertex> vs) const;
    Graph induced(std::span<const Vertex> keep) const;

    /// Connected components, each sorted, ordered by least contained vertex.
    std::vector<std::vector<Vertex>> components() const;

    /// All edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<Vertex> verts_;               // sorted
    std::vector<std::vector<Vertex>> adj_;    // parallel to verts_, each sorted
    int index_of(Vertex v) const;
};

struct WeightedGraph {
    Graph graph;
    std::map<Vertex, Rational> cost;

    Rational cost_of(Vertex v) const;
    Rational cost_of(std::span<const Vertex> vs) const;
    /// Every vertex costed, all costs >= 0.
    void validate() const;
};

/// Three vertices a-b-c with edges ab, bc and no edge ac.
struct InducedP3 {
    Vertex endpoint_a;
    Vertex middle;
    Vertex endpoint_b;
    bool operator==(const InducedP3&) const = default;
};

/// v0 together with the components A_i of G[N(v0)] and the sets B_i of
/// vertices outside {v0} u N(v0) seeing A_i. Components and outside lists are
/// ordered by least vertex of A_i.
struct NeighborhoodDecomposition {
    Vertex v0;
    std::vector<std::vector<Vertex>> components;
    std::vector<std::vector<Vertex>> outside;
};

/// Least (middle, endpoint_a, endpoint_b) induced P3, or nullopt if the graph
/// is a disjoint union of cliques.
std::optional<InducedP3> find_induced_p3(const Graph& g);

/// True iff every connected component is a clique. Implemented via the
/// component structure, independently of find_induced_p3.
bool is_cluster_graph(const Graph& g);

/// Least adjacent pair u < u' with identical neighborhoods outside {u,u'}.
std::optional<std::pair<Vertex, Vertex>> find_true_twins(const Graph& g);

bool are_true_twins(const Graph& g, Vertex u, Vertex v);

/// Vertices adjacent to exactly one of u, v. Requires the edge uv.
std::vector<Vertex> distinguishers(const Graph& g, Vertex u, Vertex v);

NeighborhoodDecomposition neighborhood_decomposition(const Graph& g, Vertex v0);

/// Least induced 4-cycle in traversal order (a,b,c,d): a the least cycle
/// vertex, b its smaller cycle neighbor.
std::optional<std::array<Vertex, 4>> find_induced_c4(const Graph& g);

/// Least 5-clique as a sorted vertex array.
std::optional<std::array<Vertex, 5>> find_k5(const Graph& g);

/// Visit induced 4-cycles / 5-cliques in the same deterministic order the
/// find variants use; the callback returns false to stop early.
void for_each_induced_c4(const Graph& g, const std::function<bool(const std::array<Vertex, 4>&)>& fn);
void for_each_k5(const Graph& g, const std::function<bool(const std::array<Vertex, 5>&)>& fn);

/// No induced K4-minus-an-edge; equivalently every edge's common
/// neighborhood is a clique.
bool is_diamond_free(const Graph& g);

/// Whether some induced P3 of g uses vertex v. Used by the zero-cost lift,
/// where v is the only vertex being restored.
bool has_induced_p3_through(const Graph& g, Vertex v);

}  // namespace cvd
