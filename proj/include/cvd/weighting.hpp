#pragma once

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cvd/graph.hpp"

namespace cvd {

enum class WeightingKind { C4, K5Distinguishing, SecondNeighborhood };

/// Diagnostics recorded by second_neighborhood_weighting: which case fired
/// for each component of G[N(v0)] and the per-component lower bounds the
/// v0-weight computation used (k >= 2 only).
struct SecondNeighborhoodInfo {
    Vertex v0;
    std::vector<std::string> component_cases;  // "1.1".."1.3c" / "2.1".."2.3b"
    std::vector<long long> lb;                 // lower bound on OPT_i
    std::vector<long long> lb_off_v0;          // lower bound on OPT'_i
};

/// An induced subgraph H together with a weight function c_H and the ratio
/// alpha its construction guarantees: every inclusionwise minimal hitting set
/// X of the host satisfies c_H(X intersect V(H)) <= alpha * OPT(H, c_H).
struct LocalWeighting {
    std::vector<Vertex> subgraph_vertices;  // sorted V(H)
    std::map<Vertex, Rational> weights;     // zero entries included
    Rational alpha;                         // 2, or 9/4 for K5Distinguishing
    WeightingKind kind;
    std::optional<SecondNeighborhoodInfo> sn;

    Rational total_weight() const;
    /// Sum of weights over the given vertices' intersection with V(H).
    Rational weight_within(std::span<const Vertex> vs) const;
};

/// A clique C plus a disjoint set D containing a distinguisher for every
/// edge of C whose endpoints are true twins in G[C].
struct DistinguishingInstance {
    std::vector<Vertex> clique;
    std::vector<Vertex> distinguishing_set;
};

/// The iterative weighting procedure over a distinguishing set: repeatedly
/// take w in D, let M be the clique edges only w distinguishes (always a
/// matching), give w weight |M|, drop one endpoint per edge of M and drop w.
/// The returned weights sum to |C| - 1. Pick order defaults to ascending;
/// tests may supply any permutation of D.
std::map<Vertex, long long> distinguishing_set_weights(
    const Graph& g, const DistinguishingInstance& inst,
    std::span<const Vertex> pick_order = {});

/// Unit weights on an induced 4-cycle; 2-good with OPT(H, c_H) = 2.
LocalWeighting c4_weighting(const Graph& g, const std::array<Vertex, 4>& cycle);

/// A 5-clique plus a greedily collected distinguishing set, weighted 1 on the
/// clique and by distinguishing_set_weights on D; total 9, alpha 9/4.
/// Requires a twin-free host.
LocalWeighting k5_weighting(const Graph& g, const std::array<Vertex, 5>& clique);

/// The second-neighborhood weighting around v0 (which callers pick of
/// maximum degree): case analysis over the components of G[N(v0)]. Host must
/// be twin-free, C4-free and K5-free (K5s are tolerated when every
/// neighborhood component is a clique, as in diamond-free graphs). With
/// require_clique_cases, any non-clique component raises InvariantError.
LocalWeighting second_neighborhood_weighting(const Graph& g, Vertex v0,
                                             bool require_clique_cases = false);

/// The ordered rule list: induced C4s first, then K5s with distinguishing
/// sets, then the second-neighborhood rule for the least maximum-degree
/// vertex. Host must be twin-free and not a disjoint union of cliques.
/// max_items caps materialization; the solver only ever takes the head.
std::vector<LocalWeighting> weighting_list(
    const Graph& g, bool diamond_free_mode = false,
    std::size_t max_items = std::numeric_limits<std::size_t>::max());

/// Head of weighting_list.
LocalWeighting first_weighting(const Graph& g, bool diamond_free_mode = false);

}  // namespace cvd
