#pragma once

#include "cvd/graph.hpp"
#include "cvd/hitting_set.hpp"

namespace cvd {

/// Exact solvers refuse instances beyond these limits instead of running
/// unbounded. Enumeration-based routines additionally cap at 2^20 subsets.
struct OracleBudget {
    int max_vertices = 26;
    long long max_branch_nodes = 20'000'000;
};

struct OracleResult {
    HittingSet set;
    Rational cost;
};

/// Minimum-cost induced-P3 hitting set by 3-way branching on an induced P3,
/// memoized on the remaining vertex set. Throws BudgetExceeded.
OracleResult exact_cluster_vd(const WeightedGraph& wg, const OracleBudget& b = {});

/// Same optimum by plain subset enumeration; the independent cross-check for
/// the branching solver.
OracleResult exact_cluster_vd_enumeration(const WeightedGraph& wg, const OracleBudget& b = {});

/// Minimum-cost set meeting every 3-vertex path subgraph (paths need not be
/// induced). Same branching scheme.
OracleResult exact_p3_subgraph_hitting(const WeightedGraph& wg, const OracleBudget& b = {});

OracleResult exact_p3_subgraph_hitting_enumeration(const WeightedGraph& wg,
                                                   const OracleBudget& b = {});

/// All inclusionwise minimal hitting sets, each sorted, in ascending subset
/// order. Intended for small hosts (n <= 12).
std::vector<std::vector<Vertex>> enumerate_minimal_hitting_sets(const Graph& g,
                                                                const OracleBudget& b = {});

}  // namespace cvd
