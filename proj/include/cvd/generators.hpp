#pragma once

#include <cstdint>
#include <string>

#include "cvd/graph.hpp"

namespace cvd {

/// Deterministic instance generator. Model specs:
///   gnp(n,p)                      each pair independently with probability p
///   planted-clusters(n,k,noise)   k balanced cliques, each pair flipped with
///                                 probability noise
///   vc-pendant(<inner spec>)      inner graph plus a pendant vertex per
///                                 vertex; doubles the vertex count
///   bull-neighborhood             bull plus a vertex adjacent to all of it
///   k5-gadget[(copies)]           5-clique with pendant distinguishers on
///                                 four of its vertices
/// Weights are drawn uniformly from {wmin..wmax} after the structure, from
/// the same stream; the default is unit weights.
WeightedGraph generate(const std::string& model_spec, std::uint64_t seed, long long wmin = 1,
                       long long wmax = 1);

}  // namespace cvd
