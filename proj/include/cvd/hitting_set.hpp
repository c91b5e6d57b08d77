#pragma once

#include <string>
#include <vector>

#include "cvd/graph.hpp"

namespace cvd {

/// A deletion set: feasible when G - X is a disjoint union of cliques,
/// i.e. X meets every induced P3 of the target instance.
struct HittingSet {
    std::vector<Vertex> vertices;  // sorted
    std::string target;            // instance identifier, empty = anonymous

    bool contains(Vertex v) const;
};

}  // namespace cvd
