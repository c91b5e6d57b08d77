#pragma once

#include <iosfwd>
#include <string>

#include "cvd/graph.hpp"

namespace cvd {

/// Line-oriented instance format:
///   # comment
///   p cvd <n> <m>
///   v <id> <weight>      (ids 1..n, one line per vertex, weight >= 0)
///   e <u> <v>            (distinct unordered edges, no self-loops)
/// Weights are exact: integers, decimals ("1.25") or fractions ("5/4").
WeightedGraph parse_instance(std::istream& in);
WeightedGraph parse_instance_text(const std::string& text);
WeightedGraph load_instance(const std::string& path);

/// Inverse of parse_instance; requires vertex ids to be exactly 1..n.
/// parse_instance(serialize_instance(g)) == g.
std::string serialize_instance(const WeightedGraph& wg);
void save_instance(const WeightedGraph& wg, const std::string& path);

/// Exact text form of a weight: integer, finite decimal when the denominator
/// is 2^a 5^b, otherwise "p/q".
std::string format_weight(const Rational& r);

}  // namespace cvd
