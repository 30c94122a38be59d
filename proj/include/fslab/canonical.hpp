#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fslab/graph.hpp"

namespace fslab {

// Canonical byte form for graphs with n <= 10: [n] followed by the
// lexicographically smallest relabeling of the upper-triangle adjacency
// bits, read column by column ((0,1), (0,2), (1,2), (0,3), ...) and packed
// MSB-first into bytes. Equal byte strings iff the graphs are isomorphic.
std::string canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

// One representative per isomorphism class of connected graphs on n
// vertices, 1 <= n <= 7, in a deterministic order (increasing edge mask of
// the first labeled occurrence).
std::vector<Graph> enumerate_connected(int n);

// Same, without the connectivity filter (all graphs on n vertices).
std::vector<Graph> enumerate_graphs(int n);

}  // namespace fslab
