#pragma once

#include <cstdint>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

// Canonical adjacency code: least upper-triangle bitmask over all vertex
// orders. Exhaustive over permutations, so only for n <= 8.
std::uint64_t canonical_code(const Graph& g);

// Every connected graph on n vertices up to isomorphism (1 <= n <= 8),
// ordered by canonical code.
std::vector<Graph> connected_graphs(int n);

}  // namespace recolor
