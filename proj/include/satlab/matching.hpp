#pragma once
#include <utility>
#include <vector>

#include "satlab/graph.hpp"

namespace satlab {

// Greedy maximal matching: scan vertices in ascending order, match each
// unmatched vertex to its lowest-index unmatched neighbour. Deterministic.
// Any maximal matching's size lower-bounds every vertex cover.
std::vector<std::pair<int, int>> maximal_matching(const Graph& g);

bool is_vertex_cover(const Graph& g, const VertexSet& cover);

} // namespace satlab
