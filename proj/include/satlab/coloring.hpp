#pragma once
#include "satlab/graph.hpp"
#include "satlab/limits.hpp"

namespace satlab {

// Exact chromatic number: iterate k-colourability upward from a clique
// lower bound, DSATUR-ordered backtracking for each k. Empty graph -> 0.
// Throws LimitExceeded when g.order() > lim.chromatic_n.
int chromatic_number(const Graph& g, const Limits& lim = Limits{});

} // namespace satlab
