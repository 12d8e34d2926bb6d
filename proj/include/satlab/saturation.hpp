#pragma once
#include "satlab/graph.hpp"

namespace satlab {

// Is g K_r-saturated, r >= 3: K_r-free, and adding any missing edge creates
// a K_r. The second half is checked pairwise: for every non-adjacent u, v
// the common neighbourhood must contain a K_{r-2}. On fewer than r vertices
// this makes complete graphs saturated and nothing else.
bool is_saturated(const Graph& g, int r);

} // namespace satlab
