#pragma once
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/limits.hpp"

namespace satlab {

// Exact clique number via branch and bound with a greedy colouring bound.
// Throws LimitExceeded when g.order() > lim.clique_n.
int clique_number(const Graph& g, const Limits& lim = Limits{});

// Does g contain a clique on k vertices? Short-circuiting search, no size
// ceiling: the recursion only ever goes k deep.
bool has_clique(const Graph& g, int k);

// Same question restricted to g[inside].
bool has_clique_within(const Graph& g, const VertexSet& inside, int k);

// K_r-free test, r >= 2.
bool is_kr_free(const Graph& g, int r);

// All maximum cliques (every clique of size clique_number(g)).
// Subject to the same ceiling as clique_number.
std::vector<VertexSet> max_cliques(const Graph& g, const Limits& lim = Limits{});

// Repeatedly delete a vertex lying in every maximum clique of g[s],
// starting from s = V(g), until no such vertex exists. The survivor set s
// satisfies |s| - w(g[s]) = |g| - w(g) and |s| >= 2 w(g[s]).
VertexSet find_core_subset(const Graph& g, const Limits& lim = Limits{});

} // namespace satlab
