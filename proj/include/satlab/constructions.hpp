#pragma once
#include <utility>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/limits.hpp"

namespace satlab {

// Triangle-saturated family on an independent set S of size 2(t-1) plus one
// vertex per (t-1)-subset of S, in colex order. Subset vertices join their
// elements; two subset vertices join iff disjoint, so they pair up into a
// perfect matching of complements. t >= 3.
//
// Labels: "S" / "R".
Graph build_gt(int t, const Limits& lim = Limits{});

// build_gt plus an apex joined to all of S. Label "apex".
Graph build_gt_prime(int t, const Limits& lim = Limits{});

// Drop all but `keep` complement pairs from a build_gt_prime result,
// keeping the pairs with the lowest vertex indices. Saturation survives for
// every keep >= 0.
Graph remove_matched_pairs(const Graph& gt_prime, int keep);

// build_gt plus three apexes over a triple of maximal independent sets
// covering the graph (S; the subsets through the first S-vertex; the
// remaining subsets plus that vertex), plus one vertex of degree 3 joined
// to the apexes. Labels "apex" and "top".
Graph build_gt_double_prime(int t, const Limits& lim = Limits{});

// Blow-up of build_gt(t-1) doubling every subset vertex. t >= 4.
Graph build_ht(int t, const Limits& lim = Limits{});

// The 10-vertex 3-regular triangle-saturated graph: hub s, spokes x_i,
// rim y_i, z_i with y_i ~ z_j for i != j (i = 1..3). Petersen in disguise.
Graph build_p();

// Same schema with i = 1..4: 13 vertices, 24 edges, min degree 3.
Graph build_q();

// K_{r-2} joined to an independent set of n-(r-2) vertices; the classic
// minimum-size K_r-saturated graph. r >= 2, n >= r-2.
Graph build_ehm(int n, int r, const Limits& lim = Limits{});

Graph build_complete(int n);
Graph build_c5();
Graph build_k22();

struct TightCoverResult {
  Graph graph;
  // Pairwise disjoint edges of `graph`; the size lower-bounds every vertex
  // cover of it.
  std::vector<std::pair<int, int>> matching_certificate;
  char branch = 0;    // 'A' (few edges regime) or 'B'
  int t = 0;          // family parameter actually used
  int conical_added = 0;  // r-3 extra dominating vertices when r > 3
};

// Saturated graph whose vertex-cover number is pinned between a matching
// certificate and a degree-threshold cover, at roughly the requested vertex
// and edge scale. Branch A (e <= n log2 e): blow up the degree-3 vertex of
// build_gt_double_prime(t) by n+1 with 4^t sqrt(t) >= e. Branch B: keep n
// complement pairs of build_gt_prime(t) with 2t-1 >= e/n. For r > 3 the
// r = 3 result gains r-3 conical vertices. Throws Infeasible outside the
// supported regime.
TightCoverResult build_tight_cover(int r, long long n, long long e,
                                   const Limits& lim = Limits{});

} // namespace satlab
