#pragma once
#include <functional>
#include <optional>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/limits.hpp"

namespace satlab {

struct SearchOptions {
  bool minimal_only = false;   // drop witnesses obtainable by blowing up
  bool track_c_prime = false;  // also report the best deficiency at delta >= t
  int jobs = 1;                // parallel subtree workers; 0 = hardware width
  Limits limits{};
};

struct SearchReport {
  std::optional<long long> optimum;  // absent when nothing qualified
  std::vector<Graph> witnesses;      // sorted by order, then canonical form
  long long explored = 0;            // walked graph count, all orders
  int max_n = 0;
  bool exhaustive = false;
  std::optional<long long> c_prime_lower;
};

// Maximum deficiency t|g| - e(g) over K_r-saturated graphs with minimum
// degree exactly t on at most max_n vertices, every attaining graph
// included as a witness (one per isomorphism class). exhaustive is set
// only when a tabled extremal collection certifies the optimum within the
// ceiling; otherwise the optimum is a lower bound for c(r,t).
SearchReport search_c(int r, int t, int max_n, const SearchOptions& opt = {});

// All minimal K_r-saturated graphs with minimum degree t and exactly
// t|g| + k edges, on at most max_n vertices. optimum reports the common
// deficiency -k when witnesses exist. exhaustive is set when the tabled
// collection for these parameters fits entirely under max_n.
SearchReport search_extremal_collection(int r, int t, long long k, int max_n,
                                        const SearchOptions& opt = {});

// Visits every K_r-saturated graph on exactly n vertices, one call per
// isomorphism class. edge_cap < 0 means no cap; otherwise only graphs with
// at most edge_cap edges are visited. Returns the number of K_r-free
// graphs walked. The callback is serialised by a mutex but may run on a
// worker thread when jobs > 1.
long long for_each_saturated(int r, int n, long long edge_cap,
                             const std::function<void(const Graph&)>& fn,
                             const SearchOptions& opt = {});

} // namespace satlab
