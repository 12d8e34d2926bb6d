#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/limits.hpp"

namespace satlab {

namespace canon {

// Output of the individualisation-refinement search, n <= 64.
struct Result {
  int n = 0;
  std::array<uint8_t, 64> lab{};   // canonical position -> original vertex
  std::array<uint8_t, 64> pos{};   // original vertex -> canonical position
  std::array<uint64_t, 64> rows{}; // adjacency rows under the canonical order
  // Discovered automorphism generators, original -> original maps. With the
  // stabiliser-based pruning below these generate the full group.
  std::vector<std::array<uint8_t, 64>> gens;
  long long nodes = 0;
};

// Canonical labelling of the graph given by adjacency bit rows (bit v of
// rows[u] set iff u~v). Two graphs get identical Result::rows iff they are
// isomorphic. Throws LimitExceeded when the search tree outgrows node_budget.
Result canonical_label_raw(const uint64_t* rows, int n, long long node_budget);

// Orbit partition of the vertices under the generated group.
std::array<uint8_t, 64> vertex_orbits(const Result& r);

} // namespace canon

// Canonical byte string (graph6 of the canonically relabelled graph).
// Equal strings iff isomorphic. Labels are ignored: this is an invariant of
// the underlying unlabelled graph. Throws LimitExceeded when
// g.order() > lim.canonical_n.
std::string canonical_form(const Graph& g, const Limits& lim = Limits{});

bool isomorphic(const Graph& a, const Graph& b, const Limits& lim = Limits{});

// graph6 serialisation of g as-is (no relabelling).
std::string to_graph6(const Graph& g);

} // namespace satlab
