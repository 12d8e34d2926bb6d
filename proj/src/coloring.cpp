#include "satlab/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "satlab/errors.hpp"

namespace satlab {

namespace {

// Greedy clique: seed with a max-degree vertex, always extend with the
// candidate of largest degree. Only used as a lower bound.
int greedy_clique(const Graph& g) {
  int n = g.order();
  if (n == 0) return 0;
  int start = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) > g.degree(start)) start = v;
  VertexSet cand = g.neighbors(start);
  int size = 1;
  while (!cand.empty()) {
    int pick = -1, best = -1;
    cand.for_each([&](int v) {
      int d = (cand & g.neighbors(v)).count();
      if (d > best) {
        best = d;
        pick = v;
      }
    });
    ++size;
    cand &= g.neighbors(pick);
  }
  return size;
}

struct ColourSearch {
  const Graph& g;
  int k;
  std::vector<int> colour;            // -1 = unset
  std::vector<uint64_t> forbidden;    // bitmask of neighbour colours
  int coloured = 0;
  int used = 0;  // colours used so far; new colours tried lowest-first only

  explicit ColourSearch(const Graph& gg, int kk)
      : g(gg), k(kk), colour(gg.order(), -1), forbidden(gg.order(), 0) {}

  bool run() { return rec(); }

  bool rec() {
    int n = g.order();
    if (coloured == n) return true;
    // DSATUR: most saturated uncoloured vertex, ties by degree
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      int sat = std::popcount(forbidden[v]);
      int deg = g.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best_sat = sat;
        best_deg = deg;
        pick = v;
      }
    }
    int cap = std::min(k, used + 1);  // first unused colour breaks symmetry
    for (int c = 0; c < cap; ++c) {
      if ((forbidden[pick] >> c) & 1) continue;
      colour[pick] = c;
      ++coloured;
      int old_used = used;
      used = std::max(used, c + 1);
      std::vector<std::pair<int, uint64_t>> undo;
      g.neighbors(pick).for_each([&](int w) {
        if (!((forbidden[w] >> c) & 1)) {
          undo.emplace_back(w, forbidden[w]);
          forbidden[w] |= uint64_t(1) << c;
        }
      });
      if (rec()) return true;
      for (auto& [w, old] : undo) forbidden[w] = old;
      used = old_used;
      --coloured;
      colour[pick] = -1;
    }
    return false;
  }
};

} // namespace

int chromatic_number(const Graph& g, const Limits& lim) {
  int n = g.order();
  if (n > lim.chromatic_n)
    throw LimitExceeded("chromatic_number: n exceeds configured ceiling");
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  int lb = std::max(2, greedy_clique(g));
  for (int k = lb; k < n; ++k) {
    if (k >= 64) throw LimitExceeded("chromatic_number: colour mask width");
    ColourSearch cs(g, k);
    if (cs.run()) return k;
  }
  return n;
}

} // namespace satlab
