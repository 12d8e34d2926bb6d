#include "satlab/matching.hpp"

namespace satlab {

std::vector<std::pair<int, int>> maximal_matching(const Graph& g) {
  int n = g.order();
  std::vector<bool> used(n, false);
  std::vector<std::pair<int, int>> m;
  for (int u = 0; u < n; ++u) {
    if (used[u]) continue;
    int pick = -1;
    g.neighbors(u).for_each([&](int v) {
      if (pick < 0 && !used[v]) pick = v;
    });
    if (pick >= 0) {
      used[u] = used[pick] = true;
      m.emplace_back(u, pick);
    }
  }
  return m;
}

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  for (auto [u, v] : g.edge_list())
    if (!cover.contains(u) && !cover.contains(v)) return false;
  return true;
}

} // namespace satlab
