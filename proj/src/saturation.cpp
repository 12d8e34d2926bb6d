#include "satlab/saturation.hpp"

#include "satlab/cliques.hpp"
#include "satlab/errors.hpp"

namespace satlab {

bool is_saturated(const Graph& g, int r) {
  if (r < 3) throw ParameterError("is_saturated: r must be >= 3");
  if (!is_kr_free(g, r)) return false;
  int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      VertexSet common = g.neighbors(u) & g.neighbors(v);
      if (r == 3) {
        if (common.empty()) return false;
      } else if (!has_clique_within(g, common, r - 2)) {
        return false;
      }
    }
  }
  return true;
}

} // namespace satlab
