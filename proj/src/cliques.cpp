#include "satlab/cliques.hpp"

#include <algorithm>

#include "satlab/errors.hpp"

namespace satlab {

namespace {

// Greedy colouring of g[cand]; the number of colours bounds the largest
// clique inside cand. Standard Tomita-style bound.
int colour_bound(const Graph& g, const VertexSet& cand) {
  int colours = 0;
  VertexSet left = cand;
  while (!left.empty()) {
    ++colours;
    VertexSet avail = left;
    while (!avail.empty()) {
      int v = avail.first();
      avail.remove(v);
      left.remove(v);
      avail -= g.neighbors(v);
    }
  }
  return colours;
}

void max_clique_rec(const Graph& g, VertexSet cand, int depth, int& best) {
  if (depth + cand.count() <= best) return;
  if (depth + colour_bound(g, cand) <= best) return;
  while (!cand.empty()) {
    if (depth + cand.count() <= best) return;
    int v = cand.first();
    cand.remove(v);
    VertexSet next = cand & g.neighbors(v);
    if (depth + 1 > best && next.empty()) {
      best = depth + 1;
      continue;
    }
    max_clique_rec(g, next, depth + 1, best);
  }
}

bool has_clique_rec(const Graph& g, VertexSet cand, int need) {
  if (need <= 0) return true;
  while (cand.count() >= need) {
    int v = cand.first();
    cand.remove(v);
    if (has_clique_rec(g, cand & g.neighbors(v), need - 1)) return true;
  }
  return false;
}

// Enumerate maximal cliques (Bron-Kerbosch with pivot), keep those of the
// given size.
void maximal_cliques_rec(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                         int want, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    if (r.count() == want) out.push_back(r);
    return;
  }
  // pivot: vertex of p|x with most neighbours in p
  int pivot = -1, best = -1;
  (p | x).for_each([&](int u) {
    int c = (p & g.neighbors(u)).count();
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  VertexSet ext = p - g.neighbors(pivot);
  ext.for_each([&](int v) {
    VertexSet r2 = r;
    r2.add(v);
    maximal_cliques_rec(g, r2, p & g.neighbors(v), x & g.neighbors(v), want, out);
    p.remove(v);
    x.add(v);
  });
}

} // namespace

int clique_number(const Graph& g, const Limits& lim) {
  if (g.order() > lim.clique_n)
    throw LimitExceeded("clique_number: n exceeds configured ceiling");
  if (g.order() == 0) return 0;
  int best = 1;
  max_clique_rec(g, VertexSet::full(g.order()), 0, best);
  return best;
}

bool has_clique(const Graph& g, int k) {
  if (k <= 0) return true;
  if (k > g.order()) return false;
  return has_clique_rec(g, VertexSet::full(g.order()), k);
}

bool has_clique_within(const Graph& g, const VertexSet& inside, int k) {
  if (k <= 0) return true;
  return has_clique_rec(g, inside, k);
}

bool is_kr_free(const Graph& g, int r) {
  if (r < 2) throw ParameterError("is_kr_free: r must be >= 2");
  return !has_clique(g, r);
}

std::vector<VertexSet> max_cliques(const Graph& g, const Limits& lim) {
  int w = clique_number(g, lim);
  std::vector<VertexSet> out;
  if (w == 0) return out;
  maximal_cliques_rec(g, VertexSet(g.order()), VertexSet::full(g.order()),
                      VertexSet(g.order()), w, out);
  return out;
}

VertexSet find_core_subset(const Graph& g, const Limits& lim) {
  if (g.order() > lim.clique_n)
    throw LimitExceeded("find_core_subset: n exceeds configured ceiling");
  VertexSet s = VertexSet::full(g.order());
  while (!s.empty()) {
    Graph h = g.induced(s);
    std::vector<VertexSet> cliques = max_cliques(h, lim);
    if (cliques.empty()) break;
    VertexSet common = cliques.front();
    for (const auto& c : cliques) common &= c;
    if (common.empty()) break;
    // map the chosen vertex back to g's numbering
    std::vector<int> ids = s.to_vector();
    s.remove(ids[common.first()]);
  }
  return s;
}

} // namespace satlab
