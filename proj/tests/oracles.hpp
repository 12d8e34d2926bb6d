#pragma once
// Slow reference implementations the fast library code is tested against.
// Everything here prefers the obvious definition over cleverness.
#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/set_systems.hpp"

namespace oracles {

inline bool has_clique(const satlab::Graph& g, int k) {
  if (k <= 0) return true;
  std::vector<int> idx(k);
  std::function<bool(int, int)> go = [&](int pos, int lo) -> bool {
    if (pos == k) return true;
    for (int v = lo; v < g.order(); ++v) {
      bool ok = true;
      for (int i = 0; i < pos; ++i)
        if (!g.adjacent(idx[i], v)) {
          ok = false;
          break;
        }
      if (ok) {
        idx[pos] = v;
        if (go(pos + 1, v + 1)) return true;
      }
    }
    return false;
  };
  return go(0, 0);
}

inline bool is_saturated(satlab::Graph g, int r) {
  if (oracles::has_clique(g, r)) return false;
  int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      g.add_edge(u, v);
      bool creates = oracles::has_clique(g, r);
      g.remove_edge(u, v);
      if (!creates) return false;
    }
  return true;
}

// Exhaustive, n <= 20 or so.
inline int max_clique(const satlab::Graph& g) {
  int n = g.order(), best = 0;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) ok = false;
    if (ok) best = size;
  }
  return best;
}

// Exhaustive minimum vertex cover, n <= 20 or so.
inline int min_cover(const satlab::Graph& g) {
  int n = g.order();
  auto edges = g.edge_list();
  int best = n;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size >= best) continue;
    bool ok = true;
    for (auto [u, v] : edges)
      if (!(mask >> u & 1) && !(mask >> v & 1)) {
        ok = false;
        break;
      }
    if (ok) best = size;
  }
  return best;
}

inline int chromatic(const satlab::Graph& g, int cap = 16) {
  int n = g.order();
  if (n == 0) return 0;
  std::vector<int> color(n, -1);
  std::function<bool(int, int)> go = [&](int v, int k) -> bool {
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      g.neighbors(v).for_each([&](int w) {
        if (color[w] == c) ok = false;
      });
      if (!ok) continue;
      color[v] = c;
      if (go(v + 1, k)) return true;
      color[v] = -1;
    }
    return false;
  };
  for (int k = 1; k <= cap; ++k) {
    std::fill(color.begin(), color.end(), -1);
    if (go(0, k)) return k;
  }
  return cap;
}

// Every labeled graph on n vertices, 2^binom(n,2) of them. n <= 6 in tests.
template <class F>
void for_all_graphs(int n, F&& f) {
  int m = n * (n - 1) / 2;
  for (uint64_t mask = 0; mask < (1ull << m); ++mask) {
    satlab::Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if (mask >> bit & 1) g.add_edge(u, v);
    f(g);
  }
}

// Longest verifying system by plain enumeration over a ground of g
// elements, every extension re-verified from scratch. All flavors are
// prefix-closed (later pairs only add conditions), so dead prefixes prune.
inline long long sys_max(const satlab::FlavorSpec& f, int g, int len_cap) {
  using namespace satlab;
  auto to_set = [](unsigned m) {
    IntSet s;
    for (int i = 0; m; ++i, m >>= 1)
      if (m & 1) s.push_back(i);
    return s;
  };
  unsigned all = (1u << g) - 1;
  long long best = 0;

  if (f.kind == Flavor::degenerate) {
    for (unsigned bm = 0; bm <= all; ++bm) {
      DegenerateSystem sys;
      sys.b_set = to_set(bm);
      std::function<void()> go = [&] {
        best = std::max(best, (long long)sys.blocks.size());
        if ((long long)sys.blocks.size() >= len_cap) return;
        for (unsigned A = 0; A <= all; ++A) {
          sys.blocks.push_back(to_set(A));
          if (verify(sys, f)) go();
          sys.blocks.pop_back();
        }
      };
      if (verify(sys, f)) go();
    }
    return best;
  }

  if (f.kind == Flavor::variable || f.kind == Flavor::generalised) {
    AnnotatedSystem sys;
    std::function<void()> go = [&] {
      best = std::max(best, (long long)sys.triples.size());
      if ((long long)sys.triples.size() >= len_cap) return;
      for (unsigned A = 0; A <= all; ++A)
        for (unsigned B = 0; B <= all; ++B) {
          if (f.kind == Flavor::variable) {
            for (long long e = std::max(0LL, 1 - f.b); e <= f.c; ++e) {
              sys.triples.push_back({to_set(A), to_set(B), e, std::nullopt});
              if (verify(sys, f)) go();
              sys.triples.pop_back();
            }
          } else {
            unsigned ab = A & B;
            for (unsigned C = 0; C <= ab; ++C) {
              if ((C & ab) != C) continue;
              sys.triples.push_back({to_set(A), to_set(B), std::nullopt, to_set(C)});
              if (verify(sys, f)) go();
              sys.triples.pop_back();
            }
          }
        }
    };
    go();
    return best;
  }

  SetPairSystem sys;
  std::function<void()> go = [&] {
    best = std::max(best, (long long)sys.pairs.size());
    if ((long long)sys.pairs.size() >= len_cap) return;
    for (unsigned A = 0; A <= all; ++A)
      for (unsigned B = 0; B <= all; ++B) {
        sys.pairs.push_back({to_set(A), to_set(B)});
        if (verify(sys, f)) go();
        sys.pairs.pop_back();
      }
  };
  go();
  return best;
}

} // namespace oracles
