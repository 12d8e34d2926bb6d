#include "satlab/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "satlab/errors.hpp"

namespace satlab {
namespace canon {

namespace {

// Ordered partition of 0..n-1: vtx lists the vertices, cell_end bit p set
// when position p closes a cell. Cells are contiguous position ranges and
// are only ever subdivided, so a position permanently names at most one
// live cell start.
struct Partition {
  std::array<uint8_t, 64> vtx{};
  uint64_t cell_end = 0;

  int cell_close(int start, int n) const {
    uint64_t higher = cell_end >> start;
    return start + std::countr_zero(higher);
  }
};

struct Searcher {
  const uint64_t* rows;
  int n;
  long long budget;
  long long nodes = 0;

  bool have_first = false;
  std::array<uint8_t, 64> first_lab{};
  std::array<uint64_t, 64> first_rows{};
  bool have_best = false;
  std::array<uint8_t, 64> best_lab{};
  std::array<uint64_t, 64> best_rows{};
  std::vector<std::array<uint8_t, 64>> gens;

  // Refine to an equitable partition. queue holds cell start positions;
  // total pushes are bounded by n plus n per split, so 64 + 64*64 covers it.
  void refine(Partition& p) const {
    std::array<uint8_t, 4224> queue{};
    uint64_t queued = 0;
    int qh = 0, qt = 0;
    auto push = [&](int s) {
      if (!(queued & (uint64_t(1) << s))) {
        queue[qt++] = uint8_t(s);
        queued |= uint64_t(1) << s;
      }
    };
    for (int s = 0; s < n; s = p.cell_close(s, n) + 1) push(s);
    std::array<uint8_t, 64> cnt{};
    while (qh < qt) {
      int ws = queue[qh++];
      queued &= ~(uint64_t(1) << ws);
      uint64_t wmask = 0;
      int we = p.cell_close(ws, n);
      for (int i = ws; i <= we; ++i) wmask |= uint64_t(1) << p.vtx[i];

      for (int xs = 0; xs < n;) {
        int xe = p.cell_close(xs, n);
        if (xe == xs) {
          xs = xe + 1;
          continue;
        }
        int lo = 64, hi = -1;
        for (int i = xs; i <= xe; ++i) {
          int c = std::popcount(rows[p.vtx[i]] & wmask);
          cnt[p.vtx[i]] = uint8_t(c);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo != hi) {
          // counting sort of the cell by cnt ascending, stable
          std::array<uint8_t, 64> tmp{};
          int m = 0;
          for (int c = lo; c <= hi; ++c)
            for (int i = xs; i <= xe; ++i)
              if (cnt[p.vtx[i]] == c) tmp[m++] = p.vtx[i];
          for (int i = 0; i < m; ++i) p.vtx[xs + i] = tmp[i];
          // close a cell wherever the count changes
          for (int i = xs; i < xe; ++i)
            if (cnt[p.vtx[i]] != cnt[p.vtx[i + 1]])
              p.cell_end |= uint64_t(1) << i;
          // queue every fragment of the split cell
          for (int s = xs; s <= xe; s = p.cell_close(s, n) + 1) push(s);
        }
        xs = xe + 1;
      }
    }
  }

  void leaf(const Partition& p) {
    std::array<uint8_t, 64> lab;
    std::array<uint8_t, 64> pos;
    for (int i = 0; i < n; ++i) {
      lab[i] = p.vtx[i];
      pos[p.vtx[i]] = uint8_t(i);
    }
    std::array<uint64_t, 64> cr{};
    for (int i = 0; i < n; ++i) {
      uint64_t r = rows[lab[i]];
      uint64_t out = 0;
      while (r) {
        int v = std::countr_zero(r);
        r &= r - 1;
        out |= uint64_t(1) << pos[v];
      }
      cr[i] = out;
    }
    auto cmp = [this](const std::array<uint64_t, 64>& a,
                      const std::array<uint64_t, 64>& b) {
      for (int i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    };
    if (!have_first) {
      have_first = true;
      first_lab = lab;
      first_rows = cr;
    } else if (cmp(cr, first_rows) == 0) {
      push_gen(first_lab, lab);
    }
    if (!have_best || cmp(cr, best_rows) < 0) {
      have_best = true;
      best_lab = lab;
      best_rows = cr;
    } else if (cmp(cr, best_rows) == 0 && lab != best_lab) {
      push_gen(best_lab, lab);
    }
  }

  void push_gen(const std::array<uint8_t, 64>& ref,
                const std::array<uint8_t, 64>& lab) {
    std::array<uint8_t, 64> sigma{};
    bool ident = true;
    for (int i = 0; i < n; ++i) {
      sigma[ref[i]] = lab[i];
      if (ref[i] != lab[i]) ident = false;
    }
    if (!ident) gens.push_back(sigma);
  }

  // Union-find over vertices under the generators that fix base pointwise.
  void stab_orbits(const uint8_t* base, int base_len,
                   std::array<uint8_t, 64>& uf) const {
    for (int v = 0; v < n; ++v) uf[v] = uint8_t(v);
    auto find = [&uf](int x) {
      while (uf[x] != x) {
        uf[x] = uf[uf[x]];
        x = uf[x];
      }
      return x;
    };
    for (const auto& s : gens) {
      bool fixes = true;
      for (int i = 0; i < base_len; ++i)
        if (s[base[i]] != base[i]) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n; ++v) {
        int a = find(v), b = find(s[v]);
        if (a != b) uf[a] = uint8_t(b);
      }
    }
    for (int v = 0; v < n; ++v) uf[v] = uint8_t(find(v));
  }

  void rec(const Partition& p, uint8_t* base, int base_len) {
    if (++nodes > budget)
      throw LimitExceeded("canonical_label: node budget exhausted");
    // first non-singleton cell
    int tc = -1;
    for (int s = 0; s < n; s = p.cell_close(s, n) + 1)
      if (p.cell_close(s, n) > s) {
        tc = s;
        break;
      }
    if (tc < 0) {
      leaf(p);
      return;
    }
    int te = p.cell_close(tc, n);
    // candidates ascending by vertex id for determinism
    std::array<uint8_t, 64> cand{};
    int cc = 0;
    for (int i = tc; i <= te; ++i) cand[cc++] = p.vtx[i];
    std::sort(cand.begin(), cand.begin() + cc);

    std::array<uint8_t, 64> done{};
    int dc = 0;
    std::array<uint8_t, 64> uf{};
    for (int ci = 0; ci < cc; ++ci) {
      int v = cand[ci];
      if (dc > 0) {
        stab_orbits(base, base_len, uf);
        bool skip = false;
        for (int j = 0; j < dc; ++j)
          if (uf[done[j]] == uf[v]) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      done[dc++] = uint8_t(v);
      Partition q = p;
      // move v to the front of the cell, close it as a singleton
      int at = tc;
      while (q.vtx[at] != v) ++at;
      for (int i = at; i > tc; --i) q.vtx[i] = q.vtx[i - 1];
      q.vtx[tc] = uint8_t(v);
      q.cell_end |= uint64_t(1) << tc;
      refine(q);
      base[base_len] = uint8_t(v);
      rec(q, base, base_len + 1);
    }
  }
};

} // namespace

Result canonical_label_raw(const uint64_t* rows, int n, long long node_budget) {
  assert(n >= 0 && n <= 64);
  Result res;
  res.n = n;
  if (n == 0) {
    res.nodes = 1;
    return res;
  }
  Searcher s;
  s.rows = rows;
  s.n = n;
  s.budget = node_budget;
  Partition p;
  for (int i = 0; i < n; ++i) p.vtx[i] = uint8_t(i);
  p.cell_end = uint64_t(1) << (n - 1);
  s.refine(p);
  std::array<uint8_t, 64> base{};
  s.rec(p, base.data(), 0);
  res.lab = s.best_lab;
  for (int i = 0; i < n; ++i) res.pos[res.lab[i]] = uint8_t(i);
  res.rows = s.best_rows;
  res.gens = std::move(s.gens);
  res.nodes = s.nodes;
  return res;
}

std::array<uint8_t, 64> vertex_orbits(const Result& r) {
  std::array<uint8_t, 64> uf{};
  for (int v = 0; v < r.n; ++v) uf[v] = uint8_t(v);
  auto find = [&uf](int x) {
    while (uf[x] != x) {
      uf[x] = uf[uf[x]];
      x = uf[x];
    }
    return x;
  };
  for (const auto& s : r.gens)
    for (int v = 0; v < r.n; ++v) {
      int a = find(v), b = find(s[v]);
      if (a != b) uf[a] = uint8_t(b);
    }
  for (int v = 0; v < r.n; ++v) uf[v] = uint8_t(find(v));
  return uf;
}

} // namespace canon

namespace {

// graph6: 6-bit chunks offset by 63, header then the upper triangle read
// column by column.
template <typename Adj>
std::string graph6_bytes(int n, Adj&& adj) {
  std::string out;
  if (n <= 62) {
    out.push_back(char(n + 63));
  } else {
    out.push_back('~');
    out.push_back(char(63 + ((n >> 12) & 63)));
    out.push_back(char(63 + ((n >> 6) & 63)));
    out.push_back(char(63 + (n & 63)));
  }
  int bit = 0;
  char cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      cur = char(cur << 1 | (adj(i, j) ? 1 : 0));
      if (++bit == 6) {
        out.push_back(char(cur + 63));
        bit = 0;
        cur = 0;
      }
    }
  if (bit) out.push_back(char((cur << (6 - bit)) + 63));
  return out;
}

void pack_rows(const Graph& g, uint64_t* rows) {
  int n = g.order();
  for (int v = 0; v < n; ++v) {
    uint64_t r = 0;
    g.neighbors(v).for_each([&](int u) { r |= uint64_t(1) << u; });
    rows[v] = r;
  }
}

} // namespace

std::string canonical_form(const Graph& g, const Limits& lim) {
  int n = g.order();
  if (n > lim.canonical_n)
    throw LimitExceeded("canonical_form: n exceeds configured ceiling");
  assert(n <= 64);
  std::array<uint64_t, 64> rows{};
  pack_rows(g, rows.data());
  canon::Result r = canon::canonical_label_raw(rows.data(), n, lim.canon_nodes);
  return graph6_bytes(
      n, [&](int i, int j) { return (r.rows[i] >> j) & 1; });
}

bool isomorphic(const Graph& a, const Graph& b, const Limits& lim) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, lim) == canonical_form(b, lim);
}

std::string to_graph6(const Graph& g) {
  return graph6_bytes(g.order(),
                      [&](int i, int j) { return g.adjacent(i, j); });
}

} // namespace satlab
