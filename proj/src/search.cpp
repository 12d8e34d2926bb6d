#include "satlab/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

#include "satlab/canonical.hpp"
#include "satlab/errors.hpp"
#include "satlab/saturation.hpp"
#include "satlab/satnums.hpp"

namespace satlab {

namespace {

constexpr int kMaxN = 16;  // pair ids are packed into 4+4 bits

using Perm = std::array<uint8_t, 64>;

// Does mask span a k-clique? Vertices are taken in ascending order so each
// clique is tried once.
bool mask_has_clique(const uint64_t* rows, uint64_t mask, int k) {
  if (k <= 0) return true;
  while (std::popcount(mask) >= k) {
    int v = std::countr_zero(mask);
    mask &= mask - 1;
    if (mask_has_clique(rows, rows[v] & mask, k - 1)) return true;
  }
  return false;
}

bool minimal_rows(const uint64_t* rows, int n, int t) {
  for (int v = 0; v < n; ++v) {
    if (std::popcount(rows[v]) != t) continue;
    bool twin = false;
    for (int u = 0; u < n && !twin; ++u)
      twin = (u != v && rows[u] == rows[v]);
    if (!twin) continue;
    uint64_t off = ~(uint64_t{1} << v);
    int min_after = INT_MAX;
    for (int w = 0; w < n; ++w)
      if (w != v)
        min_after = std::min(min_after, std::popcount(rows[w] & off));
    if (min_after == t) return false;
  }
  return true;
}

inline int pack_pair(int u, int v) {  // u < v
  return (u << 4) | v;
}

inline int apply_pair(const Perm& p, int id) {
  int a = p[id >> 4], b = p[id & 15];
  return a < b ? pack_pair(a, b) : pack_pair(b, a);
}

struct Task {
  std::array<uint64_t, kMaxN> rows;
  int e = 0;
  std::vector<Perm> gens;
};

// Saturated-node callback. May tighten the walker-local edge cap through
// the reference (that keeps pruning deterministic per subtree).
using Sink = std::function<void(const uint64_t*, int, long long&)>;

class Walker {
 public:
  Walker(int n, int r, int deficit_t, long long canon_budget, const Sink& sink)
      : n_(n), r_(r), deficit_t_(deficit_t), budget_(canon_budget),
        sink_(sink) {}

  long long cap = -1;  // inclusive edge ceiling, -1 for none
  long long explored = 0;

  // stop_e >= 0 parks nodes with that many edges in out_tasks instead of
  // expanding them (they are not counted as explored here).
  void walk(uint64_t* rows, int e, std::vector<Perm>&& gens, int stop_e,
            std::vector<Task>* out_tasks) {
    if (stop_e >= 0 && e == stop_e) {
      Task t;
      std::copy(rows, rows + n_, t.rows.begin());
      std::fill(t.rows.begin() + n_, t.rows.end(), 0);
      t.e = e;
      t.gens = std::move(gens);
      out_tasks->push_back(std::move(t));
      return;
    }
    ++explored;

    if (cap >= 0 && deficit_t_ >= 0) {
      int deficit = 0;
      for (int v = 0; v < n_; ++v)
        deficit += std::max(0, deficit_t_ - std::popcount(rows[v]));
      if (deficit > 2 * (cap - e)) return;
    }

    // eligible augmentations: non-edges whose insertion keeps K_r out
    int eligible[kMaxN * kMaxN];
    int ne = 0;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) {
        if (rows[u] >> v & 1) continue;
        uint64_t common = rows[u] & rows[v];
        bool ok = r_ == 3 ? common == 0
                          : !mask_has_clique(rows, common, r_ - 2);
        if (ok) eligible[ne++] = pack_pair(u, v);
      }
    if (ne == 0) {
      sink_(rows, e, cap);
      return;
    }
    if (cap >= 0 && e + 1 > cap) return;

    // one candidate per orbit of the automorphism group on eligible pairs
    int cands[kMaxN * kMaxN];
    int nc = 0;
    if (gens.empty()) {
      std::copy(eligible, eligible + ne, cands);
      nc = ne;
    } else {
      bool done[256] = {};
      for (int i = 0; i < ne; ++i) {
        int id = eligible[i];
        if (done[id]) continue;
        cands[nc++] = id;
        int queue[256];
        int head = 0, tail = 0;
        queue[tail++] = id;
        done[id] = true;
        while (head < tail) {
          int cur = queue[head++];
          for (const Perm& g : gens) {
            int nxt = apply_pair(g, cur);
            if (!done[nxt]) {
              done[nxt] = true;
              queue[tail++] = nxt;
            }
          }
        }
      }
    }

    for (int i = 0; i < nc; ++i) {
      int u = cands[i] >> 4, v = cands[i] & 15;
      rows[u] |= uint64_t{1} << v;
      rows[v] |= uint64_t{1} << u;
      std::vector<Perm> child_gens;
      if (accept_child(rows, u, v, child_gens))
        walk(rows, e + 1, std::move(child_gens), stop_e, out_tasks);
      rows[u] &= ~(uint64_t{1} << v);
      rows[v] &= ~(uint64_t{1} << u);
    }
  }

 private:
  // Canonical-augmentation acceptance: the freshly added edge must lie in
  // the automorphism orbit of the canonical deletion edge of the child.
  // The canonical edge maximises (degree pair, neighbour-degree signature
  // pair, canonical position pair); the first two tiers are cheap
  // isomorphism invariants that reject most wrong-order insertions before
  // any canonical labelling runs.
  bool accept_child(const uint64_t* rows, int u, int v,
                    std::vector<Perm>& out_gens) {
    int d[kMaxN];
    for (int w = 0; w < n_; ++w) d[w] = std::popcount(rows[w]);
    auto inv1 = [&](int x, int y) {
      return d[x] < d[y] ? (d[x] << 4 | d[y]) : (d[y] << 4 | d[x]);
    };
    int added = pack_pair(u, v);
    int best1 = -1;
    for (int x = 0; x < n_; ++x) {
      uint64_t m = rows[x] >> (x + 1) << (x + 1);
      while (m) {
        int y = std::countr_zero(m);
        m &= m - 1;
        best1 = std::max(best1, inv1(x, y));
      }
    }
    if (inv1(u, v) != best1) return false;

    int tied[kMaxN * kMaxN];
    int nt = 0;
    for (int x = 0; x < n_; ++x) {
      uint64_t m = rows[x] >> (x + 1) << (x + 1);
      while (m) {
        int y = std::countr_zero(m);
        m &= m - 1;
        if (inv1(x, y) == best1) tied[nt++] = pack_pair(x, y);
      }
    }
    if (nt > 1) {
      uint64_t sig[kMaxN];
      for (int x = 0; x < n_; ++x) {
        uint64_t s = 0, m = rows[x];
        while (m) {
          int w = std::countr_zero(m);
          m &= m - 1;
          s += uint64_t{1} << (4 * d[w]);
        }
        sig[x] = s;
      }
      auto inv2 = [&](int id) {
        uint64_t a = sig[id >> 4], b = sig[id & 15];
        return a < b ? std::pair{b, a} : std::pair{a, b};
      };
      auto best2 = inv2(tied[0]);
      for (int i = 1; i < nt; ++i) best2 = std::max(best2, inv2(tied[i]));
      if (inv2(added) != best2) return false;
      int keep = 0;
      for (int i = 0; i < nt; ++i)
        if (inv2(tied[i]) == best2) tied[keep++] = tied[i];
      nt = keep;
    }

    auto res = canon::canonical_label_raw(rows, n_, budget_);
    int best_pos = -1, kappa = -1;
    for (int i = 0; i < nt; ++i) {
      int pi = res.pos[tied[i] >> 4], pj = res.pos[tied[i] & 15];
      int code = pi < pj ? (pi << 4 | pj) : (pj << 4 | pi);
      if (code > best_pos) {
        best_pos = code;
        kappa = tied[i];
      }
    }
    bool ok = kappa == added;
    if (!ok && !res.gens.empty()) {
      // orbit of the canonical edge under the discovered group
      bool seen[256] = {};
      int queue[256];
      int head = 0, tail = 0;
      queue[tail++] = kappa;
      seen[kappa] = true;
      while (head < tail && !ok) {
        int cur = queue[head++];
        for (const Perm& g : res.gens) {
          int nxt = apply_pair(g, cur);
          if (!seen[nxt]) {
            seen[nxt] = true;
            queue[tail++] = nxt;
            if (nxt == added) {
              ok = true;
              break;
            }
          }
        }
      }
    }
    if (ok) out_gens = std::move(res.gens);
    return ok;
  }

  int n_, r_, deficit_t_;
  long long budget_;
  const Sink& sink_;
};

// Full walk over K_r-free graphs on n vertices: serial up to two edges,
// then frontier subtrees distributed over jobs workers. Determinism does
// not depend on scheduling: every task starts from the same cap.
long long run_walk(int n, int r, int deficit_t, long long cap0, int jobs,
                   long long canon_budget, const Sink& sink) {
  std::array<uint64_t, kMaxN> root{};
  std::vector<Perm> root_gens;
  if (n >= 2) {
    Perm swap01{}, cycle{};
    for (int i = 0; i < 64; ++i) swap01[i] = cycle[i] = uint8_t(i);
    swap01[0] = 1;
    swap01[1] = 0;
    for (int i = 0; i < n; ++i) cycle[i] = uint8_t((i + 1) % n);
    root_gens = {swap01, cycle};
  }

  if (jobs <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    jobs = hw ? static_cast<int>(hw) : 1;
  }
  int stop_e = (jobs > 1 && (cap0 < 0 || cap0 >= 2)) ? 2 : -1;

  Walker first(n, r, deficit_t, canon_budget, sink);
  first.cap = cap0;
  std::vector<Task> tasks;
  first.walk(root.data(), 0, std::move(root_gens), stop_e,
             stop_e >= 0 ? &tasks : nullptr);
  long long explored = first.explored;
  if (tasks.empty()) return explored;

  long long cap1 = first.cap;
  std::atomic<size_t> next{0};
  std::atomic<long long> task_explored{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto body = [&] {
    try {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        Walker w(n, r, deficit_t, canon_budget, sink);
        w.cap = cap1;
        Task& t = tasks[i];
        w.walk(t.rows.data(), t.e, std::move(t.gens), -1, nullptr);
        task_explored.fetch_add(w.explored);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lk(err_mu);
      if (!err) err = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  int width = std::min<int>(jobs, static_cast<int>(tasks.size()));
  pool.reserve(width);
  for (int i = 0; i < width; ++i) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  return explored + task_explored.load();
}

Graph rows_to_graph(const uint64_t* rows, int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    uint64_t m = rows[u] >> (u + 1) << (u + 1);
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      g.add_edge(u, v);
    }
  }
  return g;
}

void validate_search_args(int r, int t, int max_n, const SearchOptions& opt) {
  if (r < 3) throw ParameterError("search: r must be at least 3");
  if (t < r - 2) throw ParameterError("search: t must be at least r-2");
  if (max_n < 1) throw ParameterError("search: max_n must be positive");
  if (max_n > opt.limits.search_n || max_n > kMaxN)
    throw LimitExceeded("search: max_n above the search limit");
}

struct Hit {
  long long def;
  Graph g;
};

void sort_witnesses(std::vector<Graph>& ws, const Limits& lim) {
  std::vector<std::pair<std::string, Graph>> keyed;
  keyed.reserve(ws.size());
  for (Graph& g : ws) {
    std::string key = canonical_form(g, lim);
    keyed.emplace_back(std::move(key), std::move(g));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) {
              if (a.second.order() != b.second.order())
                return a.second.order() < b.second.order();
              return a.first < b.first;
            });
  ws.clear();
  for (auto& [key, g] : keyed) ws.push_back(std::move(g));
}

int min_collection_order(const std::vector<Graph>& gs) {
  int m = INT_MAX;
  for (const Graph& g : gs) m = std::min(m, g.order());
  return m;
}

int max_collection_order(const std::vector<Graph>& gs) {
  int m = 0;
  for (const Graph& g : gs) m = std::max(m, g.order());
  return m;
}

} // namespace

SearchReport search_c(int r, int t, int max_n, const SearchOptions& opt) {
  validate_search_args(r, t, max_n, opt);
  SearchReport rep;
  rep.max_n = max_n;

  // Seed the deficiency record from tabled extremal graphs inside the
  // ceiling; each seed is re-verified, and the walk rediscovers it, so the
  // witness list stays complete while the edge cap starts tight.
  long long best = LLONG_MIN;
  auto kv = known_values(r, t);
  if (kv)
    for (const Graph& g : kv->collection) {
      if (g.order() > max_n) continue;
      auto st = g.stats();
      if (!st.min_degree || *st.min_degree != t) continue;
      if (!is_saturated(g, r)) continue;
      best = std::max(best, deficiency(g, t));
    }

  std::vector<Hit> hits;
  long long cprime = LLONG_MIN;
  std::mutex mu;

  for (int n = t + 1; n <= max_n; ++n) {
    long long cap0 = best == LLONG_MIN ? -1 : static_cast<long long>(t) * n - best;
    if (cap0 >= 0) {
      long long lb = std::max<long long>((static_cast<long long>(t) * n + 1) / 2,
                                         n >= 2 ? n - 1 : 0);
      if (lb > cap0) continue;
    }
    long long tn = static_cast<long long>(t) * n;
    Sink sink = [&, n, tn](const uint64_t* rows, int e, long long& local_cap) {
      int mind = INT_MAX;
      for (int v = 0; v < n; ++v)
        mind = std::min(mind, std::popcount(rows[v]));
      if (n == 1) mind = 0;
      if (mind < t) return;
      long long def = tn - e;
      std::lock_guard<std::mutex> lk(mu);
      if (mind > t) {
        cprime = std::max(cprime, def);
        return;
      }
      cprime = std::max(cprime, def);
      if (def >= best || best == LLONG_MIN) {
        if (!opt.minimal_only || minimal_rows(rows, n, t))
          hits.push_back({def, rows_to_graph(rows, n)});
        best = std::max(best, def);
      }
      long long tighter = tn - def;
      if (local_cap < 0 || tighter < local_cap) local_cap = tighter;
    };
    rep.explored += run_walk(n, r, t, cap0, opt.jobs, opt.limits.canon_nodes,
                             sink);
  }

  if (best != LLONG_MIN) {
    rep.optimum = best;
    for (Hit& h : hits)
      if (h.def == best) rep.witnesses.push_back(std::move(h.g));
    sort_witnesses(rep.witnesses, opt.limits);
  }
  rep.exhaustive = kv && rep.optimum && *rep.optimum == kv->c &&
                   min_collection_order(kv->collection) <= max_n;
  if (opt.track_c_prime && cprime != LLONG_MIN) rep.c_prime_lower = cprime;
  return rep;
}

SearchReport search_extremal_collection(int r, int t, long long k, int max_n,
                                        const SearchOptions& opt) {
  validate_search_args(r, t, max_n, opt);
  SearchReport rep;
  rep.max_n = max_n;

  std::vector<Graph> found;
  std::mutex mu;

  for (int n = t + 1; n <= max_n; ++n) {
    long long tn = static_cast<long long>(t) * n;
    long long cap = tn + k;
    long long lb = std::max<long long>((tn + 1) / 2, n >= 2 ? n - 1 : 0);
    if (cap < lb || cap > static_cast<long long>(n) * (n - 1) / 2) continue;
    Sink sink = [&, n, cap](const uint64_t* rows, int e, long long&) {
      if (e != cap) return;
      int mind = INT_MAX;
      for (int v = 0; v < n; ++v)
        mind = std::min(mind, std::popcount(rows[v]));
      if (mind != t) return;
      if (!minimal_rows(rows, n, t)) return;
      std::lock_guard<std::mutex> lk(mu);
      found.push_back(rows_to_graph(rows, n));
    };
    rep.explored += run_walk(n, r, t, cap, opt.jobs, opt.limits.canon_nodes,
                             sink);
  }

  rep.witnesses = std::move(found);
  sort_witnesses(rep.witnesses, opt.limits);
  if (!rep.witnesses.empty()) rep.optimum = -k;
  auto kv = known_values(r, t);
  rep.exhaustive = kv && kv->c == -k &&
                   max_collection_order(kv->collection) <= max_n;
  return rep;
}

long long for_each_saturated(int r, int n, long long edge_cap,
                             const std::function<void(const Graph&)>& fn,
                             const SearchOptions& opt) {
  if (r < 3) throw ParameterError("for_each_saturated: r must be at least 3");
  if (n < 1) throw ParameterError("for_each_saturated: n must be positive");
  if (n > opt.limits.search_n || n > kMaxN)
    throw LimitExceeded("for_each_saturated: n above the search limit");
  std::mutex mu;
  Sink sink = [&](const uint64_t* rows, int e, long long&) {
    (void)e;
    Graph g = rows_to_graph(rows, n);
    std::lock_guard<std::mutex> lk(mu);
    fn(g);
  };
  return run_walk(n, r, -1, edge_cap < 0 ? -1 : edge_cap, opt.jobs,
                  opt.limits.canon_nodes, sink);
}

} // namespace satlab
