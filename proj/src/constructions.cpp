#include "satlab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "satlab/binom.hpp"
#include "satlab/errors.hpp"

namespace satlab {

namespace {

// Next mask with the same popcount (Gosper). Caller checks the range.
uint64_t next_subset(uint64_t m) {
  uint64_t c = m & -m;
  uint64_t r = m + c;
  return (((r ^ m) >> 2) / c) | r;
}

// Position of mask among same-size subsets in ascending mask order
// (combinatorial number system).
long long subset_rank(uint64_t mask) {
  long long rank = 0;
  int j = 1;
  for (int i = 0; i < 64; ++i)
    if (mask >> i & 1) rank += binom_ll(i, j++);
  return rank;
}

Graph copy_with_extra(const Graph& g, int extra) {
  Graph out(g.order() + extra);
  for (auto [u, v] : g.edge_list()) out.add_edge(u, v);
  for (int v = 0; v < g.order(); ++v) out.set_label(v, g.label(v));
  return out;
}

// Complement pairs inside the subset block, in first-seen (leader) order.
std::vector<std::pair<int, int>> subset_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<char> seen(g.order(), 0);
  for (int u = 0; u < g.order(); ++u) {
    if (g.label(u) != "R" || seen[u]) continue;
    int partner = -1, inside = 0;
    g.neighbors(u).for_each([&](int w) {
      if (g.label(w) == "R") {
        partner = w;
        ++inside;
      }
    });
    if (inside != 1 || seen[partner])
      throw ParameterError("subset block is not a perfect matching");
    seen[u] = seen[partner] = 1;
    pairs.emplace_back(u, partner);
  }
  return pairs;
}

} // namespace

Graph build_gt(int t, const Limits& lim) {
  if (t < 3) throw ParameterError("build_gt: t must be at least 3");
  int s = 2 * (t - 1);
  long long r_count = binom_ll(s, t - 1);
  if (s + r_count > lim.construct_n)
    throw LimitExceeded("build_gt: order exceeds construct limit");
  Graph g(static_cast<int>(s + r_count));
  for (int v = 0; v < s; ++v) g.set_label(v, "S");
  uint64_t full = (uint64_t{1} << s) - 1;
  uint64_t mask = (uint64_t{1} << (t - 1)) - 1;
  for (long long i = 0; i < r_count; ++i) {
    int idx = s + static_cast<int>(i);
    g.set_label(idx, "R");
    for (int b = 0; b < s; ++b)
      if (mask >> b & 1) g.add_edge(b, idx);
    uint64_t partner = full ^ mask;
    if (partner > mask)
      g.add_edge(idx, s + static_cast<int>(subset_rank(partner)));
    mask = next_subset(mask);
  }
  return g;
}

Graph build_gt_prime(int t, const Limits& lim) {
  Limits inner = lim;
  inner.construct_n = lim.construct_n - 1;
  Graph gt = build_gt(t, inner);
  Graph g = copy_with_extra(gt, 1);
  int apex = gt.order();
  g.set_label(apex, "apex");
  for (int v = 0; v < 2 * (t - 1); ++v) g.add_edge(v, apex);
  return g;
}

Graph remove_matched_pairs(const Graph& gt_prime, int keep) {
  int s = 0, r = 0, apex = 0;
  for (int v = 0; v < gt_prime.order(); ++v) {
    const std::string& l = gt_prime.label(v);
    if (l == "S") ++s;
    else if (l == "R") ++r;
    else if (l == "apex") ++apex;
    else throw ParameterError("remove_matched_pairs: unexpected label");
  }
  if (apex != 1 || s < 4 || s % 2 != 0 || r != binom_ll(s, s / 2))
    throw ParameterError("remove_matched_pairs: not a recognisable apex family graph");
  if (keep < 0 || 2 * keep > r)
    throw ParameterError("remove_matched_pairs: keep out of range");

  auto pairs = subset_pairs(gt_prime);
  VertexSet take(gt_prime.order());
  for (int v = 0; v < gt_prime.order(); ++v)
    if (gt_prime.label(v) != "R") take.add(v);
  for (int i = 0; i < keep; ++i) {
    take.add(pairs[i].first);
    take.add(pairs[i].second);
  }
  return gt_prime.induced(take);
}

Graph build_gt_double_prime(int t, const Limits& lim) {
  Limits inner = lim;
  inner.construct_n = lim.construct_n - 4;
  Graph gt = build_gt(t, inner);
  int n0 = gt.order();
  int s = 2 * (t - 1);
  Graph g = copy_with_extra(gt, 4);
  int a1 = n0, a2 = n0 + 1, a3 = n0 + 2, z = n0 + 3;
  g.set_label(a1, "apex");
  g.set_label(a2, "apex");
  g.set_label(a3, "apex");
  g.set_label(z, "top");
  for (int v = 0; v < s; ++v) g.add_edge(v, a1);
  // Subset vertices are laid out in ascending mask order, so bit 0 of the
  // mask tells which independent set a subset vertex belongs to. Rebuild
  // the masks the same way build_gt laid them down.
  uint64_t mask = (uint64_t{1} << (t - 1)) - 1;
  for (int v = s; v < n0; ++v) {
    g.add_edge(v, (mask & 1) ? a2 : a3);
    mask = next_subset(mask);
  }
  g.add_edge(0, a3);  // x itself completes the third independent set
  g.add_edge(a1, z);
  g.add_edge(a2, z);
  g.add_edge(a3, z);
  return g;
}

Graph build_ht(int t, const Limits& lim) {
  if (t < 4) throw ParameterError("build_ht: t must be at least 4");
  Limits inner = lim;
  // The blow-up doubles the subset block, so budget the base graph at half.
  inner.construct_n = lim.construct_n / 2;
  Graph base = build_gt(t - 1, inner);
  std::vector<int> mult(base.order(), 2);
  for (int v = 0; v < 2 * (t - 2); ++v) mult[v] = 1;
  return blow_up(base, mult);
}

namespace {

Graph build_pq_schema(int k) {
  Graph g(1 + 3 * k);
  auto x = [&](int i) { return 1 + i; };
  auto y = [&](int i) { return 1 + k + i; };
  auto z = [&](int i) { return 1 + 2 * k + i; };
  g.set_label(0, "s");
  for (int i = 0; i < k; ++i) {
    std::string suffix = std::to_string(i + 1);
    g.set_label(x(i), "x" + suffix);
    g.set_label(y(i), "y" + suffix);
    g.set_label(z(i), "z" + suffix);
    g.add_edge(0, x(i));
    g.add_edge(x(i), y(i));
    g.add_edge(x(i), z(i));
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) g.add_edge(y(i), z(j));
  return g;
}

} // namespace

Graph build_p() { return build_pq_schema(3); }

Graph build_q() { return build_pq_schema(4); }

Graph build_ehm(int n, int r, const Limits& lim) {
  if (r < 2) throw ParameterError("build_ehm: r must be at least 2");
  if (n < r - 2) throw ParameterError("build_ehm: n must be at least r-2");
  if (n > lim.construct_n)
    throw LimitExceeded("build_ehm: order exceeds construct limit");
  Graph g(n);
  for (int u = 0; u < r - 2; ++u) {
    g.set_label(u, "K");
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  for (int v = r - 2; v < n; ++v) g.set_label(v, "I");
  return g;
}

Graph build_complete(int n) {
  if (n < 0) throw ParameterError("build_complete: negative order");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph build_c5() {
  return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

Graph build_k22() {
  return Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

namespace {

// Pairs kept with the lowest indices first, built without materialising the
// full family graph: the leaders are exactly the subsets avoiding the top
// element of S, taken in ascending mask order.
Graph direct_trimmed_apex_family(int t, long long keep) {
  int s = 2 * (t - 1);
  uint64_t full = (uint64_t{1} << s) - 1;
  std::vector<uint64_t> masks;
  masks.reserve(2 * keep);
  uint64_t leader = (uint64_t{1} << (t - 1)) - 1;
  for (long long i = 0; i < keep; ++i) {
    masks.push_back(leader);
    masks.push_back(full ^ leader);
    leader = next_subset(leader);
  }
  std::sort(masks.begin(), masks.end());

  int n = s + static_cast<int>(2 * keep) + 1;
  Graph g(n);
  int apex = n - 1;
  for (int v = 0; v < s; ++v) {
    g.set_label(v, "S");
    g.add_edge(v, apex);
  }
  g.set_label(apex, "apex");
  for (size_t i = 0; i < masks.size(); ++i) {
    int idx = s + static_cast<int>(i);
    g.set_label(idx, "R");
    for (int b = 0; b < s; ++b)
      if (masks[i] >> b & 1) g.add_edge(b, idx);
    uint64_t partner = full ^ masks[i];
    if (partner > masks[i]) {
      auto it = std::lower_bound(masks.begin(), masks.end(), partner);
      g.add_edge(idx, s + static_cast<int>(it - masks.begin()));
    }
  }
  return g;
}

} // namespace

TightCoverResult build_tight_cover(int r, long long n, long long e,
                                   const Limits& lim) {
  if (r < 3) throw ParameterError("build_tight_cover: r must be at least 3");
  if (n < 1 || e < 1)
    throw ParameterError("build_tight_cover: n and e must be positive");
  // The target is only achievable near the sparse-to-dense window, with a
  // factor-4 slack on both sides.
  if (4 * e < static_cast<long long>(r) * n)
    throw Infeasible("build_tight_cover: too few edges for the vertex scale");
  if (e > 4 * n * n)
    throw Infeasible("build_tight_cover: too many edges for the vertex scale");

  bool few_edges =
      static_cast<double>(e) <=
      static_cast<double>(n) * std::log2(static_cast<double>(e));

  Graph g3;
  char branch;
  int t = 3;
  if (few_edges) {
    branch = 'A';
    while (std::pow(4.0, t) * std::sqrt(static_cast<double>(t)) <
           static_cast<double>(e))
      ++t;
    long long order =
        2 * (t - 1) + binom_ll(2 * (t - 1), t - 1) + 4 + n;
    if (order > lim.construct_n)
      throw Infeasible("build_tight_cover: no t within the vertex limit");
    Graph core = build_gt_double_prime(t, lim);
    std::vector<int> mult(core.order(), 1);
    mult[core.order() - 1] = static_cast<int>(n) + 1;
    g3 = blow_up(core, mult);
  } else {
    branch = 'B';
    while (2 * t - 1 < (e + n - 1) / n || binom_ll(2 * t - 3, t - 1) < n) {
      ++t;
      if (2 * n + 2 * t - 1 > lim.construct_n)
        throw Infeasible("build_tight_cover: no t within the vertex limit");
    }
    if (2 * n + 2 * t - 1 > lim.construct_n)
      throw Infeasible("build_tight_cover: no t within the vertex limit");
    g3 = direct_trimmed_apex_family(t, n);
  }

  int conical = r - 3;
  TightCoverResult out;
  out.matching_certificate = subset_pairs(g3);
  out.graph = conical > 0 ? add_conical(g3, conical) : std::move(g3);
  out.branch = branch;
  out.t = t;
  out.conical_added = conical;
  return out;
}

} // namespace satlab
