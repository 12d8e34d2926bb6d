#include "satlab/satnums.hpp"

#include <algorithm>

#include "satlab/binom.hpp"
#include "satlab/constructions.hpp"
#include "satlab/errors.hpp"
#include "satlab/matching.hpp"
#include "satlab/saturation.hpp"

namespace satlab {

long long sat_formula(long long n, int r) {
  if (r < 2) throw ParameterError("sat_formula: r must be at least 2");
  if (n < r - 2) throw ParameterError("sat_formula: n must be at least r-2");
  return (r - 2) * n - binom_ll(r - 1, 2);
}

long long deficiency(const Graph& g, int t) {
  return static_cast<long long>(t) * g.order() - g.edge_count();
}

LowerBounds c_lower_bounds(int t, const Limits& lim) {
  if (t < 3) throw ParameterError("c_lower_bounds: t must be at least 3");
  LowerBounds out;
  out.via_gt = binom_ll(2 * (t - 1), t - 1) / 2 + 2LL * t * (t - 1);
  long long gt_order = 2 * (t - 1) + binom_ll(2 * (t - 1), t - 1);
  if (gt_order <= lim.construct_n &&
      deficiency(build_gt(t, lim), t) != out.via_gt)
    throw Error("c_lower_bounds: closed form disagrees with construction");
  if (t >= 4) {
    out.via_ht = 2 * binom_ll(2 * (t - 2), t - 2) + 2LL * t * (t - 2);
    long long ht_order = 2 * (t - 2) + 2 * binom_ll(2 * (t - 2), t - 2);
    if (ht_order <= lim.construct_n &&
        deficiency(build_ht(t, lim), t) != *out.via_ht)
      throw Error("c_lower_bounds: closed form disagrees with construction");
  }
  return out;
}

std::optional<KnownValue> known_values(int r, int t) {
  if (r < 3) return std::nullopt;
  KnownValue kv;
  if (t == r - 2) {
    kv.c = binom_ll(r - 1, 2);
    kv.collection.push_back(build_complete(r - 1));
    kv.c_prime_collection.emplace();  // known to be empty
  } else if (t == r - 1) {
    kv.c = binom_ll(r, 2) + 2;
    kv.collection.push_back(add_conical(build_c5(), r - 3));
    if (r == 3) {
      kv.c_prime = 5;
      kv.c_prime_collection.emplace();
      kv.c_prime_collection->push_back(build_p());
    }
  } else if (t == r) {
    kv.c = binom_ll(r + 1, 2) + 9;
    kv.collection.push_back(add_conical(build_p(), r - 3));
    kv.collection.push_back(add_conical(build_q(), r - 3));
  } else {
    return std::nullopt;
  }
  return kv;
}

ShiftCheck lemma_shift_check(int r, int t, int s) {
  if (r < 3 || t < r - 2 || s < 0)
    throw ParameterError("lemma_shift_check: need r >= 3, t >= r-2, s >= 0");
  auto kv = known_values(r, t);
  if (!kv) throw UnknownValue("lemma_shift_check: c(r,t) not tabled");
  ShiftCheck out;
  out.rhs = kv->c + static_cast<long long>(t) * s + binom_ll(s + 1, 2);
  bool any = false;
  for (const Graph& w : kv->collection) {
    Graph lifted = add_conical(w, s);
    auto st = lifted.stats();
    if (!st.min_degree || *st.min_degree != t + s) continue;
    if (!is_saturated(lifted, r + s)) continue;
    long long def = deficiency(lifted, t + s);
    if (!any || def > out.lhs_lower) out.lhs_lower = def;
    any = true;
  }
  out.holds = any && out.lhs_lower >= out.rhs;
  return out;
}

long long f_value(const Graph& g, int t) {
  long long count = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > t) continue;
    bool hit = false;
    g.neighbors(v).for_each([&](int w) {
      if (g.degree(w) <= t) hit = true;
    });
    if (hit) ++count;
  }
  return count;
}

VertexSet cover_from_threshold(const Graph& g, int t) {
  VertexSet cover(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > t) {
      cover.add(v);
      continue;
    }
    bool hit = false;
    g.neighbors(v).for_each([&](int w) {
      if (g.degree(w) <= t) hit = true;
    });
    if (hit) cover.add(v);
  }
  if (!is_vertex_cover(g, cover))
    throw NotACover("cover_from_threshold: degree-threshold set misses an edge");
  return cover;
}

Graph twin_contract(const Graph& g) {
  Graph cur = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < cur.order() && !changed; ++u)
      for (int v = u + 1; v < cur.order() && !changed; ++v)
        if (cur.neighbors(u) == cur.neighbors(v)) {
          cur = cur.without_vertex(v);
          changed = true;
        }
  }
  return cur;
}

} // namespace satlab
