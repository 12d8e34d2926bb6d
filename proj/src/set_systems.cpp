#include "satlab/set_systems.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <functional>
#include <iterator>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "satlab/binom.hpp"
#include "satlab/errors.hpp"

namespace satlab {

namespace {

int isect_size(const IntSet& x, const IntSet& y) {
  int n = 0;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else { ++n; ++i; ++j; }
  }
  return n;
}

IntSet isect(const IntSet& x, const IntSet& y) {
  IntSet r;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                        std::back_inserter(r));
  return r;
}

IntSet unite(const IntSet& x, const IntSet& y) {
  IntSet r;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(),
                 std::back_inserter(r));
  return r;
}

bool subset_of(const IntSet& x, const IntSet& y) {
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

// |x minus y|
int diff_size(const IntSet& x, const IntSet& y) {
  return (int)x.size() - isect_size(x, y);
}

int span_of(const IntSet& s) { return s.empty() ? 0 : s.back() + 1; }

int span_of(const SetPairSystem& sys) {
  int m = 0;
  for (const auto& p : sys.pairs)
    m = std::max({m, span_of(p.a), span_of(p.b)});
  return m;
}

IntSet shifted(const IntSet& s, int off) {
  IntSet r;
  r.reserve(s.size());
  for (int e : s) r.push_back(e + off);
  return r;
}

// x and every element of y+off with off >= span(x): plain concatenation
// keeps the result sorted.
IntSet glue(const IntSet& x, const IntSet& y, int off) {
  IntSet r = x;
  for (int e : y) r.push_back(e + off);
  return r;
}

IntSet range_set(int lo, int n) {
  IntSet r(n);
  std::iota(r.begin(), r.end(), lo);
  return r;
}

// next k-subset of {0..n-1} in lexicographic order; false after the last
bool next_combination(std::vector<int>& comb, int n) {
  int k = (int)comb.size();
  for (int i = k - 1; i >= 0; --i) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void check_flavor(const FlavorSpec& f) {
  switch (f.kind) {
    case Flavor::skew:
      if (f.a < 0 || f.b < 0) throw ParameterError("skew needs a, b >= 0");
      break;
    case Flavor::threshold:
      if (f.c < 0 || f.a < f.c || f.b < f.c)
        throw ParameterError("threshold needs a, b >= c >= 0");
      break;
    case Flavor::modified:
      if (f.a < 0 || f.b < 0 || f.c < 0)
        throw ParameterError("modified needs a, b, c >= 0");
      break;
    case Flavor::degenerate:
      if (!(f.b > f.c && f.c >= f.a && f.a >= 0))
        throw ParameterError("degenerate needs b > c >= a >= 0");
      break;
    case Flavor::variable:
      if (!(f.a >= f.c && f.c >= -1))
        throw ParameterError("variable needs a >= c >= -1");
      break;
    case Flavor::generalised:
      if (!(f.a >= f.d && f.b >= f.c + f.d && f.c >= 0 && f.d >= 0))
        throw ParameterError(
            "generalised needs a >= d, b >= c + d and c, d >= 0");
      break;
  }
}

VerifyResult fail(std::string msg) { return {false, std::move(msg)}; }

std::string sz(long long v) { return std::to_string(v); }

std::string at_pair(size_t j) { return "pair " + sz((long long)j); }

std::string at_pairs(size_t i, size_t j) {
  return "pairs (" + sz((long long)i) + ", " + sz((long long)j) + ")";
}

} // namespace

IntSet as_set(IntSet elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!elems.empty() && elems.front() < 0)
    throw ParameterError("set elements must be non-negative");
  return elems;
}

FlavorSpec skew(long long a, long long b) {
  return {Flavor::skew, a, b, 0, 0};
}
FlavorSpec threshold(long long a, long long b, long long c) {
  return {Flavor::threshold, a, b, c, 0};
}
FlavorSpec modified(long long a, long long b, long long c) {
  return {Flavor::modified, a, b, c, 0};
}
FlavorSpec degenerate(long long a, long long b, long long c) {
  return {Flavor::degenerate, a, b, c, 0};
}
FlavorSpec variable(long long a, long long b, long long c) {
  return {Flavor::variable, a, b, c, 0};
}
FlavorSpec generalised(long long a, long long b, long long c, long long d) {
  return {Flavor::generalised, a, b, c, d};
}

std::string flavor_name(Flavor kind) {
  switch (kind) {
    case Flavor::skew: return "skew";
    case Flavor::threshold: return "threshold";
    case Flavor::modified: return "modified";
    case Flavor::degenerate: return "degenerate";
    case Flavor::variable: return "variable";
    case Flavor::generalised: return "generalised";
  }
  return "?";
}

Flavor flavor_from_name(const std::string& name) {
  if (name == "skew") return Flavor::skew;
  if (name == "threshold") return Flavor::threshold;
  if (name == "modified") return Flavor::modified;
  if (name == "degenerate") return Flavor::degenerate;
  if (name == "variable") return Flavor::variable;
  if (name == "generalised") return Flavor::generalised;
  throw ParameterError("unknown flavor '" + name + "'");
}

VerifyResult verify(const SetPairSystem& sys, const FlavorSpec& f) {
  check_flavor(f);
  if (f.kind != Flavor::skew && f.kind != Flavor::threshold &&
      f.kind != Flavor::modified)
    throw ParameterError("flavor " + flavor_name(f.kind) +
                         " does not apply to a plain pair sequence");

  std::vector<SetPair> ps;
  ps.reserve(sys.pairs.size());
  for (const auto& p : sys.pairs) ps.push_back({as_set(p.a), as_set(p.b)});

  if (f.kind == Flavor::skew) {
    for (size_t j = 0; j < ps.size(); ++j) {
      const auto& p = ps[j];
      if ((long long)p.a.size() > f.a)
        return fail(at_pair(j) + ": |A| = " + sz(p.a.size()) +
                    " exceeds a = " + sz(f.a));
      if ((long long)p.b.size() > f.b)
        return fail(at_pair(j) + ": |B| = " + sz(p.b.size()) +
                    " exceeds b = " + sz(f.b));
      if (int k = isect_size(p.a, p.b); k > 0)
        return fail(at_pair(j) + ": A meets B in " + sz(k) +
                    " element(s), skew allows none");
      for (size_t i = 0; i < j; ++i)
        if (isect_size(ps[i].a, p.b) == 0)
          return fail(at_pairs(i, j) + ": A_i does not meet B_j");
    }
    return {};
  }

  // threshold and modified share everything but the A-side condition
  IntSet u;
  for (size_t j = 0; j < ps.size(); ++j) {
    const auto& p = ps[j];
    if (f.kind == Flavor::threshold) {
      if ((long long)p.a.size() > f.a)
        return fail(at_pair(j) + ": |A| = " + sz(p.a.size()) +
                    " exceeds a = " + sz(f.a));
    } else {
      if (long long ov = isect_size(p.a, u); ov > f.a)
        return fail(at_pair(j) + ": |A cap union of earlier A| = " + sz(ov) +
                    " exceeds a = " + sz(f.a));
    }
    if ((long long)p.b.size() > f.b)
      return fail(at_pair(j) + ": |B| = " + sz(p.b.size()) +
                  " exceeds b = " + sz(f.b));
    if (long long k = isect_size(p.a, p.b); k > f.c)
      return fail(at_pair(j) + ": |A cap B| = " + sz(k) +
                  " exceeds c = " + sz(f.c));
    for (size_t i = 0; i < j; ++i)
      if (long long k = isect_size(ps[i].a, p.b); k <= f.c)
        return fail(at_pairs(i, j) + ": |A_i cap B_j| = " + sz(k) +
                    ", need more than c = " + sz(f.c));
    u = unite(u, p.a);
  }
  return {};
}

VerifyResult verify(const DegenerateSystem& sys, const FlavorSpec& f) {
  check_flavor(f);
  if (f.kind != Flavor::degenerate)
    throw ParameterError("flavor " + flavor_name(f.kind) +
                         " does not apply to a block system");
  IntSet bset = as_set(sys.b_set);
  if ((long long)bset.size() > f.b)
    return fail("B has " + sz(bset.size()) + " element(s), limit b = " + sz(f.b));
  IntSet u;
  for (size_t j = 0; j < sys.blocks.size(); ++j) {
    IntSet blk = as_set(sys.blocks[j]);
    if (long long k = isect_size(blk, bset); k <= f.c)
      return fail("block " + sz((long long)j) + ": meets B in " + sz(k) +
                  " element(s), need more than c = " + sz(f.c));
    if (long long ov = isect_size(blk, u); ov > f.a)
      return fail("block " + sz((long long)j) +
                  ": |A cap union of earlier blocks| = " + sz(ov) +
                  " exceeds a = " + sz(f.a));
    u = unite(u, blk);
  }
  return {};
}

VerifyResult verify(const AnnotatedSystem& sys, const FlavorSpec& f) {
  check_flavor(f);
  if (f.kind != Flavor::variable && f.kind != Flavor::generalised)
    throw ParameterError("flavor " + flavor_name(f.kind) +
                         " does not apply to annotated triples");

  std::vector<AnnotatedTriple> ts;
  ts.reserve(sys.triples.size());
  for (const auto& t : sys.triples) {
    AnnotatedTriple n{as_set(t.a), as_set(t.b), t.c, std::nullopt};
    if (t.cset) n.cset = as_set(*t.cset);
    ts.push_back(std::move(n));
  }

  if (f.kind == Flavor::variable) {
    long long lo = std::max(0LL, 1 - f.b);
    IntSet u;
    for (size_t j = 0; j < ts.size(); ++j) {
      const auto& t = ts[j];
      if (t.cset) return fail(at_pair(j) + ": carries a set annotation, "
                              "variable flavor needs an integer");
      if (!t.c) return fail(at_pair(j) + ": missing integer annotation");
      long long cj = *t.c;
      if (cj < lo || cj > f.c)
        return fail(at_pair(j) + ": annotation " + sz(cj) + " outside [" +
                    sz(lo) + ", " + sz(f.c) + "]");
      if (long long ov = isect_size(t.a, u); ov > f.a)
        return fail(at_pair(j) + ": |A cap union of earlier A| = " + sz(ov) +
                    " exceeds a = " + sz(f.a));
      if ((long long)t.b.size() > f.b + 2 * cj)
        return fail(at_pair(j) + ": |B| = " + sz(t.b.size()) +
                    " exceeds b + 2 c_i = " + sz(f.b + 2 * cj));
      if (long long k = isect_size(t.a, t.b); k > cj)
        return fail(at_pair(j) + ": |A cap B| = " + sz(k) +
                    " exceeds its annotation " + sz(cj));
      for (size_t i = 0; i < j; ++i)
        if (long long k = isect_size(ts[i].a, t.b); k <= cj)
          return fail(at_pairs(i, j) + ": |A_i cap B_j| = " + sz(k) +
                      ", need more than c_j = " + sz(cj));
      u = unite(u, t.a);
    }
    return {};
  }

  // generalised: unary pass first so every C_k exists for the cross pass
  IntSet u;
  for (size_t j = 0; j < ts.size(); ++j) {
    const auto& t = ts[j];
    if (t.c) return fail(at_pair(j) + ": carries an integer annotation, "
                         "generalised flavor needs a set");
    if (!t.cset) return fail(at_pair(j) + ": missing set annotation");
    IntSet ab = isect(t.a, t.b);
    if (!subset_of(*t.cset, ab))
      return fail(at_pair(j) + ": C is not contained in A cap B");
    if (long long ov = isect_size(t.a, u); ov > f.a)
      return fail(at_pair(j) + ": |A cap union of earlier A| = " + sz(ov) +
                  " exceeds a = " + sz(f.a));
    if ((long long)t.b.size() > f.b)
      return fail(at_pair(j) + ": |B| = " + sz(t.b.size()) +
                  " exceeds b = " + sz(f.b));
    if ((long long)t.cset->size() < f.c)
      return fail(at_pair(j) + ": |C| = " + sz(t.cset->size()) +
                  ", need at least c = " + sz(f.c));
    if (long long k = diff_size(ab, *t.cset); k > f.d)
      return fail(at_pair(j) + ": |A cap B minus C| = " + sz(k) +
                  " exceeds d = " + sz(f.d));
    u = unite(u, t.a);
  }
  for (size_t j = 0; j < ts.size(); ++j)
    for (size_t i = 0; i < j; ++i) {
      IntSet x = isect(ts[i].a, ts[j].b);
      for (size_t k = 0; k < ts.size(); ++k)
        if (long long m = diff_size(x, *ts[k].cset); m <= f.d)
          return fail(at_pairs(i, j) + " with k = " + sz((long long)k) +
                      ": |A_i cap B_j minus C_k| = " + sz(m) +
                      ", need more than d = " + sz(f.d));
    }
  return {};
}

namespace {

BigInt binom_big(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

} // namespace

BoundsReport bounds(const FlavorSpec& f) {
  check_flavor(f);
  BoundsReport rep;
  rep.flavor = f;
  switch (f.kind) {
    case Flavor::skew:
      rep.regime = "skew";
      rep.skew_bound = binom_big(f.a + f.b, f.a);
      break;
    case Flavor::threshold:
      rep.regime = "threshold";
      rep.threshold_bound = binom_big(f.a + f.b - 2 * f.c, f.a - f.c);
      break;
    case Flavor::modified:
      if (f.c >= f.b) {
        rep.regime = "part 4";
        rep.exact = 1;
      } else if (f.c >= f.a) {
        rep.regime = "part 3";
        rep.exact = BigInt((f.b - f.a) / (f.c - f.a + 1) + 1);
      } else {
        rep.regime = "part 1";
      }
      if (f.a >= f.c && f.b >= f.c)
        rep.explicit_upper =
            2 * binom_big(f.a + f.b - 2 * f.c + 1, f.a - f.c + 1);
      rep.skew_comparison = binom_big(f.a + f.b, f.a);
      break;
    case Flavor::degenerate:
      rep.regime = "degenerate";
      rep.degenerate_bound = BigInt((f.b - f.a) / (f.c - f.a + 1));
      break;
    default:
      throw ParameterError("no closed-form size bound is tabled for flavor " +
                           flavor_name(f.kind));
  }
  return rep;
}

SetPairSystem extremal_skew(int a, int b, const Limits& lim) {
  if (a < 0 || b < 0) throw ParameterError("extremal_skew needs a, b >= 0");
  long long count = binom_ll(a + b, a);
  if (count > lim.sys_pairs)
    throw LimitExceeded("extremal_skew would emit " + sz(count) + " pairs");
  int n = a + b;
  IntSet all = range_set(0, n);
  SetPairSystem sys;
  sys.pairs.reserve((size_t)count);
  std::vector<int> comb = range_set(0, a);
  do {
    IntSet A(comb.begin(), comb.end());
    IntSet B;
    B.reserve(b);
    std::set_difference(all.begin(), all.end(), A.begin(), A.end(),
                        std::back_inserter(B));
    sys.pairs.push_back({std::move(A), std::move(B)});
  } while (next_combination(comb, n));
  return sys;
}

SetPairSystem extremal_threshold(int a, int b, int c, const Limits& lim) {
  if (c < 0 || a < c || b < c)
    throw ParameterError("extremal_threshold needs a, b >= c >= 0");
  SetPairSystem base = extremal_skew(a - c, b - c, lim);
  IntSet t = range_set(0, c);
  SetPairSystem sys;
  sys.pairs.reserve(base.pairs.size());
  for (const auto& p : base.pairs)
    sys.pairs.push_back({glue(t, p.a, c), glue(t, p.b, c)});
  return sys;
}

SetPairSystem extremal_part3(int b, int c, const Limits& lim) {
  if (b < 0 || c < 0) throw ParameterError("extremal_part3 needs b, c >= 0");
  long long m = (long long)b / (c + 1);
  if (m + 1 > lim.sys_pairs)
    throw LimitExceeded("extremal_part3 would emit " + sz(m + 1) + " pairs");
  IntSet all = range_set(0, (int)(m + 1) * (c + 1));
  SetPairSystem sys;
  for (long long i = 0; i <= m; ++i) {
    IntSet A = range_set((int)i * (c + 1), c + 1);
    IntSet B;
    std::set_difference(all.begin(), all.end(), A.begin(), A.end(),
                        std::back_inserter(B));
    sys.pairs.push_back({std::move(A), std::move(B)});
  }
  return sys;
}

SetPairSystem shift(const SetPairSystem& sys, int d) {
  if (d < 0) throw ParameterError("shift needs d >= 0");
  if (d == 0) return sys;
  int off = span_of(sys);
  IntSet t = range_set(off, d);
  SetPairSystem out;
  out.pairs.reserve(sys.pairs.size());
  for (const auto& p : sys.pairs)
    out.pairs.push_back({unite(p.a, t), unite(p.b, t)});
  return out;
}

SetPairSystem product(const SetPairSystem& outer,
                      const std::vector<SetPairSystem>& inners) {
  if (inners.size() != outer.pairs.size())
    throw ParameterError("product needs one inner system per outer pair (" +
                         sz(outer.pairs.size()) + " outer, " +
                         sz(inners.size()) + " inner)");
  int off = span_of(outer);
  SetPairSystem out;
  for (size_t i = 0; i < outer.pairs.size(); ++i) {
    const auto& op = outer.pairs[i];
    for (const auto& ip : inners[i].pairs)
      out.pairs.push_back({glue(op.a, ip.a, off), glue(op.b, ip.b, off)});
    off += span_of(inners[i]);
  }
  return out;
}

int union_size(const SetPairSystem& sys) {
  IntSet u;
  for (const auto& p : sys.pairs) u = unite(u, p.b);
  return (int)u.size();
}

SetPairSystem compose_u(const SetPairSystem& outer,
                        const SetPairSystem& inner_template) {
  if (inner_template.pairs.empty())
    throw ParameterError("compose_u needs a template with at least one pair");
  int step = span_of(inner_template);
  int off = span_of(outer);
  SetPairSystem out;
  out.pairs.reserve(outer.pairs.size() * inner_template.pairs.size());
  for (const auto& op : outer.pairs) {
    for (const auto& ip : inner_template.pairs)
      out.pairs.push_back({glue(op.a, ip.a, off), glue(op.b, ip.b, off)});
    off += step;
  }
  return out;
}

AnnotatedSystem variable_example(int a, int b, int c, const Limits& lim) {
  check_flavor(variable(a, b, c));
  AnnotatedSystem out;
  long long lo = std::max(0LL, 1LL - b);
  if (c < lo) return out;  // no admissible annotation value
  long long total = 0;
  for (long long d = c; d >= lo; --d) total += binom_ll(a + b - 1, a - d);
  if (total > lim.sys_pairs)
    throw LimitExceeded("variable_example would emit " + sz(total) + " pairs");
  int base = c + 1;  // the shared chain occupies {0..c}
  int m = a + b - 1;
  for (long long d = c; d >= lo; --d) {
    IntSet td = range_set(0, (int)d);
    IntSet td1 = range_set(0, (int)d + 1);
    std::vector<int> comb = range_set(0, (int)(a - d));
    IntSet block = range_set(0, m);
    do {
      IntSet A(comb.begin(), comb.end());
      IntSet B;
      std::set_difference(block.begin(), block.end(), A.begin(), A.end(),
                          std::back_inserter(B));
      out.triples.push_back(
          {glue(td, A, base), glue(td1, B, base), d, std::nullopt});
    } while (next_combination(comb, m));
    base += m;
  }
  return out;
}

// ---- JSON -------------------------------------------------------------

namespace {

nlohmann::json set_to_json(const IntSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (int e : s) arr.push_back(e);
  return arr;
}

IntSet set_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array())
    throw ParseError(std::string(what) + " must be an array of integers");
  IntSet s;
  s.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw ParseError(std::string(what) + " must be an array of integers");
    s.push_back(e.get<int>());
  }
  return as_set(std::move(s));
}

const nlohmann::json& pairs_field(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array())
    throw ParseError("system JSON needs a \"pairs\" array");
  return j["pairs"];
}

} // namespace

nlohmann::json system_to_json(const SetPairSystem& sys) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : sys.pairs)
    arr.push_back({{"A", set_to_json(p.a)}, {"B", set_to_json(p.b)}});
  return {{"pairs", arr}};
}

nlohmann::json system_to_json(const AnnotatedSystem& sys) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : sys.triples) {
    nlohmann::json e = {{"A", set_to_json(t.a)}, {"B", set_to_json(t.b)}};
    if (t.c) e["c"] = *t.c;
    if (t.cset) e["C"] = set_to_json(*t.cset);
    arr.push_back(std::move(e));
  }
  return {{"pairs", arr}};
}

nlohmann::json system_to_json(const DegenerateSystem& sys) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& blk : sys.blocks) blocks.push_back(set_to_json(blk));
  return {{"blocks", blocks}, {"B", set_to_json(sys.b_set)}};
}

SetPairSystem system_from_json(const nlohmann::json& j) {
  SetPairSystem sys;
  for (const auto& e : pairs_field(j)) {
    if (!e.is_object() || !e.contains("A") || !e.contains("B"))
      throw ParseError("each pair needs \"A\" and \"B\"");
    sys.pairs.push_back({set_from_json(e["A"], "A"), set_from_json(e["B"], "B")});
  }
  return sys;
}

AnnotatedSystem annotated_from_json(const nlohmann::json& j) {
  AnnotatedSystem sys;
  for (const auto& e : pairs_field(j)) {
    if (!e.is_object() || !e.contains("A") || !e.contains("B"))
      throw ParseError("each pair needs \"A\" and \"B\"");
    AnnotatedTriple t{set_from_json(e["A"], "A"), set_from_json(e["B"], "B"),
                      std::nullopt, std::nullopt};
    if (e.contains("c")) {
      if (!e["c"].is_number_integer())
        throw ParseError("annotation \"c\" must be an integer");
      t.c = e["c"].get<long long>();
    }
    if (e.contains("C")) t.cset = set_from_json(e["C"], "C");
    sys.triples.push_back(std::move(t));
  }
  return sys;
}

DegenerateSystem degenerate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array() ||
      !j.contains("B"))
    throw ParseError("degenerate JSON needs \"blocks\" and \"B\"");
  DegenerateSystem sys;
  for (const auto& e : j["blocks"])
    sys.blocks.push_back(set_from_json(e, "block"));
  sys.b_set = set_from_json(j["B"], "B");
  return sys;
}

// ---- exhaustive search over a bounded ground set ------------------------

namespace {

using Mask = unsigned;

int pc(Mask m) { return std::popcount(m); }

IntSet mask_to_set(Mask m) {
  IntSet s;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) s.push_back(i);
  return s;
}

// Minimal-mask antichain: members are the inclusion-minimal A sets seen so
// far. A candidate B satisfying the cross condition against every member
// satisfies it against every A, since supersets only intersect more.
std::vector<uint8_t> ac_insert(const std::vector<uint8_t>& ac, uint8_t m) {
  for (uint8_t x : ac)
    if ((x & m) == x) return ac;  // an existing member already implies m
  std::vector<uint8_t> out;
  out.reserve(ac.size() + 1);
  for (uint8_t x : ac)
    if ((x & m) != m) out.push_back(x);  // drop supersets of m
  out.insert(std::upper_bound(out.begin(), out.end(), m), m);
  return out;
}

// Spreads fn(0..count-1) over up to jobs threads. Results must go into
// per-index slots; the first exception wins and is rethrown after join.
void run_indexed(int count, int jobs, const std::function<void(int)>& fn) {
  jobs = std::min(jobs, count);
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

// Longest-sequence search for the pairwise flavors. States are keyed by
// (count of elements used in any A so far, minimal antichain of A masks)
// after first-use relabeling, which also collapses the choice of fresh
// elements to a count. B sets never constrain later pairs, so only their
// existence is tested. Values saturate at the length ceiling.
struct PairBrute {
  Flavor kind;
  long long a, b, c;
  int g, l;
  std::unordered_map<std::string, int> memo;
  long long explored = 0;

  static std::string key_of(int u, const std::vector<uint8_t>& ac) {
    std::string k;
    k.reserve(ac.size() + 1);
    k.push_back((char)u);
    for (uint8_t m : ac) k.push_back((char)m);
    return k;
  }

  bool a_ok(Mask A, Mask umask) const {
    if (kind == Flavor::skew || kind == Flavor::threshold)
      return pc(A) <= a;
    return pc(A & umask) <= a;  // modified and variable cap the overlap only
  }

  // Smallest admissible (annotation, B) for a new pair with left side A,
  // against the current antichain; nullopt when no B works. The annotation
  // slot is meaningful for the variable flavor only.
  std::optional<std::pair<long long, Mask>> first_b(
      Mask A, const std::vector<uint8_t>& ac) const {
    Mask all = (1u << g) - 1;
    auto cross_ok = [&](Mask B, long long thr) {
      for (uint8_t x : ac) {
        if (kind == Flavor::skew) {
          if ((x & B) == 0) return false;
        } else if (pc(x & B) <= thr) {
          return false;
        }
      }
      return true;
    };
    if (kind == Flavor::variable) {
      long long lo = std::max(0LL, 1 - b);
      if (lo > c) return std::nullopt;
      // annotations past the ground size cannot beat a nonempty antichain
      long long hi = ac.empty() ? lo : std::min(c, (long long)g);
      for (long long e = lo; e <= hi; ++e)
        for (Mask B = 0; B <= all; ++B)
          if (pc(B) <= b + 2 * e && pc(A & B) <= e && cross_ok(B, e))
            return std::make_pair(e, B);
      return std::nullopt;
    }
    for (Mask B = 0; B <= all; ++B) {
      if (pc(B) > b) continue;
      if (kind == Flavor::skew) {
        if ((A & B) != 0) continue;
        if (cross_ok(B, 0)) return std::make_pair(0LL, B);
      } else {
        if (pc(A & B) > c) continue;
        if (cross_ok(B, c)) return std::make_pair(c, B);
      }
    }
    return std::nullopt;
  }

  // Visits the distinguishable next pairs in a fixed order. Any accepted
  // pair strictly extends the family of cross constraints (a left side
  // containing an antichain member can never find a B), so chains cannot
  // revisit a state.
  template <class F>
  void for_candidates(int u, const std::vector<uint8_t>& ac, F&& f) {
    Mask umask = (1u << u) - 1;
    for (int k = 0; u + k <= g; ++k) {
      Mask fresh = ((1u << k) - 1) << u;
      for (Mask s = 0;; ++s) {
        Mask A = s | fresh;
        if (a_ok(A, umask) && first_b(A, ac)) {
          if (!f(A, u + k, ac_insert(ac, (uint8_t)A))) return;
        }
        if (s == umask) break;
      }
    }
  }

  // Longest continuation from this state, capped at the length ceiling.
  int value(int u, const std::vector<uint8_t>& ac) {
    std::string key = key_of(u, ac);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    ++explored;
    int best = 0;
    for_candidates(u, ac, [&](Mask, int u2, std::vector<uint8_t> ac2) {
      int v = 1 + value(u2, ac2);
      if (v >= l) {
        best = l;
        return false;
      }
      best = std::max(best, v);
      return true;
    });
    memo.emplace(std::move(key), best);
    return best;
  }
};

SystemSearchReport run_pair_brute(const FlavorSpec& f, int g, int l,
                                  int jobs) {
  SystemSearchReport rep;
  rep.ground_limit = g;
  rep.length_limit = l;

  struct Root {
    Mask A;
    int u;
    std::vector<uint8_t> ac;
  };
  std::vector<Root> roots;
  PairBrute seed{f.kind, f.a, f.b, f.c, g, l};
  if (l > 0)
    seed.for_candidates(0, {}, [&](Mask A, int u, std::vector<uint8_t> ac) {
      roots.push_back({A, u, std::move(ac)});
      return true;
    });

  std::vector<int> vals(roots.size(), 0);
  std::vector<long long> expl(roots.size(), 0);
  run_indexed((int)roots.size(), jobs, [&](int i) {
    PairBrute br{f.kind, f.a, f.b, f.c, g, l};
    vals[i] = br.value(roots[i].u, roots[i].ac);
    expl[i] = br.explored;
  });

  long long total = 1;  // the empty root state
  for (long long e : expl) total += e;
  rep.explored = total;
  if (!roots.empty())
    rep.optimum =
        std::min<long long>(l, 1 + *std::max_element(vals.begin(), vals.end()));
  rep.exhaustive = rep.optimum < l || roots.empty();

  // Greedy witness walk; value() on a fresh instance retraces the optimum.
  PairBrute wb{f.kind, f.a, f.b, f.c, g, l};
  SetPairSystem plain;
  AnnotatedSystem annotated;
  int u = 0;
  std::vector<uint8_t> ac;
  long long need = rep.optimum;
  while (need > 0) {
    bool found = false;
    wb.for_candidates(u, ac, [&](Mask A, int u2, std::vector<uint8_t> ac2) {
      if (1 + wb.value(u2, ac2) < need) return true;
      auto eb = wb.first_b(A, ac);
      if (f.kind == Flavor::variable)
        annotated.triples.push_back({mask_to_set(A), mask_to_set(eb->second),
                                     eb->first, std::nullopt});
      else
        plain.pairs.push_back({mask_to_set(A), mask_to_set(eb->second)});
      u = u2;
      ac = std::move(ac2);
      found = true;
      return false;
    });
    if (!found) throw Error("witness walk lost the optimum");
    --need;
  }
  if (f.kind == Flavor::variable)
    rep.annotated_witness = std::move(annotated);
  else
    rep.witness = std::move(plain);
  return rep;
}

// Degenerate search: B can be relabeled to {0..s-1} for each size s, after
// which only the union of earlier blocks matters. Every block adds a new
// element (it meets B in more than c >= a elements, so it cannot sit inside
// the union), hence the recursion terminates without a cap.
SystemSearchReport run_degen_brute(const FlavorSpec& f, int g, int l,
                                   int jobs) {
  SystemSearchReport rep;
  rep.ground_limit = g;
  rep.length_limit = l;
  int smax = (int)std::min<long long>(f.b, g);
  int count = smax + 1;

  std::vector<int> vals(count, 0);
  std::vector<long long> expl(count, 0);
  Mask all = (1u << g) - 1;

  auto solve = [&](int s) {
    if (l == 0) return;
    Mask bm = (1u << s) - 1;
    std::vector<int> memo(1u << g, -1);
    long long seen = 0;
    std::function<int(Mask)> value = [&](Mask u) -> int {
      if (memo[u] >= 0) return memo[u];
      ++seen;
      int best = 0;
      for (Mask A = 0; A <= all; ++A) {
        if (pc(A & bm) <= f.c) continue;
        if (pc(A & u) > f.a) continue;
        int v = 1 + value(u | A);
        if (v >= l) {
          best = l;
          break;
        }
        best = std::max(best, v);
      }
      return memo[u] = best;
    };
    vals[s] = value(0);
    expl[s] = seen;
  };
  run_indexed(count, jobs, [&](int s) { solve(s); });

  for (long long e : expl) rep.explored += e;
  int bests = 0;
  for (int s = 0; s <= smax; ++s)
    if (vals[s] > vals[bests]) bests = s;
  rep.optimum = smax >= 0 ? vals[bests] : 0;
  rep.exhaustive = rep.optimum < l;

  DegenerateSystem wit;
  if (smax >= 0) {
    wit.b_set = range_set(0, bests);
    Mask bm = (1u << bests) - 1;
    // replay the winning branch greedily
    std::vector<int> memo(1u << g, -1);
    std::function<int(Mask)> value = [&](Mask u) -> int {
      if (memo[u] >= 0) return memo[u];
      int best = 0;
      for (Mask A = 0; A <= all; ++A) {
        if (pc(A & bm) <= f.c) continue;
        if (pc(A & u) > f.a) continue;
        int v = 1 + value(u | A);
        if (v >= l) {
          best = l;
          break;
        }
        best = std::max(best, v);
      }
      return memo[u] = best;
    };
    Mask u = 0;
    for (long long need = rep.optimum; need > 0; --need) {
      bool found = false;
      for (Mask A = 0; A <= all && !found; ++A) {
        if (pc(A & bm) <= f.c) continue;
        if (pc(A & u) > f.a) continue;
        if (1 + value(u | A) >= need) {
          wit.blocks.push_back(mask_to_set(A));
          u |= A;
          found = true;
        }
      }
      if (!found) throw Error("witness walk lost the optimum");
    }
  }
  rep.degenerate_witness = std::move(wit);
  return rep;
}

// Generalised search: marked subsets persist in the cross conditions (every
// earlier or later C_k thins every A_i cap B_j), so there is no small state
// and the walk is a plain DFS. Pruned by the induced modified system
// (A_i, B_i minus C_i), whose memoized optimum bounds any continuation.
struct GenBrute {
  long long a, b, c, d;
  int g, l;
  PairBrute reduced;
  std::vector<Mask> as, bs, cs, cross;
  Mask used = 0, au = 0;
  int nused = 0;
  long long explored = 0;
  int best = 0;
  std::vector<Mask> best_as, best_bs, best_cs;

  GenBrute(const FlavorSpec& f, int g_, int l_)
      : a(f.a), b(f.b), c(f.c), d(f.d), g(g_), l(l_),
        reduced{Flavor::modified, f.a, f.b - f.c, f.d, g_, l_} {}

  int reduced_bound() {
    int id[8];
    std::fill(std::begin(id), std::end(id), -1);
    int next = 0;
    std::vector<uint8_t> ac;
    for (Mask A : as) {
      Mask m = 0;
      for (int i = 0; i < g; ++i)
        if (A >> i & 1) {
          if (id[i] < 0) id[i] = next++;
          m |= 1u << id[i];
        }
      ac = ac_insert(ac, (uint8_t)m);
    }
    return reduced.value(next, ac);
  }

  void dfs() {
    ++explored;
    int depth = (int)as.size();
    if (depth > best) {
      best = depth;
      best_as = as;
      best_bs = bs;
      best_cs = cs;
    }
    if (best >= l) return;
    if (depth + reduced_bound() <= best) return;

    for (int ka = 0; nused + ka <= g; ++ka) {
      Mask fa = ((1u << ka) - 1) << nused;
      for (Mask sa = 0;; ++sa) {
        Mask A = sa | fa;
        if (pc(A & au) <= a) try_b(A, ka);
        if (sa == used) break;
      }
    }
  }

  void try_b(Mask A, int ka) {
    Mask useda = used | A;
    int na = nused + ka;
    for (int kb = 0; na + kb <= g; ++kb) {
      Mask fb = ((1u << kb) - 1) << na;
      for (Mask sb = 0;; ++sb) {
        Mask B = sb | fb;
        if (pc(B) <= b) try_c(A, B, useda, na + kb);
        if (sb == useda) break;
      }
    }
  }

  void try_c(Mask A, Mask B, Mask usedab, int nab) {
    Mask ab = A & B;
    for (Mask C = 0; C <= ab; ++C) {
      if ((C & ab) != C) continue;
      if (pc(C) < c) continue;
      if (pc(ab & ~C) > d) continue;
      bool ok = true;
      for (Mask x : cross)
        if (pc(x & ~C) <= d) { ok = false; break; }
      std::vector<Mask> fresh_cross;
      if (ok) {
        for (size_t i = 0; i < as.size() && ok; ++i) {
          Mask x = as[i] & B;
          if (pc(x & ~C) <= d) { ok = false; break; }
          for (Mask ck : cs)
            if (pc(x & ~ck) <= d) { ok = false; break; }
          if (ok) fresh_cross.push_back(x);
        }
      }
      if (!ok) continue;

      Mask save_used = used, save_au = au;
      int save_nused = nused;
      size_t save_cross = cross.size();
      as.push_back(A);
      bs.push_back(B);
      cs.push_back(C);
      cross.insert(cross.end(), fresh_cross.begin(), fresh_cross.end());
      used = usedab | B;
      au |= A;
      nused = nab;
      dfs();
      as.pop_back();
      bs.pop_back();
      cs.pop_back();
      cross.resize(save_cross);
      used = save_used;
      au = save_au;
      nused = save_nused;
    }
  }
};

SystemSearchReport run_gen_brute(const FlavorSpec& f, int g, int l) {
  SystemSearchReport rep;
  rep.ground_limit = g;
  rep.length_limit = l;
  GenBrute gb(f, g, l);
  if (l > 0) gb.dfs();
  rep.optimum = gb.best;
  rep.explored = gb.explored + gb.reduced.explored;
  rep.exhaustive = rep.optimum < l;
  AnnotatedSystem wit;
  for (size_t i = 0; i < gb.best_as.size(); ++i)
    wit.triples.push_back({mask_to_set(gb.best_as[i]),
                           mask_to_set(gb.best_bs[i]), std::nullopt,
                           mask_to_set(gb.best_cs[i])});
  rep.annotated_witness = std::move(wit);
  return rep;
}

} // namespace

SystemSearchReport brute_max(const FlavorSpec& f, int ground_limit,
                             int length_limit, const BruteOptions& opt) {
  check_flavor(f);
  if (ground_limit < 0 || ground_limit > opt.limits.ground)
    throw LimitExceeded("ground limit " + sz(ground_limit) +
                        " outside the configured ceiling " +
                        sz(opt.limits.ground));
  if (ground_limit > 8)
    throw LimitExceeded("ground sets beyond 8 elements are not supported");
  if (length_limit < 0 || length_limit > opt.limits.length)
    throw LimitExceeded("length limit " + sz(length_limit) +
                        " outside the configured ceiling " +
                        sz(opt.limits.length));
  int jobs = opt.jobs;
  if (jobs <= 0) jobs = (int)std::thread::hardware_concurrency();
  if (jobs <= 0) jobs = 1;

  switch (f.kind) {
    case Flavor::degenerate:
      return run_degen_brute(f, ground_limit, length_limit, jobs);
    case Flavor::generalised:
      return run_gen_brute(f, ground_limit, length_limit);
    default:
      return run_pair_brute(f, ground_limit, length_limit, jobs);
  }
}

} // namespace satlab
