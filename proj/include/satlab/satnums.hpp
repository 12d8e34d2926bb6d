#pragma once
#include <optional>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/limits.hpp"
#include "satlab/vertex_set.hpp"

namespace satlab {

// Minimum edge count of a K_r-saturated graph on n vertices:
// (r-2)n - binom(r-1,2). r >= 2, n >= r-2.
long long sat_formula(long long n, int r);

// t|g| - e(g). May be negative.
long long deficiency(const Graph& g, int t);

struct LowerBounds {
  long long via_gt = 0;                 // binom(2(t-1),t-1)/2 + 2t(t-1)
  std::optional<long long> via_ht;      // 2 binom(2(t-2),t-2) + 2t(t-2), t >= 4
};

// Closed-form deficiency lower bounds for c(3,t) from the two saturated
// families. Each value is cross-checked against the deficiency of the
// actually constructed graph whenever it fits the construct limit.
LowerBounds c_lower_bounds(int t, const Limits& lim = Limits{});

struct ShiftCheck {
  long long lhs_lower = 0;  // best deficiency of a verified conical lift
  long long rhs = 0;        // c(r,t) + t s + binom(s+1,2)
  bool holds = false;
};

// Mechanical check of the conical-lift inequality
// c(r+s,t+s) >= c(r,t) + t s + binom(s+1,2): lift each tabulated extremal
// graph by s dominating vertices, re-verify saturation and minimum degree,
// and compare deficiencies. Throws UnknownValue when c(r,t) is not tabled.
ShiftCheck lemma_shift_check(int r, int t, int s);

// Number of vertices of degree <= t adjacent to another vertex of
// degree <= t.
long long f_value(const Graph& g, int t);

// The cover {v : d(v) > t} union {v : d(v) <= t, some neighbor also has
// degree <= t}. Validity is re-checked; NotACover on failure.
VertexSet cover_from_threshold(const Graph& g, int t);

struct KnownValue {
  long long c = 0;
  std::vector<Graph> collection;  // minimal extremal graphs, C(r,t)
  std::optional<long long> c_prime;
  // Present and empty means "known to be empty"; absent means unknown.
  std::optional<std::vector<Graph>> c_prime_collection;
};

// The known rows t = r-2, r-1, r of the c(r,t) table, with the extremal
// collections built on the spot. Absent for any other (r,t).
std::optional<KnownValue> known_values(int r, int t);

// Repeatedly deletes one vertex of each twin pair (equal open
// neighborhoods) until none remain; the inverse of blowing up.
Graph twin_contract(const Graph& g);

} // namespace satlab
