#pragma once
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "satlab/limits.hpp"

namespace satlab {

using BigInt = boost::multiprecision::cpp_int;

// Ground elements are non-negative integers; sets are kept sorted and
// duplicate-free. as_set normalizes a raw list and rejects negatives.
using IntSet = std::vector<int>;
IntSet as_set(IntSet elems);

struct SetPair {
  IntSet a;
  IntSet b;
};

// Ordered sequence of (A_i, B_i) pairs. The sequence order is the index
// order; the ground set is implicit in the elements used.
struct SetPairSystem {
  std::vector<SetPair> pairs;
};

// Ordered blocks (A_i) sharing one fixed right-hand set B.
struct DegenerateSystem {
  std::vector<IntSet> blocks;
  IntSet b_set;
};

// (A_i, B_i) plus exactly one annotation: an integer cap c_i, or a marked
// subset C_i of A_i cap B_i.
struct AnnotatedTriple {
  IntSet a;
  IntSet b;
  std::optional<long long> c;
  std::optional<IntSet> cset;
};

struct AnnotatedSystem {
  std::vector<AnnotatedTriple> triples;
};

// Conditions, over an ordered sequence with indices i < j:
//
//   skew(a,b):            |A_i| <= a, |B_i| <= b, A_i cap B_i empty,
//                         A_i cap B_j nonempty.
//   threshold(a,b,c):     |A_i| <= a, |B_i| <= b, |A_i cap B_i| <= c,
//                         |A_i cap B_j| > c.  Needs a,b >= c >= 0.
//   modified(a,b,c):      |A_i cap (A_1 u ... u A_{i-1})| <= a, |B_i| <= b,
//                         |A_i cap B_i| <= c, |A_i cap B_j| > c.
//   degenerate(a,b,c):    on blocks plus one B, needs b > c >= a >= 0:
//                         |B| <= b, |A_i cap B| > c,
//                         |A_i cap (A_1 u ... u A_{i-1})| <= a.
//   variable(a,b,c):      needs a >= c >= -1 and integer annotations with
//                         max(0,1-b) <= c_i <= c:
//                         |A_i cap (A_1 u ... u A_{i-1})| <= a,
//                         |B_i| <= b + 2c_i, |A_i cap B_i| <= c_i,
//                         |A_i cap B_j| > c_j.
//   generalised(a,b,c,d): needs a >= d, b >= c + d, c,d >= 0 and set
//                         annotations C_i contained in A_i cap B_i:
//                         |A_i cap (A_1 u ... u A_{i-1})| <= a, |B_i| <= b,
//                         |C_i| >= c, |A_i cap B_i minus C_i| <= d, and
//                         |A_i cap B_j minus C_k| > d for every index k.
enum class Flavor { skew, threshold, modified, degenerate, variable, generalised };

struct FlavorSpec {
  Flavor kind = Flavor::skew;
  long long a = 0;
  long long b = 0;
  long long c = 0;
  long long d = 0;
};

FlavorSpec skew(long long a, long long b);
FlavorSpec threshold(long long a, long long b, long long c);
FlavorSpec modified(long long a, long long b, long long c);
FlavorSpec degenerate(long long a, long long b, long long c);
FlavorSpec variable(long long a, long long b, long long c);
FlavorSpec generalised(long long a, long long b, long long c, long long d);

// Flavor name as used by the CLI; parse is case-sensitive.
std::string flavor_name(Flavor kind);
Flavor flavor_from_name(const std::string& name);

struct VerifyResult {
  bool ok = true;
  std::string diagnostic;  // empty when ok; indices are zero-based
  explicit operator bool() const { return ok; }
};

// True iff every condition of the named flavor holds; on failure the
// diagnostic pinpoints the first violated condition in scan order (each
// pair's own conditions first, then its cross conditions against earlier
// pairs). Throws ParameterError when the flavor parameters break the
// side conditions listed above, or when the flavor does not match the
// system shape.
VerifyResult verify(const SetPairSystem& sys, const FlavorSpec& f);
VerifyResult verify(const DegenerateSystem& sys, const FlavorSpec& f);
VerifyResult verify(const AnnotatedSystem& sys, const FlavorSpec& f);

// The proved size bounds that apply at a parameter point. Absent fields
// mean the formula's regime excludes the parameters.
struct BoundsReport {
  FlavorSpec flavor;
  // "skew", "threshold", "degenerate"; for modified: "part 1" (only the
  // doubled binomial upper bound applies), "part 3" or "part 4" (exact).
  std::string regime;
  std::optional<BigInt> skew_bound;       // binom(a+b, a)
  std::optional<BigInt> threshold_bound;  // binom(a+b-2c, a-c)
  std::optional<BigInt> exact;            // floor((b-a)/(c-a+1))+1, or 1
  std::optional<BigInt> explicit_upper;   // 2 binom(a+b-2c+1, a-c+1), a,b >= c
  std::optional<BigInt> degenerate_bound; // floor((b-a)/(c-a+1))
  // binom(a+b,a) quoted for comparison on modified parameters. Not a bound
  // there: the running-union condition is weaker than |A_i| <= a.
  std::optional<BigInt> skew_comparison;
};

BoundsReport bounds(const FlavorSpec& f);

// All partitions of {0..a+b-1} into A of size a and B of size b, in
// lexicographic A order. binom(a+b,a) pairs; meets the skew(a,b) bound.
SetPairSystem extremal_skew(int a, int b, const Limits& lim = Limits{});

// The skew family on a-c, b-c plus a shared c-element core glued into
// every A and B. binom(a+b-2c,a-c) pairs; meets the threshold(a,b,c)
// bound and verifies under modified(a,b,c) as well.
SetPairSystem extremal_threshold(int a, int b, int c, const Limits& lim = Limits{});

// floor(b/(c+1))+1 disjoint blocks of size c+1, B_i the union of the other
// blocks; the modified(0,b,c) maximum.
SetPairSystem extremal_part3(int b, int c, const Limits& lim = Limits{});

// Adjoin d fresh shared elements to both sides of every pair. A system
// verifying modified(a,b,c) turns into one verifying modified(a+d,b+d,c+d);
// the length never changes. d = 0 returns the input untouched.
SetPairSystem shift(const SetPairSystem& sys, int d);

// Glue one relabeled inner system onto each outer pair (one inner per
// pair, concatenated in outer order). An outer verifying skew(a,b) with
// inners verifying modified(c,d,0) yields modified(a+c,b+d,0) with length
// equal to the sum of the inner lengths. Throws ParameterError when the
// inner count differs from the outer length.
SetPairSystem product(const SetPairSystem& outer,
                      const std::vector<SetPairSystem>& inners);

// |union of all B_i|.
int union_size(const SetPairSystem& sys);

// Glue a relabeled copy of the template onto each outer pair. An outer
// verifying skew(a-c,b-d) with a template verifying skew(c,d) yields a
// skew(a,b) system whose B-union covers every copy's B-union plus the
// outer's, so union_size(result) >= |outer| * union_size(template)
// + union_size(outer).
SetPairSystem compose_u(const SetPairSystem& outer,
                        const SetPairSystem& inner_template);

// The descending-annotation family: for each d from c down to max(0,1-b),
// all partitions of a fresh set of size a+b-1 into sides of size a-d and
// b+d-1, each pair sharing the first d or d+1 elements of a common chain.
// Size sum_d binom(a+b-1, a-d); passes verify under variable(a,b,c).
AnnotatedSystem variable_example(int a, int b, int c, const Limits& lim = Limits{});

// Exhaustive-search result over systems drawn from a bounded ground set.
// optimum is the longest verifying sequence found; exhaustive is true only
// when the search ran to completion below the length ceiling, and always
// relative to the two ceilings recorded here (a larger ground can admit
// longer systems; these are not global flavor maxima).
struct SystemSearchReport {
  long long optimum = 0;
  long long explored = 0;  // memoized states or search nodes evaluated
  int ground_limit = 0;
  int length_limit = 0;
  bool exhaustive = false;
  std::optional<SetPairSystem> witness;            // skew/threshold/modified
  std::optional<AnnotatedSystem> annotated_witness;     // variable/generalised
  std::optional<DegenerateSystem> degenerate_witness;   // degenerate
};

struct BruteOptions {
  int jobs = 1;
  Limits limits{};
};

// Longest system of the given flavor with every element below ground_limit
// and at most length_limit members. Deterministic for any job count: work
// splits over the distinguishable first-pair choices and merges by max.
// Throws LimitExceeded when a ceiling exceeds the configured limits.
SystemSearchReport brute_max(const FlavorSpec& f, int ground_limit,
                             int length_limit, const BruteOptions& opt = {});

// {"pairs": [{"A": [...], "B": [...]}, ...]}; annotated triples carry "c"
// or "C" per entry; degenerate systems use {"blocks": [...], "B": [...]}.
nlohmann::json system_to_json(const SetPairSystem& sys);
nlohmann::json system_to_json(const AnnotatedSystem& sys);
nlohmann::json system_to_json(const DegenerateSystem& sys);
SetPairSystem system_from_json(const nlohmann::json& j);
AnnotatedSystem annotated_from_json(const nlohmann::json& j);
DegenerateSystem degenerate_from_json(const nlohmann::json& j);

} // namespace satlab
