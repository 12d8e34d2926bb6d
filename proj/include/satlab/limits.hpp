#pragma once
#include <string>

namespace satlab {

// Ceilings for the exact (exponential) routines. Everything is a plain
// field so tests can crank individual knobs up or down.
struct Limits {
  int clique_n = 64;     // clique_number / max_cliques / core subset
  int chromatic_n = 32;  // chromatic_number
  int canonical_n = 16;  // canonical_form and isomorphism tests
  int search_n = 16;     // exhaustive saturated-graph enumeration
  int ground = 7;        // set-system brute force ground size
  int length = 12;       // set-system brute force sequence length
  int construct_n = 20000;  // largest graph a construction may emit
  long long sys_pairs = 200'000;  // largest set-pair family a constructor may emit
  long long canon_nodes = 50'000'000;  // refinement tree node budget

  // Parse "n=16,ground=7" style overrides; unknown keys are an error.
  // "n" moves both vertex ceilings (canonical + search).
  static Limits parse(const std::string& text);

  // Defaults, overridden by the SATLAB_LIMITS environment variable if set.
  static Limits from_env();
};

} // namespace satlab
