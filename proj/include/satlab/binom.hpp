#pragma once
#include <cstdint>

#include "satlab/errors.hpp"

namespace satlab {

// Exact binomial coefficient in 64 bits; throws LimitExceeded on overflow.
inline long long binom_ll(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (unsigned __int128)(n - k + i) / (unsigned __int128)i;
    if (r > (unsigned __int128)INT64_MAX)
      throw LimitExceeded("binomial coefficient exceeds 64 bits");
  }
  return (long long)r;
}

} // namespace satlab
