#pragma once

#include "tlwb/word.hpp"

namespace tlwb::fixtures {

// Two b's with only c's between must come after two a's with only c's between.
inline bool u2_scan(const Word& w) {
  const int n = w.length();
  auto next_non_c = [&](int p) {
    int q = p + 1;
    while (q <= n && w[q] == 'c') ++q;
    return q;
  };
  for (int i = 1; i <= n; ++i) {
    if (w[i] != 'b') continue;
    int j = next_non_c(i);
    if (j > n || w[j] != 'b') continue;
    bool ok = false;
    for (int m = 1; m < i && !ok; ++m) {
      if (w[m] != 'a') continue;
      int p = m - 1;
      while (p >= 1 && w[p] == 'c') --p;
      ok = p >= 1 && w[p] == 'a';
    }
    if (!ok) return false;
  }
  return true;
}

inline bool stair_scan(const Word& w, int hops) {
  const int n = w.length();
  for (int p = 1; p <= n; ++p) {
    if (w[p] != 'a') continue;
    int j = p, k = 0;
    while (k < hops) {
      int q = j + 1;
      while (q <= n && w[q] == 'c') ++q;
      if (q > n || w[q] != 'a') break;
      j = q;
      ++k;
    }
    if (k == hops) return true;
  }
  return false;
}

}  // namespace tlwb::fixtures
