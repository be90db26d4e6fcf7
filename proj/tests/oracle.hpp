#pragma once
// Brute-force reference oracles, deliberately independent of the exact-cover
// engine: factor status is decided by enumerating every candidate complement
// of the right size and checking uniqueness with a hand-rolled counter.

#include <vector>

#include "grouptile/group.hpp"
#include "grouptile/subset.hpp"

namespace oracle {

inline bool next_combination(std::vector<int>& comb, int n) {
  int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[static_cast<size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++comb[static_cast<size_t>(i)];
  for (int j = i + 1; j < k; ++j)
    comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
  return true;
}

// Does some B of size |G|/|A| give every x in G a unique representation
// x = a*b? Scans all C(n, k) candidates.
inline bool naive_is_left_factor(const grouptile::GroupTable& g, const grouptile::Subset& a) {
  int n = g.order(), sz = a.size();
  if (sz == 0 || n % sz != 0) return false;
  int k = n / sz;
  const auto as = a.elements();
  std::vector<int> comb(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) comb[static_cast<size_t>(i)] = i;
  do {
    int count[64] = {0};
    bool ok = true;
    for (int x : as) {
      for (int b : comb) {
        if (++count[g.mul(x, b)] > 1) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) return true;  // n products, all distinct, so they cover G
  } while (next_combination(comb, n));
  return false;
}

inline bool naive_is_right_factor(const grouptile::GroupTable& g, const grouptile::Subset& a) {
  int n = g.order(), sz = a.size();
  if (sz == 0 || n % sz != 0) return false;
  int k = n / sz;
  const auto as = a.elements();
  std::vector<int> comb(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) comb[static_cast<size_t>(i)] = i;
  do {
    int count[64] = {0};
    bool ok = true;
    for (int b : comb) {
      for (int x : as) {
        if (++count[g.mul(b, x)] > 1) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) return true;
  } while (next_combination(comb, n));
  return false;
}

}  // namespace oracle
