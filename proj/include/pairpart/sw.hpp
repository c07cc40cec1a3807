#ifndef PAIRPART_SW_HPP
#define PAIRPART_SW_HPP

#include <numeric>

#include "pairpart/structure.hpp"

namespace pairpart {

/// Color sums of all sectors, sorted ascending. Anti-symmetry makes the
/// multiset closed under negation.
inline std::vector<int> sector_sums(const Partition& p) {
  if (!is_pair_neutral(p))
    throw std::domain_error("sector sums are defined on pair partitions with neutral blocks");
  std::vector<int> out;
  for (const Sector& s : sectors(p)) out.push_back(color_sum(p, s.points));
  std::sort(out.begin(), out.end());
  return out;
}

/// gcd of the absolute sector sums; 0 when every sector is neutral.
/// Divisibility of this value answers membership for every w at once.
inline int sector_gcd(const Partition& p) {
  int g = 0;
  for (int s : sector_sums(p)) g = std::gcd(g, s < 0 ? -s : s);
  return g;
}

/// Membership in S_w: a pair partition with neutral blocks all of whose
/// sector sums lie in wZ (for w = 0: are exactly zero).
inline bool in_S_w(const Partition& p, int w) {
  if (w < 0) throw std::domain_error("w must be non-negative");
  if (!is_pair_neutral(p)) return false;
  int g = sector_gcd(p);
  return w == 0 ? g == 0 : g % w == 0;
}

}  // namespace pairpart

#endif  // PAIRPART_SW_HPP
