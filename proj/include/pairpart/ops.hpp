#ifndef PAIRPART_OPS_HPP
#define PAIRPART_OPS_HPP

#include <optional>

#include "pairpart/core.hpp"

namespace pairpart {

enum class RotationDirection : std::uint8_t { DownLeft, DownRight, UpLeft, UpRight };

enum class CyclicDirection : std::uint8_t { Left, Right };

/// Result of vertical concatenation: the partition plus the number of closed
/// middle components swallowed by the gluing.
struct CompositionResult {
  Partition result;
  int loops{0};
};

/// Horizontal concatenation; q's points are re-indexed after p's.
inline Partition tensor(const Partition& p, const Partition& q) {
  std::vector<Color> upper = p.upper(), lower = p.lower();
  upper.insert(upper.end(), q.upper().begin(), q.upper().end());
  lower.insert(lower.end(), q.lower().begin(), q.lower().end());
  std::vector<int> uid, lid;
  uid.reserve(upper.size());
  lid.reserve(lower.size());
  const int shift = p.block_count();
  for (int i = 1; i <= p.lower_size(); ++i) lid.push_back(p.block_id(lower_point(i)));
  for (int i = 1; i <= q.lower_size(); ++i) lid.push_back(shift + q.block_id(lower_point(i)));
  for (int i = 1; i <= p.upper_size(); ++i) uid.push_back(p.block_id(upper_point(i)));
  for (int i = 1; i <= q.upper_size(); ++i) uid.push_back(shift + q.block_id(upper_point(i)));
  return Partition::from_block_ids(std::move(upper), std::move(lower), std::move(uid),
                                   std::move(lid));
}

/// Swap the upper and the lower row; colors are kept.
inline Partition involution(const Partition& p) {
  std::vector<int> uid, lid;
  for (int i = 1; i <= p.upper_size(); ++i) lid.push_back(p.block_id(upper_point(i)));
  for (int i = 1; i <= p.lower_size(); ++i) uid.push_back(p.block_id(lower_point(i)));
  return Partition::from_block_ids(p.lower(), p.upper(), std::move(uid), std::move(lid));
}

/// Reverse both rows left to right and invert every color.
inline Partition verticolor_reflect(const Partition& p) {
  std::vector<Color> upper(p.upper().rbegin(), p.upper().rend());
  std::vector<Color> lower(p.lower().rbegin(), p.lower().rend());
  for (auto& c : upper) c = inverse(c);
  for (auto& c : lower) c = inverse(c);
  std::vector<int> uid, lid;
  for (int i = p.upper_size(); i >= 1; --i) uid.push_back(p.block_id(upper_point(i)));
  for (int i = p.lower_size(); i >= 1; --i) lid.push_back(p.block_id(lower_point(i)));
  return Partition::from_block_ids(std::move(upper), std::move(lower), std::move(uid),
                                   std::move(lid));
}

/// True iff the upper row of p and the lower row of q agree as color words.
inline bool composable(const Partition& p, const Partition& q) {
  return p.upper() == q.lower();
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(a)] = b;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

/// Vertical concatenation: p below, q above. The glued middle row disappears;
/// blocks of the result are the connected components restricted to surviving
/// points, and fully middle components are reported as loops.
inline CompositionResult compose(const Partition& p, const Partition& q) {
  if (!composable(p, q)) throw std::domain_error("partitions are not composable");
  const int m = p.lower_size();   // surviving lower
  const int a = p.upper_size();   // glued middle
  const int t = q.upper_size();   // surviving upper
  detail::UnionFind uf(m + a + t);
  // node layout: [0,m) p-lower, [m,m+a) middle, [m+a,m+a+t) q-upper
  auto p_node = [&](PointId pt) {
    return pt.row == Row::Lower ? pt.index - 1 : m + pt.index - 1;
  };
  auto q_node = [&](PointId pt) {
    return pt.row == Row::Lower ? m + pt.index - 1 : m + a + pt.index - 1;
  };
  for (const auto& b : p.blocks())
    for (std::size_t i = 1; i < b.size(); ++i) uf.unite(p_node(b[0]), p_node(b[i]));
  for (const auto& b : q.blocks())
    for (std::size_t i = 1; i < b.size(); ++i) uf.unite(q_node(b[0]), q_node(b[i]));

  std::vector<int> lid(static_cast<std::size_t>(m)), uid(static_cast<std::size_t>(t));
  std::vector<signed char> root_survives(static_cast<std::size_t>(m + a + t), 0);
  for (int i = 0; i < m; ++i) {
    int r = uf.find(i);
    lid[static_cast<std::size_t>(i)] = r;
    root_survives[static_cast<std::size_t>(r)] = 1;
  }
  for (int i = 0; i < t; ++i) {
    int r = uf.find(m + a + i);
    uid[static_cast<std::size_t>(i)] = r;
    root_survives[static_cast<std::size_t>(r)] = 1;
  }
  int loops = 0;
  for (int i = 0; i < a; ++i) {
    int r = uf.find(m + i);
    if (r == m + i && !root_survives[static_cast<std::size_t>(r)]) ++loops;
  }
  return {Partition::from_block_ids(q.upper(), p.lower(), std::move(uid), std::move(lid)),
          loops};
}

/// Move one outermost point to the other row, inverting its color; it stays
/// in its block. DownLeft and DownRight take the leftmost and rightmost upper
/// point, UpLeft and UpRight the leftmost and rightmost lower point.
inline Partition rotate(const Partition& p, RotationDirection dir) {
  const bool from_upper = dir == RotationDirection::DownLeft || dir == RotationDirection::DownRight;
  if (from_upper && p.upper_size() == 0)
    throw std::domain_error("rotation source row (upper) is empty");
  if (!from_upper && p.lower_size() == 0)
    throw std::domain_error("rotation source row (lower) is empty");

  std::vector<Color> upper = p.upper(), lower = p.lower();
  std::vector<int> uid, lid;
  for (int i = 1; i <= p.upper_size(); ++i) uid.push_back(p.block_id(upper_point(i)));
  for (int i = 1; i <= p.lower_size(); ++i) lid.push_back(p.block_id(lower_point(i)));

  auto take = [](std::vector<Color>& cs, std::vector<int>& ids, bool front) {
    std::size_t at = front ? 0 : cs.size() - 1;
    std::pair<Color, int> out{cs[at], ids[at]};
    cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(at));
    ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(at));
    return out;
  };
  auto put = [](std::vector<Color>& cs, std::vector<int>& ids, bool front,
                std::pair<Color, int> moved) {
    std::size_t at = front ? 0 : cs.size();
    cs.insert(cs.begin() + static_cast<std::ptrdiff_t>(at), inverse(moved.first));
    ids.insert(ids.begin() + static_cast<std::ptrdiff_t>(at), moved.second);
  };

  switch (dir) {
    case RotationDirection::DownLeft: put(lower, lid, true, take(upper, uid, true)); break;
    case RotationDirection::DownRight: put(lower, lid, false, take(upper, uid, false)); break;
    case RotationDirection::UpLeft: put(upper, uid, true, take(lower, lid, true)); break;
    case RotationDirection::UpRight: put(upper, uid, false, take(lower, lid, false)); break;
  }
  return Partition::from_block_ids(std::move(upper), std::move(lower), std::move(uid),
                                   std::move(lid));
}

/// Shift the cyclic order by k positions. Left is (DownLeft then UpRight),
/// right is (UpLeft then DownRight); the two elementary moves touch opposite
/// ends, so when one row is empty they are applied in the workable order.
inline Partition rotate_cyclic(const Partition& p, CyclicDirection dir, int k = 1) {
  if (k < 0) throw std::domain_error("rotation count must be non-negative");
  Partition out = p;
  if (out.total_points() == 0) return out;
  for (int step = 0; step < k; ++step) {
    if (dir == CyclicDirection::Left) {
      if (out.upper_size() > 0)
        out = rotate(rotate(out, RotationDirection::DownLeft), RotationDirection::UpRight);
      else
        out = rotate(rotate(out, RotationDirection::UpRight), RotationDirection::DownLeft);
    } else {
      if (out.lower_size() > 0)
        out = rotate(rotate(out, RotationDirection::UpLeft), RotationDirection::DownRight);
      else
        out = rotate(rotate(out, RotationDirection::DownRight), RotationDirection::UpLeft);
    }
  }
  return out;
}

/// Remove the points of S. Blocks fully inside S vanish; the remnants of all
/// blocks that met S are combined into a single block; untouched blocks stay.
inline Partition erase(const Partition& p, const PointSet& s) {
  for (PointId pt : s) p.require_valid(pt);
  std::vector<signed char> gone_lower(static_cast<std::size_t>(p.lower_size()), 0);
  std::vector<signed char> gone_upper(static_cast<std::size_t>(p.upper_size()), 0);
  std::vector<signed char> touched(static_cast<std::size_t>(p.block_count()), 0);
  for (PointId pt : s) {
    (pt.row == Row::Lower ? gone_lower : gone_upper)[static_cast<std::size_t>(pt.index - 1)] = 1;
    touched[static_cast<std::size_t>(p.block_id(pt))] = 1;
  }
  const int merged = p.block_count();  // fresh label for combined remnants
  std::vector<Color> upper, lower;
  std::vector<int> uid, lid;
  for (int i = 1; i <= p.lower_size(); ++i) {
    if (gone_lower[static_cast<std::size_t>(i - 1)]) continue;
    int b = p.block_id(lower_point(i));
    lower.push_back(p.color(lower_point(i)));
    lid.push_back(touched[static_cast<std::size_t>(b)] ? merged : b);
  }
  for (int i = 1; i <= p.upper_size(); ++i) {
    if (gone_upper[static_cast<std::size_t>(i - 1)]) continue;
    int b = p.block_id(upper_point(i));
    upper.push_back(p.color(upper_point(i)));
    uid.push_back(touched[static_cast<std::size_t>(b)] ? merged : b);
  }
  return Partition::from_block_ids(std::move(upper), std::move(lower), std::move(uid),
                                   std::move(lid));
}

}  // namespace pairpart

#endif  // PAIRPART_OPS_HPP
