#ifndef PAIRPART_STRUCTURE_HPP
#define PAIRPART_STRUCTURE_HPP

#include "pairpart/core.hpp"
#include "pairpart/ops.hpp"

namespace pairpart {

/// A cyclic interval whose two endpoints form a block of the host partition.
/// Points are kept in cyclic walk order, so points.front() and points.back()
/// are the boundary and the rest is the interior.
struct Sector {
  PointSet points;

  PointId first() const { return points.front(); }
  PointId last() const { return points.back(); }
  PointSet boundary() const { return {points.front(), points.back()}; }
  PointSet interior() const {
    if (points.size() <= 2) return {};
    return PointSet(points.begin() + 1, points.end() - 1);
  }
};

/// Two cyclically adjacent points with color sum zero, in cyclic order.
struct Turn {
  PointId a, b;
  PointSet points() const { return {a, b}; }
};

inline bool is_pair_partition(const Partition& p) {
  for (const auto& b : p.blocks())
    if (b.size() != 2) return false;
  return true;
}

/// Pair partition all of whose blocks are neutral. True for the empty
/// partition.
inline bool is_pair_neutral(const Partition& p) {
  for (const auto& b : p.blocks())
    if (b.size() != 2 || color_sum(p, b) != 0) return false;
  return true;
}

namespace detail {

// Gap index of cyclic position x relative to the sorted positions ps:
// which arc between consecutive members of ps contains x.
inline int gap_of(const std::vector<int>& ps, int x) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    int lo = ps[i], hi = ps[(i + 1) % ps.size()];
    if (lo < hi ? (lo < x && x < hi) : (x > lo || x < hi)) return static_cast<int>(i);
  }
  return -1;  // x coincides with a member; callers pass disjoint blocks
}

}  // namespace detail

/// Blocks cross if points of one interleave with points of the other in the
/// cyclic order.
inline bool crosses(const Partition& p, int block_a, int block_b) {
  if (block_a < 0 || block_a >= p.block_count() || block_b < 0 || block_b >= p.block_count())
    throw std::domain_error("invalid block id");
  if (block_a == block_b) return false;
  std::vector<int> pa, pb;
  for (PointId pt : p.block_points(block_a)) pa.push_back(cyclic_position(p, pt));
  for (PointId pt : p.block_points(block_b)) pb.push_back(cyclic_position(p, pt));
  std::sort(pa.begin(), pa.end());
  int first_gap = -2;
  for (int x : pb) {
    int g = detail::gap_of(pa, x);
    if (first_gap == -2) first_gap = g;
    else if (g != first_gap) return true;
  }
  return false;
}

inline bool crosses(const Partition& p, const PointSet& block_a, const PointSet& block_b) {
  if (block_a.empty() || block_b.empty()) throw std::domain_error("empty block");
  int ba = p.block_id(block_a.front());
  int bb = p.block_id(block_b.front());
  for (PointId pt : block_a)
    if (p.block_id(pt) != ba) throw std::domain_error("not a block of the partition");
  for (PointId pt : block_b)
    if (p.block_id(pt) != bb) throw std::domain_error("not a block of the partition");
  if (p.block_points(ba) != sorted_points(block_a) || p.block_points(bb) != sorted_points(block_b))
    throw std::domain_error("not a block of the partition");
  return crosses(p, ba, bb);
}

/// Crossing-connectivity classes of the blocks, each class listed as block ids.
inline std::vector<std::vector<int>> connected_components(const Partition& p) {
  const int n = p.block_count();
  detail::UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (crosses(p, i, j)) uf.unite(i, j);
  std::vector<int> root_to_comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> comps;
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (root_to_comp[static_cast<std::size_t>(r)] == -1) {
      root_to_comp[static_cast<std::size_t>(r)] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(root_to_comp[static_cast<std::size_t>(r)])].push_back(i);
  }
  return comps;
}

/// Single connected component; false for the empty partition.
inline bool is_connected(const Partition& p) { return connected_components(p).size() == 1; }

inline bool is_noncrossing(const Partition& p) {
  for (const auto& comp : connected_components(p))
    if (comp.size() > 1) return false;
  return true;
}

/// Erase everything outside the component's blocks.
inline Partition factor_partition(const Partition& p, const std::vector<int>& component) {
  auto comps = connected_components(p);
  std::vector<int> sorted = component;
  std::sort(sorted.begin(), sorted.end());
  bool found = false;
  for (auto& c : comps) {
    std::sort(c.begin(), c.end());
    if (c == sorted) { found = true; break; }
  }
  if (!found) throw std::domain_error("not a connected component of the partition");
  std::vector<signed char> keep(static_cast<std::size_t>(p.block_count()), 0);
  for (int b : sorted) keep[static_cast<std::size_t>(b)] = 1;
  PointSet complement;
  for (PointId pt : p.all_points())
    if (!keep[static_cast<std::size_t>(p.block_id(pt))]) complement.push_back(pt);
  return erase(p, complement);
}

/// The two cyclic intervals bounded by each block of a pair partition;
/// 2 * block_count sectors in total.
inline std::vector<Sector> sectors(const Partition& p) {
  if (!is_pair_partition(p))
    throw std::domain_error("sectors are defined for pair partitions only");
  std::vector<Sector> out;
  out.reserve(static_cast<std::size_t>(2 * p.block_count()));
  for (const auto& b : p.blocks()) {
    out.push_back({interval(p, b[0], b[1], IntervalKind::Closed)});
    out.push_back({interval(p, b[1], b[0], IntervalKind::Closed)});
  }
  return out;
}

/// All neutral cyclically adjacent pairs; with `within`, both points must lie
/// in the given set.
inline std::vector<Turn> turns(const Partition& p, const PointSet* within = nullptr) {
  std::vector<Turn> out;
  const int n = p.total_points();
  if (n < 2) return out;
  std::vector<signed char> in_within;
  if (within) {
    in_within.assign(static_cast<std::size_t>(n), 0);
    for (PointId pt : *within)
      in_within[static_cast<std::size_t>(cyclic_position(p, pt))] = 1;
  }
  for (int i = 0; i < n; ++i) {
    PointId a = point_at_cyclic_position(p, i);
    PointId b = point_at_cyclic_position(p, i + 1);
    if (within && !(in_within[static_cast<std::size_t>(i)] &&
                    in_within[static_cast<std::size_t>((i + 1) % n)]))
      continue;
    if (normalized_color(p, a) != normalized_color(p, b)) out.push_back({a, b});
  }
  return out;
}

/// Blocks other than {t.a, t.b} itself that meet the turn; at most two.
inline std::vector<PointSet> turn_blocks(const Partition& p, const Turn& t) {
  int ia = cyclic_position(p, t.a);
  int ib = cyclic_position(p, t.b);
  if ((ia + 1) % p.total_points() != ib || normalized_color(p, t.a) == normalized_color(p, t.b))
    throw std::domain_error("not a turn of the partition");
  PointSet tset = sorted_points({t.a, t.b});
  std::vector<int> ids{p.block_id(t.a)};
  if (p.block_id(t.b) != ids[0]) ids.push_back(p.block_id(t.b));
  std::vector<PointSet> out;
  for (int b : ids) {
    PointSet pts = p.block_points(b);
    if (pts != tset) out.push_back(std::move(pts));
  }
  return out;
}

}  // namespace pairpart

#endif  // PAIRPART_STRUCTURE_HPP
