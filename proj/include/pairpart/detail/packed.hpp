#ifndef PAIRPART_DETAIL_PACKED_HPP
#define PAIRPART_DETAIL_PACKED_HPP

#include <array>
#include <cstdint>

#include "pairpart/structure.hpp"

namespace pairpart::detail {

// The closure engine works on pair partitions with at most kMaxPackedPoints
// points, stored in a fixed-size canonical form. Point order is row-major:
// lower L1..Lm as 0..m-1, then upper U1..Uk as m..m+k-1.
inline constexpr int kMaxPackedPoints = 16;

/// Canonical 128-bit key of a small pair partition.
struct Packed {
  std::uint64_t pairing{0};  // nibble i = partner of point i
  std::uint64_t meta{0};     // bits 0..15 colors (set = black), 16..20 nl, 21..25 nu

  friend constexpr bool operator==(const Packed& a, const Packed& b) noexcept {
    return a.pairing == b.pairing && a.meta == b.meta;
  }
  friend constexpr bool operator<(const Packed& a, const Packed& b) noexcept {
    return a.meta != b.meta ? a.meta < b.meta : a.pairing < b.pairing;
  }
};

inline std::uint64_t hash_packed(const Packed& p) noexcept {
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  return mix(p.pairing ^ mix(p.meta));
}

/// Unpacked working form used by the op kernels.
struct Small {
  std::uint8_t nl{0}, nu{0};
  std::uint16_t colors{0};  // bit i set = point i black
  std::array<std::uint8_t, kMaxPackedPoints> partner{};

  int n() const noexcept { return nl + nu; }
  bool black(int i) const noexcept { return (colors >> i) & 1u; }
  // normalized color as a bit: lower points keep color, upper points invert
  bool norm_black(int i) const noexcept { return ((colors >> i) & 1u) ^ (i >= nl ? 1u : 0u); }
  int cyc_at(int pos) const noexcept {  // cyclic position -> point index
    return pos < nl ? pos : nl + nu - 1 - (pos - nl);
  }
  int pos_of(int i) const noexcept {  // point index -> cyclic position
    return i < nl ? i : nl + (nl + nu - 1 - i);
  }
};

inline Packed pack(const Small& s) {
  Packed out;
  for (int i = 0; i < s.n(); ++i)
    out.pairing |= static_cast<std::uint64_t>(s.partner[static_cast<std::size_t>(i)]) << (4 * i);
  out.meta = static_cast<std::uint64_t>(s.colors) |
             (static_cast<std::uint64_t>(s.nl) << 16) | (static_cast<std::uint64_t>(s.nu) << 21);
  return out;
}

inline Small unpack(const Packed& p) {
  Small out;
  out.colors = static_cast<std::uint16_t>(p.meta & 0xffffu);
  out.nl = static_cast<std::uint8_t>((p.meta >> 16) & 0x1fu);
  out.nu = static_cast<std::uint8_t>((p.meta >> 21) & 0x1fu);
  for (int i = 0; i < out.n(); ++i)
    out.partner[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>((p.pairing >> (4 * i)) & 0xfu);
  return out;
}

inline Small to_small(const Partition& p) {
  if (p.total_points() > kMaxPackedPoints)
    throw std::domain_error("engine supports at most 16 points per partition");
  if (!is_pair_partition(p)) throw std::domain_error("engine needs pair partitions");
  Small out;
  out.nl = static_cast<std::uint8_t>(p.lower_size());
  out.nu = static_cast<std::uint8_t>(p.upper_size());
  auto index = [&](PointId pt) {
    return pt.row == Row::Lower ? pt.index - 1 : p.lower_size() + pt.index - 1;
  };
  for (PointId pt : p.all_points())
    if (p.color(pt) == Color::Black) out.colors |= static_cast<std::uint16_t>(1u << index(pt));
  for (const auto& b : p.blocks()) {
    int i = index(b[0]), j = index(b[1]);
    out.partner[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(j);
    out.partner[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(i);
  }
  return out;
}

inline Partition to_partition(const Small& s) {
  std::vector<Color> lower, upper;
  for (int i = 0; i < s.nl; ++i) lower.push_back(s.black(i) ? Color::Black : Color::White);
  for (int i = s.nl; i < s.n(); ++i) upper.push_back(s.black(i) ? Color::Black : Color::White);
  std::vector<int> lid(static_cast<std::size_t>(s.nl)), uid(static_cast<std::size_t>(s.nu));
  for (int i = 0; i < s.n(); ++i) {
    int label = std::min(i, static_cast<int>(s.partner[static_cast<std::size_t>(i)]));
    if (i < s.nl) lid[static_cast<std::size_t>(i)] = label;
    else uid[static_cast<std::size_t>(i - s.nl)] = label;
  }
  return Partition::from_block_ids(std::move(upper), std::move(lower), std::move(uid),
                                   std::move(lid));
}

// Row words index composability: (size << 16) | color bits of the row.
inline std::uint32_t lower_word(const Small& s) noexcept {
  return (static_cast<std::uint32_t>(s.nl) << 16) |
         (static_cast<std::uint32_t>(s.colors) & ((1u << s.nl) - 1u));
}
inline std::uint32_t upper_word(const Small& s) noexcept {
  return (static_cast<std::uint32_t>(s.nu) << 16) |
         (static_cast<std::uint32_t>(s.colors) >> s.nl);
}

inline Small tensor_small(const Small& p, const Small& q) {
  Small out;
  out.nl = static_cast<std::uint8_t>(p.nl + q.nl);
  out.nu = static_cast<std::uint8_t>(p.nu + q.nu);
  // new index: p-lower i -> i, q-lower i -> p.nl+i,
  //            p-upper i -> q.nl+i, q-upper i -> p.nl+p.nu+i
  auto map_p = [&](int i) { return i < p.nl ? i : i + q.nl; };
  auto map_q = [&](int i) { return i < q.nl ? p.nl + i : p.nl + p.nu + i; };
  for (int i = 0; i < p.n(); ++i) {
    int ni = map_p(i);
    if (p.black(i)) out.colors |= static_cast<std::uint16_t>(1u << ni);
    out.partner[static_cast<std::size_t>(ni)] =
        static_cast<std::uint8_t>(map_p(p.partner[static_cast<std::size_t>(i)]));
  }
  for (int i = 0; i < q.n(); ++i) {
    int ni = map_q(i);
    if (q.black(i)) out.colors |= static_cast<std::uint16_t>(1u << ni);
    out.partner[static_cast<std::size_t>(ni)] =
        static_cast<std::uint8_t>(map_q(q.partner[static_cast<std::size_t>(i)]));
  }
  return out;
}

inline Small involution_small(const Small& p) {
  Small out;
  out.nl = p.nu;
  out.nu = p.nl;
  auto map = [&](int i) { return i < p.nl ? p.nu + i : i - p.nl; };
  for (int i = 0; i < p.n(); ++i) {
    int ni = map(i);
    if (p.black(i)) out.colors |= static_cast<std::uint16_t>(1u << ni);
    out.partner[static_cast<std::size_t>(ni)] =
        static_cast<std::uint8_t>(map(p.partner[static_cast<std::size_t>(i)]));
  }
  return out;
}

inline Small reflect_small(const Small& p) {
  Small out;
  out.nl = p.nl;
  out.nu = p.nu;
  auto map = [&](int i) { return i < p.nl ? p.nl - 1 - i : p.nl + (p.n() - 1 - i); };
  for (int i = 0; i < p.n(); ++i) {
    int ni = map(i);
    if (!p.black(i)) out.colors |= static_cast<std::uint16_t>(1u << ni);  // invert
    out.partner[static_cast<std::size_t>(ni)] =
        static_cast<std::uint8_t>(map(p.partner[static_cast<std::size_t>(i)]));
  }
  return out;
}

enum class SmallRotation : std::uint8_t { DownLeft, DownRight, UpLeft, UpRight };

inline Small rotate_small(const Small& p, SmallRotation dir) {
  // moved point and its slot in the new row-major layout
  int moved, dest;
  const bool down = dir == SmallRotation::DownLeft || dir == SmallRotation::DownRight;
  switch (dir) {
    case SmallRotation::DownLeft: moved = p.nl; dest = 0; break;             // U1 -> new L1
    case SmallRotation::DownRight: moved = p.n() - 1; dest = p.nl; break;    // Uk -> new Lm+1
    case SmallRotation::UpLeft: moved = 0; dest = p.nl - 1; break;           // L1 -> new U1
    default: moved = p.nl - 1; dest = p.n() - 1; break;                      // Lm -> new Uk+1
  }
  auto map = [&](int i) {
    if (i == moved) return dest;
    switch (dir) {
      case SmallRotation::DownLeft: return i < p.nl ? i + 1 : i;
      case SmallRotation::DownRight: return i < p.nl ? i : i + 1;
      case SmallRotation::UpLeft: return i < p.nl ? i - 1 : i;
      default: return i < p.nl ? i : i - 1;  // UpRight
    }
  };
  Small out;
  out.nl = static_cast<std::uint8_t>(p.nl + (down ? 1 : -1));
  out.nu = static_cast<std::uint8_t>(p.nu + (down ? -1 : 1));
  for (int i = 0; i < p.n(); ++i) {
    int ni = map(i);
    bool c = p.black(i) != (i == moved);  // the moved point inverts its color
    if (c) out.colors |= static_cast<std::uint16_t>(1u << ni);
    out.partner[static_cast<std::size_t>(ni)] =
        static_cast<std::uint8_t>(map(p.partner[static_cast<std::size_t>(i)]));
  }
  return out;
}

/// Composition kernel; loops are counted and discarded by callers.
inline Small compose_small(const Small& p, const Small& q, int* loops_out = nullptr) {
  const int pl = p.nl, mid = p.nu, qu = q.nu;
  // nodes: 0..pl-1 result lower, pl..pl+mid-1 middle, then result upper
  std::array<std::uint8_t, 3 * kMaxPackedPoints> parent{};
  const int total = pl + mid + qu;
  for (int i = 0; i < total; ++i) parent[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
  };
  for (int i = 0; i < p.n(); ++i) {
    int j = p.partner[static_cast<std::size_t>(i)];
    if (j > i) unite(i, j);  // p indices coincide with node ids 0..pl+mid-1
  }
  for (int i = 0; i < q.n(); ++i) {
    int j = q.partner[static_cast<std::size_t>(i)];
    if (j > i) unite(pl + i, pl + j);  // q lower glues onto the middle nodes
  }
  Small out;
  out.nl = static_cast<std::uint8_t>(pl);
  out.nu = static_cast<std::uint8_t>(qu);
  out.colors = static_cast<std::uint16_t>(
      (p.colors & ((1u << pl) - 1u)) | (static_cast<std::uint32_t>(q.colors >> q.nl) << pl));
  std::array<std::int8_t, 3 * kMaxPackedPoints> seen{};
  seen.fill(-1);
  auto out_index = [&](int node) { return node < pl ? node : node - mid; };
  for (int node = 0; node < total; ++node) {
    if (node >= pl && node < pl + mid) continue;
    int r = find(node);
    if (seen[static_cast<std::size_t>(r)] >= 0) {
      int a = out_index(seen[static_cast<std::size_t>(r)]);
      int b = out_index(node);
      out.partner[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
      out.partner[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a);
      seen[static_cast<std::size_t>(r)] = -2;
    } else {
      seen[static_cast<std::size_t>(r)] = static_cast<std::int8_t>(node);
    }
  }
  if (loops_out) {
    int loops = 0;
    for (int i = pl; i < pl + mid; ++i)
      if (find(i) == i && seen[static_cast<std::size_t>(i)] == -1) ++loops;
    *loops_out = loops;
  }
  return out;
}

/// Composition without loop accounting: pair-partition blocks glue into
/// chains, so each result block is found by walking its chain once.
inline Small compose_fast_small(const Small& p, const Small& q) {
  const int pl = p.nl, qu = q.nu;
  Small out;
  out.nl = static_cast<std::uint8_t>(pl);
  out.nu = static_cast<std::uint8_t>(qu);
  out.colors = static_cast<std::uint16_t>(
      (p.colors & ((1u << pl) - 1u)) | (static_cast<std::uint32_t>(q.colors >> q.nl) << pl));
  std::uint32_t done = 0;  // result points already paired
  const int n = pl + qu;
  for (int r = 0; r < n; ++r) {
    if ((done >> r) & 1u) continue;
    // walk from result point r until the chain leaves the middle row
    bool in_p = r < pl;
    int cur = in_p ? r : q.nl + (r - pl);
    while (true) {
      cur = in_p ? p.partner[static_cast<std::size_t>(cur)]
                 : q.partner[static_cast<std::size_t>(cur)];
      if (in_p && cur >= pl) {           // p-upper: hop onto q-lower
        cur -= pl;
        in_p = false;
      } else if (!in_p && cur < q.nl) {  // q-lower: hop onto p-upper
        cur += pl;
        in_p = true;
      } else {
        break;  // landed on a surviving point
      }
    }
    int mate = in_p ? cur : pl + (cur - q.nl);
    out.partner[static_cast<std::size_t>(r)] = static_cast<std::uint8_t>(mate);
    out.partner[static_cast<std::size_t>(mate)] = static_cast<std::uint8_t>(r);
    done |= (1u << r) | (1u << mate);
  }
  return out;
}

/// Erase the neutral turn at cyclic positions (pos, pos+1); callers check
/// neutrality first with is_turn_at. When the turn is itself a block it just
/// vanishes; otherwise the two outside partners become a block.
inline Small erase_turn_small(const Small& p, int pos) {
  const int n = p.n();
  const int x = p.cyc_at(pos), y = p.cyc_at((pos + 1) % n);
  const int px = p.partner[static_cast<std::size_t>(x)];
  const int py = p.partner[static_cast<std::size_t>(y)];
  Small out;
  out.nl = static_cast<std::uint8_t>(p.nl - (x < p.nl) - (y < p.nl));
  out.nu = static_cast<std::uint8_t>(p.nu - (x >= p.nl) - (y >= p.nl));
  std::array<std::int8_t, kMaxPackedPoints> map{};
  int next = 0;
  for (int i = 0; i < n; ++i)
    map[static_cast<std::size_t>(i)] =
        (i == x || i == y) ? std::int8_t(-1) : static_cast<std::int8_t>(next++);
  for (int i = 0; i < n; ++i) {
    int ni = map[static_cast<std::size_t>(i)];
    if (ni < 0) continue;
    if (p.black(i)) out.colors |= static_cast<std::uint16_t>(1u << ni);
    int j = p.partner[static_cast<std::size_t>(i)];
    int nj;
    if (j == x || j == y) {
      // remnant pairing: partner of x joins partner of y
      int mate = (j == x) ? py : px;
      nj = map[static_cast<std::size_t>(mate)];
    } else {
      nj = map[static_cast<std::size_t>(j)];
    }
    out.partner[static_cast<std::size_t>(ni)] = static_cast<std::uint8_t>(nj);
  }
  return out;
}

/// True if the two cyclically adjacent points at (pos, pos+1) are a turn.
inline bool is_turn_at(const Small& p, int pos) {
  const int n = p.n();
  if (n < 2) return false;
  int x = p.cyc_at(pos), y = p.cyc_at((pos + 1) % n);
  if (x == y) return false;
  return p.norm_black(x) != p.norm_black(y);
}

inline bool pair_neutral_small(const Small& p) {
  for (int i = 0; i < p.n(); ++i) {
    int j = p.partner[static_cast<std::size_t>(i)];
    if (j > i && p.norm_black(i) == p.norm_black(j)) return false;
  }
  return true;
}

/// gcd of absolute sector color sums (0 when all sectors are neutral).
/// Uses prefix sums over the cyclic order; for the block at cyclic positions
/// a < b, the sector [a..b] has sum prefix(b+1) - prefix(a).
inline int sector_gcd_small(const Small& p) {
  const int n = p.n();
  std::array<int, kMaxPackedPoints + 1> prefix{};
  for (int pos = 0; pos < n; ++pos)
    prefix[static_cast<std::size_t>(pos + 1)] =
        prefix[static_cast<std::size_t>(pos)] + (p.norm_black(p.cyc_at(pos)) ? 1 : -1);
  int g = 0;
  for (int i = 0; i < n; ++i) {
    int j = p.partner[static_cast<std::size_t>(i)];
    if (j < i) continue;
    int a = p.pos_of(i), b = p.pos_of(j);
    if (a > b) std::swap(a, b);
    int s = prefix[static_cast<std::size_t>(b + 1)] - prefix[static_cast<std::size_t>(a)];
    g = std::gcd(g, s < 0 ? -s : s);
  }
  return g;
}

inline bool in_S_w_small(const Small& p, int w) {
  if (!pair_neutral_small(p)) return false;
  int g = sector_gcd_small(p);
  return w == 0 ? g == 0 : g % w == 0;
}

inline bool is_bracket_small(const Small& p) {
  if (p.nl < 2 || p.nl != p.nu) return false;
  if (p.partner[0] != p.nl - 1) return false;  // lower boundary block
  if (!pair_neutral_small(p)) return false;
  Small inv = involution_small(p);
  if (!(pack(inv) == pack(p))) return false;
  if (lower_word(p) != upper_word(p)) return false;
  Small sq = compose_small(p, p);
  return pack(sq) == pack(p);
}

inline int weight_small(const Small& p) {
  int s = 0;
  for (int i = 0; i < p.nl; ++i) s += p.norm_black(i) ? 1 : -1;
  return s;
}

}  // namespace pairpart::detail

#endif  // PAIRPART_DETAIL_PACKED_HPP
