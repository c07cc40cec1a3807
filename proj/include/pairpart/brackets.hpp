#ifndef PAIRPART_BRACKETS_HPP
#define PAIRPART_BRACKETS_HPP

#include "pairpart/sw.hpp"

namespace pairpart {

/// Self-adjoint idempotent: p = p* and p^2 = p (loops of the square are
/// discarded).
inline bool is_projective(const Partition& p) {
  if (involution(p) != p || !composable(p, p)) return false;
  return compose(p, p).result == p;
}

/// Projective pair partition with neutral blocks whose lower row is a sector,
/// i.e. the two outermost lower points form a block. Has at least 4 points.
inline bool is_bracket(const Partition& p) {
  if (p.lower_size() < 2 || !is_pair_neutral(p) || !is_projective(p)) return false;
  return p.same_block(lower_point(1), lower_point(p.lower_size()));
}

inline void require_bracket(const Partition& p) {
  if (!is_bracket(p)) throw std::domain_error("not a bracket: " + render(p));
}

inline Color start_color(const Partition& p) {
  require_bracket(p);
  return p.color(lower_point(1));
}

/// Color sum of the lower row; equals the sum over its interior since the
/// boundary block is neutral.
inline int bracket_weight(const Partition& p) {
  require_bracket(p);
  PointSet lower_row;
  for (int i = 1; i <= p.lower_size(); ++i) lower_row.push_back(lower_point(i));
  return color_sum(p, lower_row);
}

/// Strip the outermost point of every row; inverse of br() below.
inline Partition arg(const Partition& p) {
  require_bracket(p);
  return erase(p, {lower_point(1), lower_point(p.lower_size()), upper_point(1),
                   upper_point(p.upper_size())});
}

/// The bracket with argument a whose leftmost lower point has color c: rows
/// are c . a . inverse(c) with a's blocks shifted inward and fresh outer
/// blocks on both rows.
inline Partition br(Color c, const Partition& a) {
  if (!is_pair_neutral(a) || !is_projective(a))
    throw std::domain_error("bracket argument must be projective with neutral blocks");
  std::vector<Color> row;
  row.reserve(static_cast<std::size_t>(a.lower_size()) + 2);
  row.push_back(c);
  for (Color x : a.lower()) row.push_back(x);
  row.push_back(inverse(c));
  const int outer_lower = a.block_count();
  const int outer_upper = a.block_count() + 1;
  std::vector<int> lid, uid;
  lid.push_back(outer_lower);
  for (int i = 1; i <= a.lower_size(); ++i) lid.push_back(a.block_id(lower_point(i)));
  lid.push_back(outer_lower);
  uid.push_back(outer_upper);
  for (int i = 1; i <= a.upper_size(); ++i) uid.push_back(a.block_id(upper_point(i)));
  uid.push_back(outer_upper);
  return Partition::from_block_ids(row, row, std::move(uid), std::move(lid));
}

/// Tensor product of identity strings with the given lower-row coloring.
inline Partition id_partition(const std::vector<Color>& colors) {
  std::vector<int> ids(colors.size());
  std::iota(ids.begin(), ids.end(), 0);
  return Partition::from_block_ids(colors, colors, ids, std::vector<int>(ids));
}

inline Partition id_partition(std::string_view word) {
  return id_partition(detail::parse_colors(word, "id"));
}

/// Computed view of a bracket; bracket-ness is re-checked on construction.
struct BracketInfo {
  Partition partition;
  Sector lower_sector;
  Partition argument;
  Color start;
  int weight;
};

inline BracketInfo bracket_info(const Partition& p) {
  require_bracket(p);
  Sector s{interval(p, lower_point(1), lower_point(p.lower_size()), IntervalKind::Closed)};
  return {p, std::move(s), arg(p), start_color(p), bracket_weight(p)};
}

/// Bracket product: concatenates the arguments behind a common outer block.
/// Defined for brackets starting with the same color; weight is additive.
inline Partition bracket_product(const Partition& p, const Partition& q) {
  require_bracket(p);
  require_bracket(q);
  if (start_color(p) != start_color(q))
    throw std::domain_error("bracket product needs matching start colors");
  return br(start_color(p), tensor(arg(p), arg(q)));
}

/// Weak inversion: wrap the whole bracket as the argument of an outer bracket
/// of the inverse start color. Preserves the weight.
inline Partition weak_inversion(const Partition& p) {
  require_bracket(p);
  return br(inverse(start_color(p)), p);
}

/// Strong inversion: flip the start color while padding the argument with one
/// identity string of each color.
inline Partition strong_inversion(const Partition& p) {
  require_bracket(p);
  Color c = start_color(p);
  return br(inverse(c), tensor(tensor(id_partition({c}), arg(p)), id_partition({inverse(c)})));
}

/// Verticolor-reflexive bracket with a turn at the exact middle of the lower
/// row whose (two) turn blocks both cross the boundary block.
inline bool is_dualizable(const Partition& p) {
  require_bracket(p);
  if (verticolor_reflect(p) != p) return false;
  const int m = p.lower_size();
  if (m <= 2) return false;  // interior must be non-empty; m is even here
  Turn middle{lower_point(m / 2), lower_point(m / 2 + 1)};
  if (normalized_color(p, middle.a) == normalized_color(p, middle.b)) return false;
  auto tbs = turn_blocks(p, middle);
  if (tbs.size() != 2) return false;
  PointSet boundary = p.block_points(p.block_id(lower_point(1)));
  return crosses(p, tbs[0], boundary) && crosses(p, tbs[1], boundary);
}

/// Half cyclic rotation; an involution, and both directions agree.
inline Partition dual(const Partition& p) {
  if (!is_dualizable(p)) throw std::domain_error("bracket is not dualizable");
  return rotate_cyclic(p, CyclicDirection::Left, p.lower_size() / 2);
}

enum class ResidualKind : std::uint8_t { FirstKind, SecondKind, NotResidual };

/// Residual brackets: connected with no turn strictly inside the lower row
/// (first kind), or connected, dualizable and with exactly one such turn
/// (second kind).
inline ResidualKind residual_kind(const Partition& p) {
  require_bracket(p);
  PointSet inner;
  for (int i = 2; i < p.lower_size(); ++i) inner.push_back(lower_point(i));
  const std::size_t n_turns = turns(p, &inner).size();
  if (is_connected(p)) {
    if (n_turns == 0) return ResidualKind::FirstKind;
    if (n_turns == 1 && is_dualizable(p)) return ResidualKind::SecondKind;
  }
  return ResidualKind::NotResidual;
}

/// Equivalence of sector restrictions: equal sizes, equal normalized color
/// words, matching boundary-crossing flags and matching interior pairings.
inline bool restriction_equivalent(const Partition& p, const Sector& s, const Partition& q,
                                   const Sector& s2) {
  if (s.points.size() != s2.points.size()) return false;
  auto profile = [](const Partition& h, const Sector& sec) {
    struct Entry { Color c; bool cross; int mate; };
    std::vector<Entry> out;
    const int n = static_cast<int>(sec.points.size());
    std::vector<int> pos_of_block(static_cast<std::size_t>(h.block_count()), -1);
    for (int i = 0; i < n; ++i) {
      PointId pt = sec.points[static_cast<std::size_t>(i)];
      Entry e{normalized_color(h, pt), false, -1};
      if (i > 0 && i < n - 1) {
        int b = h.block_id(pt);
        int other = pos_of_block[static_cast<std::size_t>(b)];
        if (other >= 0) {
          e.mate = other;
          out[static_cast<std::size_t>(other)].mate = i;
        } else {
          pos_of_block[static_cast<std::size_t>(b)] = i;
        }
      }
      out.push_back(e);
    }
    int boundary = h.block_id(sec.points.front());
    for (int i = 1; i < n - 1; ++i) {
      auto& e = out[static_cast<std::size_t>(i)];
      if (e.mate < 0)
        e.cross = crosses(h, h.block_id(sec.points[static_cast<std::size_t>(i)]), boundary);
    }
    return out;
  };
  auto pa = profile(p, s), pb = profile(q, s2);
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (pa[i].c != pb[i].c || pa[i].cross != pb[i].cross || pa[i].mate != pb[i].mate)
      return false;
  return true;
}

/// The bracket B(p, S) associated with a sector: lower row carries the
/// normalized colors of S, interior pairs of S are duplicated on both rows,
/// and boundary-crossing points become through strings.
inline Partition associated_bracket(const Partition& p, const Sector& s) {
  if (!is_pair_neutral(p))
    throw std::domain_error("associated brackets need a pair partition with neutral blocks");
  const int n = static_cast<int>(s.points.size());
  if (n < 2 || !p.same_block(s.first(), s.last()))
    throw std::domain_error("not a sector: boundary is not a block");
  std::vector<Color> row;
  for (PointId pt : s.points) row.push_back(normalized_color(p, pt));
  std::vector<int> lid(static_cast<std::size_t>(n), -1), uid(static_cast<std::size_t>(n), -1);
  int next = 0;
  lid[0] = lid[static_cast<std::size_t>(n - 1)] = next++;
  uid[0] = uid[static_cast<std::size_t>(n - 1)] = next++;
  std::vector<int> pos_of_block(static_cast<std::size_t>(p.block_count()), -1);
  for (int i = 1; i < n - 1; ++i) {
    int b = p.block_id(s.points[static_cast<std::size_t>(i)]);
    int other = pos_of_block[static_cast<std::size_t>(b)];
    if (other >= 0) {
      lid[static_cast<std::size_t>(i)] = lid[static_cast<std::size_t>(other)];
      uid[static_cast<std::size_t>(i)] = uid[static_cast<std::size_t>(other)];
    } else {
      pos_of_block[static_cast<std::size_t>(b)] = i;
      lid[static_cast<std::size_t>(i)] = next++;
      uid[static_cast<std::size_t>(i)] = next++;
    }
  }
  // unmatched interior points cross the boundary and become through strings
  for (int i = 1; i < n - 1; ++i) {
    int b = p.block_id(s.points[static_cast<std::size_t>(i)]);
    if (pos_of_block[static_cast<std::size_t>(b)] == i) {
      PointId mate{};
      for (PointId q : p.block_points(b))
        if (!(q == s.points[static_cast<std::size_t>(i)])) mate = q;
      bool mate_inside = false;
      for (int j = 1; j < n - 1; ++j)
        if (s.points[static_cast<std::size_t>(j)] == mate) mate_inside = true;
      if (!mate_inside) uid[static_cast<std::size_t>(i)] = lid[static_cast<std::size_t>(i)];
    }
  }
  return Partition::from_block_ids(row, row, std::move(uid), std::move(lid));
}

/// Generator of S_w: leftmost lower point of color c over w identity strings
/// of the inverse color.
inline Partition gen_S_w(int w, Color c) {
  if (w < 1) throw std::domain_error("gen_S_w needs w >= 1");
  return br(c, id_partition(std::vector<Color>(static_cast<std::size_t>(w), inverse(c))));
}

/// The S_0 generator family p_{c,v}: bracket over v strings of color c
/// followed by v strings of the inverse color.
inline Partition gen_S0(int v, Color c) {
  if (v < 1) throw std::domain_error("gen_S0 needs v >= 1");
  std::vector<Color> word(static_cast<std::size_t>(2 * v), c);
  for (int i = 0; i < v; ++i) word[static_cast<std::size_t>(v + i)] = inverse(c);
  return br(c, id_partition(word));
}

/// q_{c,v'} = Id(c^(v-v')) (x) p_{c,v'} (x) Id(inverse(c)^(v-v')).
inline Partition q_family(Color c, int v_prime, int v) {
  if (v_prime < 1 || v_prime >= v) throw std::domain_error("q_family needs 1 <= v' < v");
  std::vector<Color> left(static_cast<std::size_t>(v - v_prime), c);
  std::vector<Color> right(static_cast<std::size_t>(v - v_prime), inverse(c));
  return tensor(tensor(id_partition(left), gen_S0(v_prime, c)), id_partition(right));
}

}  // namespace pairpart

#endif  // PAIRPART_BRACKETS_HPP
