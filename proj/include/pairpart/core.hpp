#ifndef PAIRPART_CORE_HPP
#define PAIRPART_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pairpart {

/// Point color. White renders as 'w', black as 'b'.
enum class Color : std::uint8_t { White, Black };

constexpr Color inverse(Color c) noexcept {
  return c == Color::White ? Color::Black : Color::White;
}

constexpr char to_char(Color c) noexcept { return c == Color::White ? 'w' : 'b'; }

enum class Row : std::uint8_t { Lower, Upper };

/// Address of a point: row plus 1-based left-to-right index within the row.
struct PointId {
  Row row{Row::Lower};
  int index{1};

  friend constexpr bool operator==(PointId a, PointId b) noexcept {
    return a.row == b.row && a.index == b.index;
  }
  // Canonical point order: all lower points before all upper, index ascending.
  friend constexpr bool operator<(PointId a, PointId b) noexcept {
    if (a.row != b.row) return a.row == Row::Lower;
    return a.index < b.index;
  }
};

constexpr PointId lower_point(int i) noexcept { return {Row::Lower, i}; }
constexpr PointId upper_point(int i) noexcept { return {Row::Upper, i}; }

using PointSet = std::vector<PointId>;

inline std::string to_string(PointId p) {
  return (p.row == Row::Lower ? "L" : "U") + std::to_string(p.index);
}

/// Which endpoints of a cyclic interval are included.
enum class IntervalKind : std::uint8_t { Closed, HalfOpenLeft, HalfOpenRight, Open };

/// A two-colored partition: an upper and a lower row of colored points
/// together with a division of all points into blocks.
///
/// Partitions are immutable values. Block labels are canonical (numbered by
/// first occurrence in canonical point order), so equality is structural and
/// render() is a unique key.
class Partition {
 public:
  Partition() = default;

  Partition(std::vector<Color> upper, std::vector<Color> lower,
            const std::vector<PointSet>& blocks)
      : upper_(std::move(upper)), lower_(std::move(lower)) {
    assign_blocks(blocks);
  }

  static Partition empty() { return Partition{}; }

  const std::vector<Color>& upper() const noexcept { return upper_; }
  const std::vector<Color>& lower() const noexcept { return lower_; }
  const std::vector<Color>& row(Row r) const noexcept {
    return r == Row::Lower ? lower_ : upper_;
  }

  int upper_size() const noexcept { return static_cast<int>(upper_.size()); }
  int lower_size() const noexcept { return static_cast<int>(lower_.size()); }
  int total_points() const noexcept { return upper_size() + lower_size(); }
  int block_count() const noexcept { return block_count_; }

  bool valid(PointId p) const noexcept {
    int n = p.row == Row::Lower ? lower_size() : upper_size();
    return p.index >= 1 && p.index <= n;
  }

  void require_valid(PointId p) const {
    if (!valid(p)) throw std::domain_error("invalid point " + to_string(p));
  }

  Color color(PointId p) const {
    require_valid(p);
    return row(p.row)[static_cast<std::size_t>(p.index - 1)];
  }

  /// Canonical block label of the point (0-based, contiguous).
  int block_id(PointId p) const {
    require_valid(p);
    const auto& ids = p.row == Row::Lower ? lower_block_ : upper_block_;
    return ids[static_cast<std::size_t>(p.index - 1)];
  }

  bool same_block(PointId a, PointId b) const { return block_id(a) == block_id(b); }

  /// Blocks in canonical order; members of each block in canonical point order.
  std::vector<PointSet> blocks() const {
    std::vector<PointSet> out(static_cast<std::size_t>(block_count_));
    for (int i = 1; i <= lower_size(); ++i)
      out[static_cast<std::size_t>(lower_block_[static_cast<std::size_t>(i - 1)])]
          .push_back(lower_point(i));
    for (int i = 1; i <= upper_size(); ++i)
      out[static_cast<std::size_t>(upper_block_[static_cast<std::size_t>(i - 1)])]
          .push_back(upper_point(i));
    return out;
  }

  PointSet block_points(int id) const {
    if (id < 0 || id >= block_count_) throw std::domain_error("invalid block id");
    PointSet out;
    for (int i = 1; i <= lower_size(); ++i)
      if (lower_block_[static_cast<std::size_t>(i - 1)] == id) out.push_back(lower_point(i));
    for (int i = 1; i <= upper_size(); ++i)
      if (upper_block_[static_cast<std::size_t>(i - 1)] == id) out.push_back(upper_point(i));
    return out;
  }

  PointSet all_points() const {
    PointSet out;
    out.reserve(static_cast<std::size_t>(total_points()));
    for (int i = 1; i <= lower_size(); ++i) out.push_back(lower_point(i));
    for (int i = 1; i <= upper_size(); ++i) out.push_back(upper_point(i));
    return out;
  }

  friend bool operator==(const Partition& a, const Partition& b) noexcept {
    return a.upper_ == b.upper_ && a.lower_ == b.lower_ &&
           a.lower_block_ == b.lower_block_ && a.upper_block_ == b.upper_block_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) noexcept {
    return !(a == b);
  }

  /// Construct from raw per-point block labels (any labeling; renormalized).
  static Partition from_block_ids(std::vector<Color> upper, std::vector<Color> lower,
                                  std::vector<int> upper_ids, std::vector<int> lower_ids) {
    Partition p;
    p.upper_ = std::move(upper);
    p.lower_ = std::move(lower);
    p.upper_block_ = std::move(upper_ids);
    p.lower_block_ = std::move(lower_ids);
    if (p.upper_block_.size() != p.upper_.size() || p.lower_block_.size() != p.lower_.size())
      throw std::invalid_argument("block labels do not match row lengths");
    p.relabel();
    return p;
  }

 private:
  void assign_blocks(const std::vector<PointSet>& blocks) {
    lower_block_.assign(lower_.size(), -1);
    upper_block_.assign(upper_.size(), -1);
    int id = 0;
    for (const auto& b : blocks) {
      if (b.empty()) throw std::invalid_argument("empty block");
      for (PointId pt : b) {
        if (!valid(pt))
          throw std::invalid_argument("block point " + to_string(pt) + " out of range");
        auto& slot = (pt.row == Row::Lower ? lower_block_ : upper_block_)
            [static_cast<std::size_t>(pt.index - 1)];
        if (slot != -1)
          throw std::invalid_argument("point " + to_string(pt) + " in more than one block");
        slot = id;
      }
      ++id;
    }
    for (int i = 1; i <= lower_size(); ++i)
      if (lower_block_[static_cast<std::size_t>(i - 1)] == -1)
        throw std::invalid_argument("point " + to_string(lower_point(i)) + " uncovered");
    for (int i = 1; i <= upper_size(); ++i)
      if (upper_block_[static_cast<std::size_t>(i - 1)] == -1)
        throw std::invalid_argument("point " + to_string(upper_point(i)) + " uncovered");
    block_count_ = id;
    relabel();
  }

  // Renumber block labels by first occurrence in canonical point order.
  void relabel() {
    std::vector<int> map;
    int next = 0;
    auto touch = [&](int& label) {
      if (label < 0) throw std::invalid_argument("uncovered point");
      if (label >= static_cast<int>(map.size())) map.resize(static_cast<std::size_t>(label) + 1, -1);
      if (map[static_cast<std::size_t>(label)] == -1) map[static_cast<std::size_t>(label)] = next++;
      label = map[static_cast<std::size_t>(label)];
    };
    // two passes: build the map in canonical order, then rewrite
    std::vector<int> lo = lower_block_, up = upper_block_;
    for (auto& x : lo) touch(x);
    for (auto& x : up) touch(x);
    lower_block_ = std::move(lo);
    upper_block_ = std::move(up);
    block_count_ = next;
  }

  std::vector<Color> upper_, lower_;
  std::vector<int> upper_block_, lower_block_;
  int block_count_{0};
};

/// All points in cyclic order: lower row left to right, then upper row right
/// to left. One full counter-clockwise traversal starting at L1.
inline PointSet cyclic_sequence(const Partition& p) {
  PointSet out;
  out.reserve(static_cast<std::size_t>(p.total_points()));
  for (int i = 1; i <= p.lower_size(); ++i) out.push_back(lower_point(i));
  for (int i = p.upper_size(); i >= 1; --i) out.push_back(upper_point(i));
  return out;
}

/// Position of a point in the cyclic order, 0-based.
inline int cyclic_position(const Partition& p, PointId pt) {
  p.require_valid(pt);
  if (pt.row == Row::Lower) return pt.index - 1;
  return p.lower_size() + (p.upper_size() - pt.index);
}

inline PointId point_at_cyclic_position(const Partition& p, int pos) {
  int n = p.total_points();
  pos = ((pos % n) + n) % n;
  if (pos < p.lower_size()) return lower_point(pos + 1);
  return upper_point(p.upper_size() - (pos - p.lower_size()));
}

/// Color the point would have after rotation to the lower row: lower points
/// keep their color, upper points get the inverse.
inline Color normalized_color(const Partition& p, PointId pt) {
  Color c = p.color(pt);
  return pt.row == Row::Upper ? inverse(c) : c;
}

/// Color sum: number of normalized-black minus normalized-white points in S.
inline int color_sum(const Partition& p, std::span<const PointId> s) {
  int sum = 0;
  for (PointId pt : s) sum += normalized_color(p, pt) == Color::Black ? 1 : -1;
  return sum;
}

inline int color_sum(const Partition& p, const PointSet& s) {
  return color_sum(p, std::span<const PointId>(s));
}

inline bool is_neutral(const Partition& p, const PointSet& s) { return color_sum(p, s) == 0; }

/// Cyclic interval from a to b, walking the cyclic order, with endpoints
/// included or excluded per kind. For a == b: [a,a] = {a}, while the
/// half-open intervals wrap once around the whole point set.
inline PointSet interval(const Partition& p, PointId a, PointId b, IntervalKind kind) {
  p.require_valid(a);
  p.require_valid(b);
  const int n = p.total_points();
  const int ia = cyclic_position(p, a);
  PointSet out;
  if (a == b) {
    switch (kind) {
      case IntervalKind::Closed: return {a};
      case IntervalKind::HalfOpenLeft:
      case IntervalKind::HalfOpenRight:
        for (int i = 0; i < n; ++i) out.push_back(point_at_cyclic_position(p, ia + i));
        return out;
      case IntervalKind::Open:
        for (int i = 1; i < n; ++i) out.push_back(point_at_cyclic_position(p, ia + i));
        return out;
    }
  }
  for (int i = 0;; ++i) {
    PointId pt = point_at_cyclic_position(p, ia + i);
    out.push_back(pt);
    if (pt == b) break;
  }
  if (kind == IntervalKind::HalfOpenLeft || kind == IntervalKind::Open)
    out.erase(out.begin());
  if (kind == IntervalKind::HalfOpenRight || kind == IntervalKind::Open) out.pop_back();
  return out;
}

/// Identity on the value; block labels are canonical by construction.
inline Partition canonicalize(const Partition& p) { return p; }

/// Canonical text form: `<upper>/<lower>;<blocks>`, blocks sorted by their
/// minimal member, members in canonical point order.
inline std::string render(const Partition& p) {
  std::string out;
  for (Color c : p.upper()) out.push_back(to_char(c));
  out.push_back('/');
  for (Color c : p.lower()) out.push_back(to_char(c));
  out.push_back(';');
  bool first = true;
  for (const auto& b : p.blocks()) {
    if (!first) out.push_back(',');
    first = false;
    for (PointId pt : b) out += to_string(pt);
  }
  return out;
}

namespace detail {

inline std::vector<Color> parse_colors(std::string_view s, std::string_view what) {
  std::vector<Color> out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == 'w') out.push_back(Color::White);
    else if (c == 'b') out.push_back(Color::Black);
    else
      throw std::invalid_argument("parse error in " + std::string(what) +
                                  " row: unexpected character '" + std::string(1, c) + "'");
  }
  return out;
}

}  // namespace detail

/// Parse the canonical text format. Errors name the offending token.
inline Partition parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    throw std::invalid_argument("parse error: missing '/' between rows");
  auto semi = text.find(';', slash);
  if (semi == std::string_view::npos)
    throw std::invalid_argument("parse error: missing ';' before blocks");
  std::vector<Color> upper = detail::parse_colors(text.substr(0, slash), "upper");
  std::vector<Color> lower =
      detail::parse_colors(text.substr(slash + 1, semi - slash - 1), "lower");

  std::vector<PointSet> blocks;
  std::string_view rest = text.substr(semi + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    std::size_t comma = rest.find(',', pos);
    std::string_view tok = rest.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                            : comma - pos);
    if (tok.empty()) throw std::invalid_argument("parse error: empty block");
    PointSet block;
    std::size_t i = 0;
    while (i < tok.size()) {
      char rc = tok[i];
      if (rc != 'L' && rc != 'U')
        throw std::invalid_argument("parse error at '" + std::string(tok.substr(i)) +
                                    "': expected L or U");
      std::size_t j = i + 1;
      while (j < tok.size() && tok[j] >= '0' && tok[j] <= '9') ++j;
      if (j == i + 1)
        throw std::invalid_argument("parse error at '" + std::string(tok.substr(i)) +
                                    "': missing index");
      int idx = 0;
      for (std::size_t k = i + 1; k < j; ++k) idx = idx * 10 + (tok[k] - '0');
      if (idx < 1)
        throw std::invalid_argument("parse error at '" + std::string(tok.substr(i, j - i)) +
                                    "': index must be positive");
      block.push_back({rc == 'L' ? Row::Lower : Row::Upper, idx});
      i = j;
    }
    blocks.push_back(std::move(block));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == rest.size()) throw std::invalid_argument("parse error: trailing comma");
  }
  return Partition(std::move(upper), std::move(lower), blocks);
}

inline PointSet sorted_points(PointSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace pairpart

#endif  // PAIRPART_CORE_HPP
