#ifndef PAIRPART_VERIFY_HPP
#define PAIRPART_VERIFY_HPP

#include <random>
#include <sstream>

#include "pairpart/engine.hpp"

namespace pairpart {

/// One verification case outcome, rendered as key=value lines by the CLI.
struct VerifyCase {
  std::string suite;
  std::string name;
  bool passed{false};
  std::string counterexample;  // canonical text when failed
};

namespace detail {

inline void report(std::vector<VerifyCase>& out, std::string suite, std::string name,
                   bool passed, std::string counterexample = "") {
  out.push_back({std::move(suite), std::move(name), passed, std::move(counterexample)});
}

// Shared fixtures for the lemma suites.
inline Partition cross_ww() { return parse("ww/ww;L1U2,L2U1"); }
inline Partition half_lib_wbw() { return parse("wbw/wbw;L1U3,L2U2,L3U1"); }
inline Partition half_lib_bwb() { return parse("bwb/bwb;L1U3,L2U2,L3U1"); }
inline Partition bracket_bwbw() { return br(Color::Black, id_partition("wb")); }
inline Partition bracket_wbwb() { return br(Color::White, id_partition("bw")); }

inline Sector lower_row_sector(const Partition& p) {
  return {interval(p, lower_point(1), lower_point(p.lower_size()), IntervalKind::Closed)};
}

inline Partition associated_bracket_via_projection(const Partition& p, const Sector& s) {
  Partition q = p;
  while (q.upper_size() > 0) q = rotate(q, RotationDirection::DownRight);
  q = rotate_cyclic(q, CyclicDirection::Right, cyclic_position(p, s.points.front()));
  for (int i = q.lower_size(); i > static_cast<int>(s.points.size()); --i)
    q = rotate(q, RotationDirection::UpRight);
  return compose(q, involution(q)).result;
}

inline std::vector<detail::Packed> bounded_slice(const ClosureSet& c, int pts) {
  return c.packed_members_with_at_most(pts);
}

inline bool closures_agree(const std::vector<Partition>& gens_a,
                           const std::vector<Partition>& gens_b, int bound, int compare,
                           int jobs) {
  ClosureConfig cfg;
  cfg.max_points = bound;
  cfg.jobs = jobs;
  auto a = closure(gens_a, cfg);
  auto b = closure(gens_b, cfg);
  return bounded_slice(a, compare) == bounded_slice(b, compare);
}

}  // namespace detail

/// Anti-symmetry of the two sector sums of every block (exhaustive).
inline void verify_anti_symmetry(int max_points, std::vector<VerifyCase>& out) {
  for (const auto& p : enumerate_p2nb(max_points, EnumerateShape::AllRowSplits)) {
    for (const auto& b : p.blocks()) {
      int s1 = color_sum(p, interval(p, b[0], b[1], IntervalKind::Closed));
      int s2 = color_sum(p, interval(p, b[1], b[0], IntervalKind::Closed));
      if (s1 != -s2) {
        detail::report(out, "anti_symmetry", "sector_sums", false, render(p));
        return;
      }
    }
  }
  detail::report(out, "anti_symmetry", "sector_sums", true);
}

/// Interval color sums decompose over any middle point (exhaustive).
inline void verify_decomposition(int max_points, std::vector<VerifyCase>& out) {
  for (const auto& p : enumerate_p2nb(max_points, EnumerateShape::AllRowSplits)) {
    const auto pts = p.all_points();
    const int n = static_cast<int>(pts.size());
    if (n == 0) continue;
    // prefix sums over two turns of the cyclic order make each interval O(1)
    std::vector<int> pre(static_cast<std::size_t>(2 * n + 1), 0);
    for (int i = 0; i < 2 * n; ++i)
      pre[static_cast<std::size_t>(i + 1)] =
          pre[static_cast<std::size_t>(i)] +
          (normalized_color(p, point_at_cyclic_position(p, i)) == Color::Black ? 1 : -1);
    auto half_open = [&](int a, int b) {  // ]a,b]; b == a wraps the full loop
      int to = b > a ? b : b + n;
      return pre[static_cast<std::size_t>(to + 1)] - pre[static_cast<std::size_t>(a + 1)];
    };
    for (int a = 0; a < n; ++a)
      for (int a2 = 0; a2 < n; ++a2)
        for (int bm = 0; bm < n; ++bm) {
          int lhs = half_open(a, a2);
          int rhs = half_open(a, bm) + half_open(bm, a2);
          if (lhs != rhs) {
            std::ostringstream ce;
            ce << render(p) << " a=" << a << " a'=" << a2 << " b=" << bm;
            detail::report(out, "decomposition", "interval_sums", false, ce.str());
            return;
          }
        }
  }
  detail::report(out, "decomposition", "interval_sums", true);
}

/// S_1 membership coincides with pair neutrality (exhaustive).
inline void verify_s1_identity(int max_points, std::vector<VerifyCase>& out) {
  for (const auto& p : enumerate_p2nb(max_points, EnumerateShape::AllRowSplits)) {
    if (in_S_w(p, 1) != is_pair_neutral(p)) {
      detail::report(out, "s1_identity", "membership", false, render(p));
      return;
    }
  }
  detail::report(out, "s1_identity", "membership", true);
}

/// The S_w slices of the enumeration are closed under the category operations
/// that stay within the bound.
inline void verify_sw_category_closure(int max_points, std::vector<VerifyCase>& out) {
  auto universe = enumerate_p2nb(max_points, EnumerateShape::AllRowSplits);
  OpSet ops{OpSet::Tensor | OpSet::Compose | OpSet::Involute | OpSet::Rotate |
            OpSet::VerticolorReflect};
  for (int w = 0; w <= 3; ++w) {
    std::vector<Partition> filter;
    for (const auto& p : universe)
      if (in_S_w(p, w)) filter.push_back(p);
    auto violations = verify_category_closed(make_set(filter, max_points, ops));
    detail::report(out, "sw_category_closure", "w" + std::to_string(w), violations.empty(),
                   violations.empty() ? "" : render(violations.front().result));
  }
}

/// Bracket calculus identities: reconstruction, product laws, duals and the
/// chain identity for the S_0 generators.
inline void verify_bracket_identities(std::vector<VerifyCase>& out) {
  bool reconstruction = true;
  std::string ce;
  for (const auto& p : enumerate_p2nb(10, EnumerateShape::AllRowSplits)) {
    if (!is_bracket(p)) continue;
    if (br(start_color(p), arg(p)) != p) {
      reconstruction = false;
      ce = render(p);
      break;
    }
  }
  detail::report(out, "bracket_identities", "reconstruction", reconstruction, ce);

  std::vector<Partition> brackets;
  for (const auto& p : enumerate_p2nb(8, EnumerateShape::AllRowSplits))
    if (is_bracket(p)) brackets.push_back(p);
  bool assoc = true, additive = true;
  for (const auto& a : brackets)
    for (const auto& b : brackets) {
      if (start_color(a) != start_color(b)) continue;
      auto ab = bracket_product(a, b);
      additive = additive && bracket_weight(ab) == bracket_weight(a) + bracket_weight(b);
      for (const auto& c : brackets) {
        if (start_color(b) != start_color(c)) continue;
        assoc = assoc && bracket_product(ab, c) == bracket_product(a, bracket_product(b, c));
      }
    }
  detail::report(out, "bracket_identities", "product_associative", assoc);
  detail::report(out, "bracket_identities", "weight_additive", additive);

  bool dual_inv = true;
  for (const auto& p : brackets)
    if (is_dualizable(p)) dual_inv = dual_inv && dual(dual(p)) == p;
  detail::report(out, "bracket_identities", "dual_involution", dual_inv);

  bool chain = true;
  for (Color c : {Color::White, Color::Black})
    for (int v = 1; v <= 4; ++v) {
      auto lhs = dual(gen_S0(v, inverse(c)));
      auto rhs = gen_S0(v, c);
      for (int vp = v - 1; vp >= 1; --vp) rhs = compose(rhs, q_family(c, vp, v)).result;
      chain = chain && lhs == rhs;
    }
  detail::report(out, "bracket_identities", "dual_chain", chain);
}

/// Direct associated-bracket construction against the rotate-and-project
/// oracle, every sector of every enumerated partition.
inline void verify_associated_bracket_oracle(int max_points, std::vector<VerifyCase>& out) {
  for (const auto& p : enumerate_p2nb(max_points, EnumerateShape::AllRowSplits)) {
    for (const auto& s : sectors(p)) {
      if (associated_bracket(p, s) != detail::associated_bracket_via_projection(p, s)) {
        detail::report(out, "associated_bracket", "oracle_equivalence", false,
                       render(p) + " at " + to_string(s.points.front()));
        return;
      }
    }
  }
  detail::report(out, "associated_bracket", "oracle_equivalence", true);
}

/// H is a weight homomorphism compatible with reflection and weak inversion.
inline void verify_weight_map(int max_points, std::vector<VerifyCase>& out) {
  bool refl = true, win = true;
  for (const auto& p : enumerate_p2nb(max_points, EnumerateShape::AllRowSplits)) {
    if (!is_bracket(p)) continue;
    refl = refl && bracket_weight(verticolor_reflect(p)) == -bracket_weight(p);
    win = win && bracket_weight(weak_inversion(p)) == bracket_weight(p);
  }
  detail::report(out, "weight_map", "reflection_negates", refl);
  detail::report(out, "weight_map", "weak_inversion_preserves", win);
}

/// Bounded-closure forms of the generation lemmas on the named instances:
/// de-erasing of a turn, weak and strong inversion, and the four-way
/// generator equality.
inline void verify_generation_lemmas(int bound, int compare, int jobs,
                                     std::vector<VerifyCase>& out) {
  using detail::closures_agree;
  auto gen1 = gen_S_w(1, Color::Black);
  auto gen2 = gen_S_w(2, Color::Black);
  auto pb1 = gen_S0(1, Color::Black);

  // de-erasing: <p> = <E(p,T), B(p,S)> with dS a turn block of T
  struct Named {
    const char* name;
    Partition p;
    Turn t;
    PointId sector_from, sector_to;
  };
  // sectors are chosen short enough that B(p,S) fits the closure bound
  std::vector<Named> cases = {
      {"gen1", gen1, Turn{lower_point(1), lower_point(2)}, lower_point(2), upper_point(2)},
      {"gen2", gen2, Turn{lower_point(1), lower_point(2)}, upper_point(2), lower_point(2)},
      {"pb1", pb1, Turn{lower_point(2), lower_point(3)}, upper_point(2), lower_point(2)},
  };
  for (const auto& c : cases) {
    Sector s{interval(c.p, c.sector_from, c.sector_to, IntervalKind::Closed)};
    auto erased = erase(c.p, {c.t.a, c.t.b});
    auto bracket = associated_bracket(c.p, s);
    bool ok = closures_agree({c.p}, {erased, bracket}, bound, compare, jobs);
    detail::report(out, "de_erasing", c.name, ok);
  }

  // plus sampled 6-point instances that admit a turn-block configuration
  {
    auto universe = enumerate_p2nb(6, EnumerateShape::AllRowSplits);
    std::mt19937_64 rng(0x5ec70f5u);
    int sampled = 0;
    while (sampled < 4) {
      const Partition& p = universe[rng() % universe.size()];
      if (p.total_points() < 6) continue;
      bool done = false;
      for (const Turn& t : turns(p)) {
        for (const auto& tb : turn_blocks(p, t)) {
          Sector s{interval(p, tb[0], tb[1], IntervalKind::Closed)};
          if (s.points.size() > static_cast<std::size_t>(bound) / 2)
            s = Sector{interval(p, tb[1], tb[0], IntervalKind::Closed)};
          if (s.points.size() > static_cast<std::size_t>(bound) / 2) continue;
          auto erased = erase(p, {t.a, t.b});
          auto bracket = associated_bracket(p, s);
          bool ok = closures_agree({p}, {erased, bracket}, bound, compare, jobs);
          detail::report(out, "de_erasing", "sample_" + render(p), ok);
          done = true;
          break;
        }
        if (done) break;
      }
      if (done) ++sampled;
    }
  }

  detail::report(out, "weak_inversion", "gen1",
                 closures_agree({gen1}, {weak_inversion(gen1)}, bound, compare, jobs));
  detail::report(out, "strong_inversion", "gen1",
                 closures_agree({gen1, detail::half_lib_wbw()}, {strong_inversion(gen1)},
                                bound, compare, jobs));

  ClosureConfig cfg;
  cfg.max_points = bound;
  cfg.jobs = jobs;
  auto slice = [&](const Partition& g) {
    return closure({g}, cfg).packed_members_with_at_most(compare);
  };
  auto s1 = slice(detail::bracket_bwbw());
  auto s2 = slice(detail::half_lib_wbw());
  auto s3 = slice(detail::half_lib_bwb());
  auto s4 = slice(detail::bracket_wbwb());
  detail::report(out, "four_way_generators", "equal_closures", s1 == s2 && s2 == s3 && s3 == s4);
}

/// Umbrella: every suite at desk scale, or a single named one. max_points
/// caps the exhaustive enumeration parts; the closure equalities run at
/// bound 10 / compare 6.
inline std::vector<VerifyCase> verify_lemmas(int max_points, int jobs = 0,
                                             const std::string& only = "all") {
  std::vector<VerifyCase> out;
  auto want = [&](const char* suite) { return only == "all" || only == suite; };
  if (want("anti_symmetry")) verify_anti_symmetry(max_points, out);
  if (want("decomposition")) verify_decomposition(std::min(max_points, 8), out);
  if (want("s1_identity")) verify_s1_identity(max_points, out);
  if (want("sw_category_closure")) verify_sw_category_closure(std::min(max_points, 6), out);
  if (want("bracket_identities")) verify_bracket_identities(out);
  if (want("associated_bracket")) verify_associated_bracket_oracle(std::min(max_points, 8), out);
  if (want("weight_map")) verify_weight_map(std::min(max_points, 8), out);
  if (want("generation")) verify_generation_lemmas(10, 6, jobs, out);
  return out;
}

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "anti_symmetry", "decomposition",      "s1_identity", "sw_category_closure",
      "bracket_identities", "associated_bracket", "weight_map",  "generation"};
  return names;
}

}  // namespace pairpart

#endif  // PAIRPART_VERIFY_HPP
