#include <catch2/catch_amalgamated.hpp>

#include "pairpart/brackets.hpp"
#include "pairpart/engine.hpp"

using namespace pairpart;

namespace {
Partition pp(const char* s) { return parse(s); }

Partition gen1() { return gen_S_w(1, Color::Black); }
Partition gen2() { return gen_S_w(2, Color::Black); }
Partition pb1() { return gen_S0(1, Color::Black); }

// Oracle for the associated bracket: rotate the sector onto the lower row and
// project with p' (p')*. Stays clear of the direct profile construction.
Partition associated_bracket_oracle(const Partition& p, const Sector& s) {
  Partition q = p;
  while (q.upper_size() > 0) q = rotate(q, RotationDirection::DownRight);
  int start = cyclic_position(p, s.points.front());
  q = rotate_cyclic(q, CyclicDirection::Right, start);
  const int keep = static_cast<int>(s.points.size());
  for (int i = q.lower_size(); i > keep; --i) q = rotate(q, RotationDirection::UpRight);
  return compose(q, involution(q)).result;
}
}  // namespace

TEST_CASE("projectivity") {
  CHECK(is_projective(pp("w/w;L1U1")));
  CHECK_FALSE(is_projective(pp("ww/ww;L1U2,L2U1")));  // the square is the identity
  CHECK(is_projective(gen2()));
  CHECK_FALSE(is_projective(pp("/bw;L1L2")));
}

TEST_CASE("bracket predicate") {
  CHECK(is_bracket(gen1()));
  CHECK(gen1() == pp("bww/bww;L1L3,U1U3,L2U2"));
  CHECK_FALSE(is_bracket(pp("w/w;L1U1")));
  CHECK_FALSE(is_bracket(pp("wbw/wbw;L1U3,L2U2,L3U1")));
  CHECK(is_bracket(pp("wb/wb;L1L2,U1U2")));
}

TEST_CASE("argument extraction and reconstruction") {
  CHECK(arg(gen2()) == pp("ww/ww;L1U1,L2U2"));
  CHECK(arg(pb1()) == pp("bw/bw;L1U1,L2U2"));
  CHECK(br(Color::Black, id_partition("ww")) == gen2());
  CHECK(br(Color::Black, id_partition("w")) == gen1());
  CHECK(br(Color::White, Partition::empty()) == pp("wb/wb;L1L2,U1U2"));
  CHECK_THROWS_AS(arg(pp("w/w;L1U1")), std::domain_error);
  CHECK_THROWS_AS(br(Color::White, pp("ww/ww;L1U2,L2U1")), std::domain_error);
}

TEST_CASE("constructor and destructor invert each other", "[property]") {
  int seen = 0;
  for (const auto& p : enumerate_p2nb(10, EnumerateShape::AllRowSplits)) {
    if (!is_bracket(p)) continue;
    ++seen;
    REQUIRE(br(start_color(p), arg(p)) == p);
  }
  CHECK(seen > 50);
  // and the reverse direction on projective arguments
  for (const auto& a : enumerate_p2nb(6, EnumerateShape::AllRowSplits)) {
    if (!is_projective(a)) continue;
    for (Color c : {Color::White, Color::Black}) {
      auto b = br(c, a);
      REQUIRE(is_bracket(b));
      REQUIRE(arg(b) == a);
      REQUIRE(start_color(b) == c);
    }
  }
}

TEST_CASE("id_partition") {
  CHECK(id_partition("w") == pp("w/w;L1U1"));
  CHECK(id_partition("") == Partition::empty());
  CHECK(id_partition("bw") == pp("bw/bw;L1U1,L2U2"));
}

TEST_CASE("bracket product") {
  CHECK(bracket_product(gen1(), gen1()) == gen2());
  CHECK(bracket_product(gen1(), gen2()) == br(Color::Black, id_partition("www")));
  CHECK(bracket_product(gen1(), br(Color::Black, Partition::empty())) == gen1());
  CHECK_THROWS_AS(bracket_product(gen1(), br(Color::White, Partition::empty())),
                  std::domain_error);
}

TEST_CASE("bracket product is associative with additive weight", "[property]") {
  std::vector<Partition> brackets;
  for (const auto& p : enumerate_p2nb(8, EnumerateShape::AllRowSplits))
    if (is_bracket(p)) brackets.push_back(p);
  for (const auto& a : brackets)
    for (const auto& b : brackets) {
      if (start_color(a) != start_color(b)) continue;
      auto ab = bracket_product(a, b);
      CHECK(bracket_weight(ab) == bracket_weight(a) + bracket_weight(b));
      for (const auto& c : brackets) {
        if (start_color(b) != start_color(c)) continue;
        REQUIRE(bracket_product(ab, c) == bracket_product(a, bracket_product(b, c)));
      }
    }
}

TEST_CASE("weak and strong inversion") {
  CHECK(weak_inversion(gen1()) == pp("wbwwb/wbwwb;L1L5,L2L4,L3U3,U1U5,U2U4"));
  CHECK(strong_inversion(gen1()) == pp("wbwwb/wbwwb;L1L5,L2U2,L3U3,L4U4,U1U5"));
  CHECK(start_color(weak_inversion(gen1())) == Color::White);
  CHECK(start_color(strong_inversion(gen1())) == Color::White);
  CHECK_THROWS_AS(weak_inversion(pp("w/w;L1U1")), std::domain_error);
}

TEST_CASE("verticolor reflection maps brackets to brackets", "[property]") {
  for (const auto& p : enumerate_p2nb(8, EnumerateShape::AllRowSplits)) {
    if (!is_bracket(p)) continue;
    auto r = verticolor_reflect(p);
    REQUIRE(is_bracket(r));
    CHECK(start_color(r) == start_color(p));
    CHECK(arg(r) == verticolor_reflect(arg(p)));
  }
}

TEST_CASE("dualizability and the dual bracket") {
  CHECK(is_dualizable(pb1()));
  CHECK(dual(pb1()) == pp("wwbb/wwbb;L1L4,U1U4,L2U2,L3U3"));
  CHECK_FALSE(is_dualizable(gen2()));
  CHECK(dual(dual(pb1())) == pb1());
  CHECK_THROWS_AS(dual(gen2()), std::domain_error);
}

TEST_CASE("dual is an involution and direction independent", "[property]") {
  for (const auto& p : enumerate_p2nb(8, EnumerateShape::AllRowSplits)) {
    if (!is_bracket(p) || !is_dualizable(p)) continue;
    int half = p.lower_size() / 2;
    auto d = dual(p);
    REQUIRE(is_dualizable(d));
    CHECK(dual(d) == p);
    CHECK(rotate_cyclic(p, CyclicDirection::Left, half) ==
          rotate_cyclic(p, CyclicDirection::Right, half));
  }
}

TEST_CASE("residual classification") {
  CHECK(residual_kind(gen2()) == ResidualKind::FirstKind);
  CHECK(residual_kind(pb1()) == ResidualKind::SecondKind);
  CHECK(residual_kind(weak_inversion(gen1())) == ResidualKind::NotResidual);
  CHECK(residual_kind(br(Color::White, Partition::empty())) == ResidualKind::NotResidual);
}

TEST_CASE("restriction equivalence") {
  auto g = gen1();
  Sector lower{interval(g, lower_point(1), lower_point(3), IntervalKind::Closed)};
  CHECK(restriction_equivalent(g, lower, g, lower));
  auto b = associated_bracket(g, lower);
  Sector blower{interval(b, lower_point(1), lower_point(b.lower_size()), IntervalKind::Closed)};
  CHECK(restriction_equivalent(g, lower, b, blower));
  auto g2 = gen2();
  Sector lower2{interval(g2, lower_point(1), lower_point(4), IntervalKind::Closed)};
  CHECK_FALSE(restriction_equivalent(g, lower, g2, lower2));
}

TEST_CASE("associated bracket of named sectors") {
  auto cross = pp("ww/ww;L1U2,L2U1");
  Sector s{interval(cross, lower_point(1), upper_point(2), IntervalKind::Closed)};
  CHECK(associated_bracket(cross, s) == pp("wwb/wwb;L1L3,L2U2,U1U3"));
  // the seven-point projection figure
  auto fig = pp("bbwbw/wbbbwwb;L1L7,L2U2,L3L5,L4L6,U1U5,U3U4");
  Sector sf{interval(fig, upper_point(2), lower_point(2), IntervalKind::Closed)};
  CHECK(associated_bracket(fig, sf) == pp("wwwb/wwwb;L1L4,L2U2,L3U3,U1U4"));
  // a bracket is its own associated bracket on the lower row
  for (const auto& b : {gen1(), gen2(), pb1()}) {
    Sector low{interval(b, lower_point(1), lower_point(b.lower_size()), IntervalKind::Closed)};
    CHECK(associated_bracket(b, low) == b);
  }
}

TEST_CASE("associated bracket equals the projection oracle", "[property]") {
  for (const auto& p : enumerate_p2nb(6, EnumerateShape::AllRowSplits)) {
    for (const auto& s : sectors(p)) {
      auto direct = associated_bracket(p, s);
      auto oracle = associated_bracket_oracle(p, s);
      REQUIRE(direct == oracle);
      REQUIRE(is_bracket(direct));
    }
  }
}

TEST_CASE("generator families") {
  CHECK(gen_S_w(2, Color::Black) == pp("bwww/bwww;L1L4,U1U4,L2U2,L3U3"));
  CHECK(gen_S0(1, Color::Black) == pp("bbww/bbww;L1L4,U1U4,L2U2,L3U3"));
  CHECK(gen_S0(2, Color::Black) ==
        pp("bbbwww/bbbwww;L1L6,U1U6,L2U2,L3U3,L4U4,L5U5"));
  CHECK(gen_S_w(1, Color::White) == pp("wbb/wbb;L1L3,U1U3,L2U2"));
  CHECK_THROWS_AS(gen_S_w(0, Color::Black), std::domain_error);
  CHECK_THROWS_AS(gen_S0(0, Color::Black), std::domain_error);
  for (int w = 1; w <= 4; ++w)
    for (Color c : {Color::White, Color::Black}) {
      CHECK(bracket_weight(gen_S_w(w, c)) == (c == Color::Black ? -w : w));
      CHECK(bracket_weight(gen_S0(w, c)) == 0);
      CHECK(in_S_w(gen_S_w(w, c), w));
    }
}

TEST_CASE("q family") {
  CHECK(q_family(Color::Black, 1, 2) ==
        tensor(tensor(id_partition("b"), gen_S0(1, Color::Black)), id_partition("w")));
  CHECK(composable(gen_S0(2, Color::Black), q_family(Color::Black, 1, 2)));
  CHECK_THROWS_AS(q_family(Color::Black, 2, 2), std::domain_error);
}

TEST_CASE("dual identity for the S_0 generators", "[property]") {
  for (Color c : {Color::White, Color::Black}) {
    for (int v = 1; v <= 4; ++v) {
      auto lhs = dual(gen_S0(v, inverse(c)));
      auto rhs = gen_S0(v, c);
      for (int vp = v - 1; vp >= 1; --vp) rhs = compose(rhs, q_family(c, vp, v)).result;
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("bracket info view") {
  auto info = bracket_info(gen2());
  CHECK(info.start == Color::Black);
  CHECK(info.weight == -2);
  CHECK(info.argument == id_partition("ww"));
  CHECK(info.lower_sector.points.size() == 4);
  CHECK_THROWS_AS(bracket_info(pp("w/w;L1U1")), std::domain_error);
}
