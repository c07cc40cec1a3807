#include <catch2/catch_amalgamated.hpp>

#include "pairpart/engine.hpp"
#include "pairpart/structure.hpp"

using namespace pairpart;

namespace {
Partition pp(const char* s) { return parse(s); }
const char* kFigure = "bwbwb/bwbwbbw;L1L2,L3U3,L4L6,L5L7,U1U4,U2U5";
}  // namespace

TEST_CASE("crossing blocks interleave in cyclic order") {
  auto cross = pp("ww/ww;L1U2,L2U1");
  CHECK(crosses(cross, 0, 1));
  auto nested = pp("/bwbw;L1L2,L3L4");
  CHECK_FALSE(crosses(nested, 0, 1));
  auto alt = pp("/bbww;L1L3,L2L4");
  CHECK(crosses(alt, 0, 1));
  CHECK_FALSE(crosses(alt, 0, 0));
  CHECK_THROWS_AS(crosses(alt, 0, 5), std::domain_error);
  // PointSet overload validates blocks
  CHECK(crosses(alt, PointSet{lower_point(1), lower_point(3)},
                PointSet{lower_point(2), lower_point(4)}));
  CHECK_THROWS_AS(crosses(alt, PointSet{lower_point(1)}, PointSet{lower_point(2)}),
                  std::domain_error);
}

TEST_CASE("connected components of the figure partition") {
  auto fig = pp(kFigure);
  auto comps = connected_components(fig);
  CHECK(comps.size() == 3);
  CHECK(connected_components(pp("ww/ww;L1U2,L2U1")).size() == 1);
  CHECK(connected_components(pp("/bwbw;L1L2,L3L4")).size() == 2);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(pp("ww/ww;L1U2,L2U1")));
  CHECK_FALSE(is_connected(pp("/bwbw;L1L2,L3L4")));
  CHECK(is_connected(pp("bbww/bbww;L1L4,U1U4,L2U2,L3U3")));
  CHECK_FALSE(is_connected(Partition::empty()));
}

TEST_CASE("factor partitions of the figure") {
  auto fig = pp(kFigure);
  auto comps = connected_components(fig);
  std::vector<std::string> factors;
  for (const auto& c : comps) factors.push_back(render(factor_partition(fig, c)));
  std::sort(factors.begin(), factors.end());
  std::vector<std::string> expect = {"/bw;L1L2", "/wbbw;L1L3,L2L4", "bwbwb/b;L1U3,U1U4,U2U5"};
  std::sort(expect.begin(), expect.end());
  CHECK(factors == expect);

  auto conn = pp("ww/ww;L1U2,L2U1");
  CHECK(factor_partition(conn, connected_components(conn)[0]) == conn);
  CHECK_THROWS_AS(factor_partition(fig, std::vector<int>{0, 1}), std::domain_error);
}

TEST_CASE("sectors come in boundary pairs") {
  auto cup = pp("/bw;L1L2");
  auto ss = sectors(cup);
  REQUIRE(ss.size() == 2);
  CHECK(ss[0].points.size() == 2);
  CHECK(ss[1].points.size() == 2);
  auto gen2 = pp("bwww/bwww;L1L4,U1U4,L2U2,L3U3");
  CHECK(sectors(gen2).size() == 8);
  auto cross = pp("ww/ww;L1U2,L2U1");
  bool found = false;
  for (const auto& s : sectors(cross))
    if (sorted_points(s.points) == PointSet{lower_point(1), lower_point(2), upper_point(2)})
      found = true;
  CHECK(found);
  CHECK_THROWS_AS(sectors(pp("/bwb;L1L2L3")), std::domain_error);
  CHECK(sectors(Partition::empty()).empty());
}

TEST_CASE("sector interiors partition the points", "[property]") {
  for (const auto& p : enumerate_p2nb(8, EnumerateShape::AllRowSplits)) {
    for (const auto& b : p.blocks()) {
      auto s1 = interval(p, b[0], b[1], IntervalKind::Closed);
      auto s2 = interval(p, b[1], b[0], IntervalKind::Closed);
      Sector a{s1}, c{s2};
      PointSet uni = a.interior();
      for (PointId q : c.interior()) uni.push_back(q);
      for (PointId q : b) uni.push_back(q);
      REQUIRE(sorted_points(uni) == sorted_points(p.all_points()));
    }
  }
}

TEST_CASE("turns are neutral adjacencies") {
  auto cup = pp("/bw;L1L2");
  CHECK(turns(cup).size() == 2);
  CHECK(turns(pp("/bbww;L1L3,L2L4")).size() == 2);
  CHECK(turns(pp("/bb;L1L2")).empty());
  CHECK(turns(pp("bb/;U1U2")).empty());
  PointSet within{lower_point(2), lower_point(3)};
  auto ts = turns(pp("/bbww;L1L3,L2L4"), &within);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].a == lower_point(2));
  CHECK(ts[0].b == lower_point(3));
}

TEST_CASE("turn blocks") {
  auto cup = pp("/bw;L1L2");
  auto ts = turns(cup);
  REQUIRE_FALSE(ts.empty());
  CHECK(turn_blocks(cup, ts[0]).empty());

  auto q = pp("/bbww;L1L3,L2L4");
  Turn t{lower_point(2), lower_point(3)};
  auto tbs = turn_blocks(q, t);
  REQUIRE(tbs.size() == 2);
  std::vector<PointSet> expect = {{lower_point(1), lower_point(3)},
                                  {lower_point(2), lower_point(4)}};
  CHECK((tbs[0] == expect[0] || tbs[0] == expect[1]));
  CHECK(tbs[0] != tbs[1]);
  CHECK_THROWS_AS(turn_blocks(q, Turn{lower_point(1), lower_point(2)}), std::domain_error);
}

TEST_CASE("every turn has at most two turn blocks", "[property]") {
  for (const auto& p : enumerate_p2nb(6, EnumerateShape::AllRowSplits))
    for (const auto& t : turns(p)) CHECK(turn_blocks(p, t).size() <= 2);
}

TEST_CASE("pair neutrality") {
  CHECK(is_pair_neutral(pp("ww/ww;L1U2,L2U1")));
  CHECK_FALSE(is_pair_neutral(pp("/bb;L1L2")));
  CHECK_FALSE(is_pair_neutral(pp("/bwb;L1L2L3")));
  CHECK(is_pair_neutral(Partition::empty()));
}

TEST_CASE("components cover all blocks exactly once", "[property]") {
  for (const auto& p : enumerate_p2nb(6, EnumerateShape::AllRowSplits)) {
    std::size_t pts = 0;
    std::vector<int> seen(static_cast<std::size_t>(p.block_count()), 0);
    for (const auto& comp : connected_components(p))
      for (int b : comp) {
        pts += p.block_points(b).size();
        seen[static_cast<std::size_t>(b)] += 1;
      }
    CHECK(pts == static_cast<std::size_t>(p.total_points()));
    for (int s : seen) CHECK(s == 1);
    // factor partitions preserve the component's block structure
    auto comps = connected_components(p);
    if (!comps.empty()) {
      auto f = factor_partition(p, comps.front());
      CHECK(f.block_count() == static_cast<int>(comps.front().size()));
    }
  }
}

TEST_CASE("noncrossing iff all components are singletons", "[property]") {
  CHECK(is_noncrossing(pp("/bwbw;L1L2,L3L4")));
  CHECK_FALSE(is_noncrossing(pp("ww/ww;L1U2,L2U1")));
  CHECK_FALSE(is_noncrossing(pp("bwww/bwww;L1L4,U1U4,L2U2,L3U3")));
  for (const auto& p : enumerate_p2nb(6, EnumerateShape::AllRowSplits)) {
    bool singletons = true;
    for (const auto& c : connected_components(p)) singletons = singletons && c.size() == 1;
    CHECK(is_noncrossing(p) == singletons);
  }
}
