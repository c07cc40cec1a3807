// Acceptance suite: one pass/fail line per criterion, all checks exact.
// Run with a list of criterion numbers to restrict, e.g. "acceptance 1 4 6".

#include <chrono>
#include <iomanip>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "pairpart/verify.hpp"

using namespace pairpart;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void line(int criterion, const std::string& name, bool passed, double seconds,
          const std::string& detail = "") {
  std::cout << "criterion=" << criterion << " name=" << name
            << " status=" << (passed ? "pass" : "FAIL") << " time=" << std::fixed
            << std::setprecision(1) << seconds << "s";
  if (!detail.empty()) std::cout << " detail=" << detail;
  std::cout << std::endl;
  if (!passed) ++g_failures;
}

void run(int criterion, const std::string& name, const std::function<bool(std::string&)>& body) {
  auto t0 = Clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  line(criterion, name, ok, std::chrono::duration<double>(Clock::now() - t0).count(), detail);
}

std::vector<Partition> sw_filter(int max_points, int w) {
  std::vector<Partition> out;
  for (const auto& p : enumerate_p2nb(max_points, EnumerateShape::AllRowSplits))
    if (in_S_w(p, w)) out.push_back(p);
  return out;
}

std::vector<detail::Packed> packed_filter(int max_points, int w) {
  std::vector<detail::Packed> out;
  for (const auto& k : detail::enumerate_packed(max_points, EnumerateShape::AllRowSplits))
    if (detail::in_S_w_small(detail::unpack(k), w)) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

// Brute-force matchings x colorings, filtered for neutral blocks; the
// enumeration oracle of criterion 1.
std::size_t naive_oneline_count(int points) {
  std::size_t count = 0;
  std::vector<int> pairing(static_cast<std::size_t>(points), -1);
  std::function<void(int)> rec = [&](int) {
    int a = 0;
    while (a < points && pairing[static_cast<std::size_t>(a)] >= 0) ++a;
    if (a == points) {
      for (unsigned colors = 0; colors < (1u << points); ++colors) {
        bool neutral = true;
        for (int i = 0; i < points && neutral; ++i) {
          int j = pairing[static_cast<std::size_t>(i)];
          if (j > i) neutral = ((colors >> i) & 1u) != ((colors >> j) & 1u);
        }
        if (neutral) ++count;
      }
      return;
    }
    pairing[static_cast<std::size_t>(a)] = a;  // mark
    for (int b = a + 1; b < points; ++b) {
      if (pairing[static_cast<std::size_t>(b)] >= 0) continue;
      pairing[static_cast<std::size_t>(a)] = b;
      pairing[static_cast<std::size_t>(b)] = a;
      rec(0);
      pairing[static_cast<std::size_t>(b)] = -1;
    }
    pairing[static_cast<std::size_t>(a)] = -1;
  };
  rec(0);
  return count;
}

Partition cross_ww() { return parse("ww/ww;L1U2,L2U1"); }

ClosureSet run_closure(const std::vector<Partition>& gens, int bound) {
  ClosureConfig cfg;
  cfg.max_points = bound;
  return closure(gens, cfg);
}

bool closure_slices_equal(const std::vector<Partition>& ga, const std::vector<Partition>& gb,
                          int bound, int compare, std::string& detail) {
  auto a = run_closure(ga, bound).packed_members_with_at_most(compare);
  auto b = run_closure(gb, bound).packed_members_with_at_most(compare);
  if (a != b) {
    detail = "slices differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  auto wanted = [&](int c) { return only.empty() || only.count(c) > 0; };

  // 1. Enumeration oracle: (2k-1)!! 2^k one-line members at exactly 2k points.
  if (wanted(1)) run(1, "enumeration_oracle", [](std::string& detail) {
    const std::size_t expect[] = {2, 12, 120, 1680};
    for (int k = 1; k <= 4; ++k) {
      std::size_t exact = 0;
      for (const auto& p : enumerate_p2nb(2 * k, EnumerateShape::OneLine))
        if (p.total_points() == 2 * k) ++exact;
      std::size_t naive = naive_oneline_count(2 * k);
      if (exact != expect[k - 1] || naive != expect[k - 1]) {
        detail = "k=" + std::to_string(k) + " enumerated=" + std::to_string(exact) +
                 " naive=" + std::to_string(naive);
        return false;
      }
    }
    return true;
  });

  // 2. S_1 identification: membership equals pair neutrality, and the
  //    crossing generates the whole small universe.
  if (wanted(2)) run(2, "s1_identification", [](std::string& detail) {
    for (const auto& p : enumerate_p2nb(8, EnumerateShape::AllRowSplits))
      if (in_S_w(p, 1) != is_pair_neutral(p)) {
        detail = "membership mismatch at " + render(p);
        return false;
      }
    auto slice = run_closure({cross_ww()}, 10).packed_members_with_at_most(6);
    auto want = packed_filter(6, 1);
    if (slice != want) {
      detail = "closure slice " + std::to_string(slice.size()) + " vs universe " +
               std::to_string(want.size());
      return false;
    }
    return true;
  });

  // 3. Generator theorem at bound: closure(gen_S_w(w)) matches the S_w slice
  //    and never leaves S_w.
  if (wanted(3)) run(3, "generator_theorem", [](std::string& detail) {
    for (int w = 1; w <= 3; ++w) {
      auto c = run_closure({gen_S_w(w, Color::Black)}, 12);
      bool sound = true;
      c.for_each_packed([&](const detail::Packed& k) {
        if (!detail::in_S_w_small(detail::unpack(k), w)) sound = false;
      });
      if (!sound) {
        detail = "closure escapes S_" + std::to_string(w);
        return false;
      }
      if (c.packed_members_with_at_most(6) != packed_filter(6, w)) {
        detail = "slice mismatch for w=" + std::to_string(w);
        return false;
      }
    }
    return true;
  });

  // 4. Anti-symmetry and decomposition of sector sums, exhaustive at 8 points.
  if (wanted(4)) run(4, "sector_sum_lemmas", [](std::string& detail) {
    std::vector<VerifyCase> cases;
    verify_anti_symmetry(8, cases);
    verify_decomposition(8, cases);
    for (const auto& c : cases)
      if (!c.passed) {
        detail = c.suite + "/" + c.name + " " + c.counterexample;
        return false;
      }
    return true;
  });

  // 5. S_w slices of the enumeration are categories: no operation escapes.
  if (wanted(5)) run(5, "sw_category_closure", [](std::string& detail) {
    OpSet ops{OpSet::Tensor | OpSet::Compose | OpSet::Involute | OpSet::Rotate |
              OpSet::VerticolorReflect};
    for (int w = 0; w <= 3; ++w) {
      auto violations = verify_category_closed(make_set(sw_filter(6, w), 6, ops));
      if (!violations.empty()) {
        detail = "w=" + std::to_string(w) + " escape " + render(violations.front().result);
        return false;
      }
    }
    return true;
  });

  // 6. Bracket calculus identities, all exact.
  if (wanted(6)) run(6, "bracket_identities", [](std::string& detail) {
    std::vector<VerifyCase> cases;
    verify_bracket_identities(cases);
    for (const auto& c : cases)
      if (!c.passed) {
        detail = c.name;
        return false;
      }
    return true;
  });

  // 7. Associated brackets: direct construction equals the projection oracle
  //    for every sector of every partition with at most 8 points.
  if (wanted(7)) run(7, "associated_bracket_oracle", [](std::string& detail) {
    std::vector<VerifyCase> cases;
    verify_associated_bracket_oracle(8, cases);
    for (const auto& c : cases)
      if (!c.passed) {
        detail = c.counterexample;
        return false;
      }
    return true;
  });

  // 8. De-erasing and inversion closure equalities at bound 10 / compare 6.
  if (wanted(8)) run(8, "generation_closures", [](std::string& detail) {
    std::vector<VerifyCase> cases;
    verify_generation_lemmas(10, 6, 0, cases);
    for (const auto& c : cases)
      if (!c.passed) {
        detail = c.suite + "/" + c.name;
        return false;
      }
    return true;
  });

  // 9. Classification at bound: random generator sets either stay inside S_0
  //    or match S_w for the detected w.
  if (wanted(9)) run(9, "classification_random", [](std::string& detail) {
    auto universe = enumerate_p2nb(6, EnumerateShape::AllRowSplits);
    std::mt19937_64 rng(20180521);
    std::uniform_int_distribution<std::size_t> pick(0, universe.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Partition> gens{universe[pick(rng)]};
      if (rng() & 1u) gens.push_back(universe[pick(rng)]);
      auto rep = classify(run_closure(gens, 10), 6);
      if (rep.subset_of_S0 && rep.detected_w != 0) {
        detail = "trial " + std::to_string(trial) + ": S_0 subset with nonzero w";
        return false;
      }
      if (!rep.subset_of_S0 && !rep.matches_S_w_at_bound) {
        std::ostringstream os;
        os << "trial " << trial << ": w=" << rep.detected_w << " unmatched; gens";
        for (const auto& g : gens) os << " " << render(g);
        detail = os.str();
        return false;
      }
    }
    return true;
  });

  // 10. Crossing-generator correspondence: the k-string crossing and the S_k
  //     bracket generate the same bounded closure, and the two composition
  //     rewritings evaluate exactly.
  if (wanted(10)) run(10, "unk_correspondence", [](std::string& detail) {
    for (int k = 1; k <= 3; ++k) {
      auto [u, g] = unk_generators(k);
      if (!closure_slices_equal({u}, {g}, 10, 6, detail)) {
        detail = "k=" + std::to_string(k) + " " + detail;
        return false;
      }
    }
    for (int k = 2; k <= 3; ++k) {
      auto [u, g] = unk_generators(k);
      (void)g;
      // crossing sandwiched between cup pairs projects onto the bracket form
      auto cupcap = br(Color::White, Partition::empty());
      auto p1 = tensor(u, id_partition("b"));
      auto p2 = tensor(id_partition(std::vector<Color>(static_cast<std::size_t>(k),
                                                       Color::White)),
                       cupcap);
      auto lhs = compose(compose(p1, p2).result, p1).result;
      auto bracket_form = br(Color::White, id_partition(std::vector<Color>(
                                               static_cast<std::size_t>(k), Color::White)));
      if (lhs != bracket_form) {
        detail = "bracket rewriting failed at k=" + std::to_string(k);
        return false;
      }
      // and the bracket form rebuilds the crossing by de-erasing
      auto r1 = tensor(id_partition(std::vector<Color>(static_cast<std::size_t>(k),
                                                       Color::White)),
                       parse("wbw/w;L1U3,U1U2"));
      auto r2 = tensor(bracket_form, id_partition("w"));
      auto r3 = tensor(id_partition(std::vector<Color>(static_cast<std::size_t>(k + 1),
                                                       Color::White)),
                       parse("/bw;L1L2"));
      auto rhs = compose(compose(r1, r2).result, r3).result;
      if (rhs != u) {
        detail = "crossing rewriting failed at k=" + std::to_string(k);
        return false;
      }
    }
    return true;
  });

  if (g_failures) {
    std::cout << "acceptance: " << g_failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "acceptance: all criteria passed" << std::endl;
  return 0;
}
