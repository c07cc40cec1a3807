// Command-line front end for the two-colored pair partition library.
//
// Results go to stdout; progress and diagnostics go to stderr. Exit codes:
// 0 success, 1 domain error, 2 usage error, 3 verification failure.

#include <CLI11.hpp>
#include <iostream>

#include "pairpart/engine.hpp"
#include "pairpart/verify.hpp"

using namespace pairpart;

namespace {

PointSet parse_points(const std::string& csv) {
  PointSet out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string tok = csv.substr(pos, comma == std::string::npos ? std::string::npos
                                                                 : comma - pos);
    if (tok.size() < 2 || (tok[0] != 'L' && tok[0] != 'U'))
      throw std::invalid_argument("bad point token: '" + tok + "'");
    int idx = std::stoi(tok.substr(1));
    out.push_back({tok[0] == 'L' ? Row::Lower : Row::Upper, idx});
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    out.push_back(csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void print_members_sorted(const std::vector<Partition>& members) {
  std::vector<std::string> lines;
  lines.reserve(members.size());
  for (const auto& m : members) lines.push_back(render(m));
  std::sort(lines.begin(), lines.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& l : lines) std::cout << l << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-colored pair partitions: category operations, S_w membership, "
               "bracket calculus and bounded closures"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads for closures (0 = all cores)");

  std::string text, text2, dir_name = "down-left", points_csv, ops_csv, shape_name = "one-line";
  int w = 1, k = 1, bound = 0, compare = 0, max_points = 0;
  bool seed_base = true, count_only = false, print_members = false;

  auto* show = app.add_subcommand("show", "parse and print the canonical form");
  show->add_option("partition", text)->required();

  auto* op = app.add_subcommand("op", "apply a category operation");
  op->require_subcommand(1);
  auto* op_tensor = op->add_subcommand("tensor");
  op_tensor->add_option("p", text)->required();
  op_tensor->add_option("q", text2)->required();
  auto* op_compose = op->add_subcommand("compose");
  op_compose->add_option("p", text)->required();
  op_compose->add_option("q", text2)->required();
  auto* op_involute = op->add_subcommand("involute");
  op_involute->add_option("p", text)->required();
  auto* op_reflect = op->add_subcommand("reflect");
  op_reflect->add_option("p", text)->required();
  auto* op_rotate = op->add_subcommand("rotate");
  op_rotate->add_option("p", text)->required();
  op_rotate->add_option("--dir", dir_name, "down-left|down-right|up-left|up-right");
  auto* op_cyclic = op->add_subcommand("rotate-cyclic");
  op_cyclic->add_option("p", text)->required();
  op_cyclic->add_option("--dir", dir_name, "left|right");
  op_cyclic->add_option("--k", k, "number of steps");
  auto* op_erase = op->add_subcommand("erase");
  op_erase->add_option("p", text)->required();
  op_erase->add_option("--points", points_csv, "comma separated, e.g. L1,U2")->required();

  auto* member = app.add_subcommand("member", "S_w membership");
  member->add_option("--w", w, "index of S_w (0 means exactly neutral sectors)")->required();
  member->add_option("partition", text)->required();

  auto* gcd_cmd = app.add_subcommand("sector-gcd", "gcd of the absolute sector sums");
  gcd_cmd->add_option("partition", text)->required();

  auto* bracket = app.add_subcommand("bracket", "bracket calculus");
  bracket->require_subcommand(1);
  auto* b_info = bracket->add_subcommand("info");
  b_info->add_option("p", text)->required();
  auto* b_arg = bracket->add_subcommand("arg");
  b_arg->add_option("p", text)->required();
  auto* b_prod = bracket->add_subcommand("product");
  b_prod->add_option("p", text)->required();
  b_prod->add_option("q", text2)->required();
  auto* b_win = bracket->add_subcommand("win");
  b_win->add_option("p", text)->required();
  auto* b_sin = bracket->add_subcommand("sin");
  b_sin->add_option("p", text)->required();
  auto* b_dual = bracket->add_subcommand("dual");
  b_dual->add_option("p", text)->required();
  auto* b_res = bracket->add_subcommand("residual");
  b_res->add_option("p", text)->required();

  auto* enumerate = app.add_subcommand("enumerate", "pair partitions with neutral blocks");
  enumerate->add_option("--max-points", max_points)->required();
  enumerate->add_option("--shape", shape_name, "one-line|all-row-splits");
  enumerate->add_flag("--count", count_only, "print the count only");

  std::vector<std::string> gen_texts;
  auto* closure_cmd = app.add_subcommand("closure", "bounded category closure");
  closure_cmd->add_option("--gen", gen_texts, "generator partition (repeatable)");
  closure_cmd->add_option("--bound", bound)->required();
  closure_cmd->add_option("--ops", ops_csv, "csv of op names");
  closure_cmd->add_option("--seed-base", seed_base, "include the four base partitions");
  closure_cmd->add_flag("--print", print_members, "print all members");

  auto* classify_cmd = app.add_subcommand("classify", "detect w from a bounded closure");
  classify_cmd->add_option("--gen", gen_texts, "generator partition (repeatable)");
  classify_cmd->add_option("--bound", bound)->required();
  classify_cmd->add_option("--compare", compare)->required();
  classify_cmd->add_option("--ops", ops_csv, "csv of op names");
  classify_cmd->add_option("--seed-base", seed_base, "include the four base partitions");

  auto* verify = app.add_subcommand("verify", "run the lemma verification suites");
  std::string suite = "all";
  verify->add_option("suite", suite,
                     "all, anti_symmetry, decomposition, s1_identity, sw_category_closure, "
                     "bracket_identities, associated_bracket, weight_map, generation");
  verify->add_option("--max-points", max_points, "enumeration cap")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*show) {
      std::cout << render(parse(text)) << "\n";
    } else if (*op) {
      if (*op_tensor) std::cout << render(tensor(parse(text), parse(text2))) << "\n";
      if (*op_compose) {
        auto r = compose(parse(text), parse(text2));
        std::cout << render(r.result) << " loops=" << r.loops << "\n";
      }
      if (*op_involute) std::cout << render(involution(parse(text))) << "\n";
      if (*op_reflect) std::cout << render(verticolor_reflect(parse(text))) << "\n";
      if (*op_rotate) {
        RotationDirection d;
        if (dir_name == "down-left") d = RotationDirection::DownLeft;
        else if (dir_name == "down-right") d = RotationDirection::DownRight;
        else if (dir_name == "up-left") d = RotationDirection::UpLeft;
        else if (dir_name == "up-right") d = RotationDirection::UpRight;
        else throw CLI::ValidationError("--dir", "unknown rotation direction");
        std::cout << render(rotate(parse(text), d)) << "\n";
      }
      if (*op_cyclic) {
        if (dir_name != "left" && dir_name != "right")
          throw CLI::ValidationError("--dir", "expected left or right");
        auto d = dir_name == "left" ? CyclicDirection::Left : CyclicDirection::Right;
        std::cout << render(rotate_cyclic(parse(text), d, k)) << "\n";
      }
      if (*op_erase) std::cout << render(erase(parse(text), parse_points(points_csv))) << "\n";
    } else if (*member) {
      std::cout << (in_S_w(parse(text), w) ? "true" : "false") << "\n";
    } else if (*gcd_cmd) {
      std::cout << sector_gcd(parse(text)) << "\n";
    } else if (*bracket) {
      auto p = parse(text);
      if (*b_info) {
        auto info = bracket_info(p);
        auto kind = residual_kind(p);
        const char* res = kind == ResidualKind::FirstKind
                              ? "first"
                              : kind == ResidualKind::SecondKind ? "second" : "none";
        std::cout << "start=" << to_char(info.start) << " weight=" << info.weight
                  << " arg=" << render(info.argument)
                  << " dualizable=" << (is_dualizable(p) ? "true" : "false")
                  << " residual=" << res << "\n";
      }
      if (*b_arg) std::cout << render(arg(p)) << "\n";
      if (*b_prod) std::cout << render(bracket_product(p, parse(text2))) << "\n";
      if (*b_win) std::cout << render(weak_inversion(p)) << "\n";
      if (*b_sin) std::cout << render(strong_inversion(p)) << "\n";
      if (*b_dual) std::cout << render(dual(p)) << "\n";
      if (*b_res) {
        auto kind = residual_kind(p);
        std::cout << (kind == ResidualKind::FirstKind
                          ? "first"
                          : kind == ResidualKind::SecondKind ? "second" : "none")
                  << "\n";
      }
    } else if (*enumerate) {
      EnumerateShape shape;
      if (shape_name == "one-line") shape = EnumerateShape::OneLine;
      else if (shape_name == "all-row-splits") shape = EnumerateShape::AllRowSplits;
      else throw CLI::ValidationError("--shape", "expected one-line or all-row-splits");
      auto all = enumerate_p2nb(max_points, shape);
      if (count_only) std::cout << "count=" << all.size() << "\n";
      else print_members_sorted(all);
    } else if (*closure_cmd || *classify_cmd) {
      ClosureConfig cfg;
      cfg.max_points = bound;
      cfg.jobs = jobs;
      cfg.seed_base = seed_base;
      cfg.trace = &std::cerr;
      if (!ops_csv.empty()) cfg.ops = OpSet::from_names(split_csv(ops_csv));
      std::vector<Partition> gens;
      for (const auto& g : gen_texts) gens.push_back(parse(g));
      auto c = closure(gens, cfg);
      if (*closure_cmd) {
        std::cout << "size=" << c.size() << " bound=" << c.bound() << "\n";
        if (print_members) print_members_sorted(c.members());
      } else {
        auto rep = classify(c, compare);
        std::cout << "w=" << rep.detected_w << (rep.subset_of_S0 ? " s0=true" : "")
                  << " matches=" << (rep.matches_S_w_at_bound ? "true" : "false") << "\n";
      }
    } else if (*verify) {
      if (suite != "all") {
        bool known = false;
        for (const auto& s : verify_suite_names()) known = known || s == suite;
        if (!known) throw CLI::ValidationError("suite", "unknown suite name: " + suite);
      }
      auto cases = verify_lemmas(max_points, jobs, suite);
      bool all_passed = true;
      for (const auto& c : cases) {
        std::cout << "suite=" << c.suite << " case=" << c.name
                  << " status=" << (c.passed ? "pass" : "fail");
        if (!c.passed && !c.counterexample.empty())
          std::cout << " counterexample=" << c.counterexample;
        std::cout << "\n";
        all_passed = all_passed && c.passed;
      }
      if (!all_passed) return 3;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
