// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.  `acceptance N ...` runs only the listed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qcycle/analysis.hpp"
#include "qcycle/blocks.hpp"
#include "qcycle/congruence.hpp"
#include "qcycle/enumeration.hpp"
#include "qcycle/extension.hpp"
#include "qcycle/fixtures.hpp"

using namespace qcs;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds, 0 for none
  std::function<Outcome()> run;
};

// Enumerations are shared between criteria and computed on first use.
const std::vector<QCycleSet>& structures(Kind kind, std::size_t order) {
  static std::map<std::pair<Kind, std::size_t>, std::vector<QCycleSet>> cache;
  auto key = std::make_pair(kind, order);
  auto it = cache.find(key);
  if (it == cache.end()) {
    EnumerationQuery q;
    q.order = order;
    q.kind = kind;
    q.override_bounds = true;
    it = cache.emplace(key, enumerate_all(q)).first;
  }
  return it->second;
}

std::vector<QCycleSet> collect(Kind kind, std::size_t from, std::size_t to) {
  std::vector<QCycleSet> out;
  for (std::size_t n = from; n <= to; ++n) {
    const auto& part = structures(kind, n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<QCycleSet> fixture_sets() {
  std::vector<QCycleSet> out;
  for (const char* name : {"simple4", "simple9", "nonsimple6", "primitive4", "J4", "example_1", "D1",
                           "D2:1", "D2:2", "D2:3", "D3:3", "D3:5", "cyclic:4", "cyclic:6",
                           "cyclic:8", "cyclic:9", "trivial:4"}) {
    out.push_back(fixture(name).set);
  }
  return out;
}

std::vector<Point> block_containing(const BlockSystem& B, Point p) { return B.block(B.block_of(p)); }

Outcome simple_with_block_system(const std::string& name, const std::string& expected,
                                 Point from_block, Point to_block, Point a, Point b) {
  Outcome o;
  auto X = fixture(name).set;
  o.require(is_simple_blocks(X), "not simple by blocks");
  o.require(is_simple_oracle(X), "not simple by congruences");
  auto systems = all_block_systems(permutation_group(X));
  o.require(systems.size() == 1 && systems[0].to_string() == expected,
            "block systems differ from " + expected);
  if (systems.size() == 1) {
    const auto& B = systems[0];
    auto g = X.sigma(a) * X.sigma(b).inverse();
    auto image = g.image_of(block_containing(B, from_block));
    auto show = [](const std::vector<Point>& block) {
      std::string out;
      for (Point p : block) out += (out.empty() ? "{" : ",") + std::to_string(p + 1);
      return out + "}";
    };
    o.require(image != block_containing(B, from_block), "sigma product fixes the block");
    o.require(image == block_containing(B, to_block),
              "sigma_" + std::to_string(a + 1) + " sigma_" + std::to_string(b + 1) + "^-1 maps " +
                  show(block_containing(B, from_block)) + " to " + show(image) + ", not " +
                  show(block_containing(B, to_block)));
  }
  return o;
}

Outcome criterion1() { return simple_with_block_system("simple4", "{{1,4},{2,3}}", 0, 1, 0, 3); }

Outcome criterion2() {
  return simple_with_block_system("simple9", "{{1,4,9},{2,6,8},{3,5,7}}", 0, 1, 0, 8);
}

Outcome criterion3() {
  Outcome o;
  auto X = fixture("nonsimple6").set;
  o.require(!is_simple_blocks(X), "simple by blocks");
  o.require(!is_simple_oracle(X), "simple by congruences");
  BlockSystem B(6, {{0, 5}, {1, 4}, {2, 3}});
  auto systems = all_block_systems(permutation_group(X));
  o.require(std::find(systems.begin(), systems.end(), B) != systems.end(),
            "{{1,6},{2,5},{3,4}} is not a block system");
  for (const auto& block : B.blocks()) {
    auto gens = displacement_generators(X, block);
    for (const auto& g : gens.negative) {
      o.require(fixes_blocks(g, B), g.to_cycles() + " does not fix the blocks");
    }
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto X = fixture("primitive4").set;
  o.require(is_primitive(permutation_group(X)), "not primitive");
  o.require(primitive_level(X).level == 1u, "level is not 1");
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto s = j4_solution();
  o.require(is_involutive(s), "not involutive");
  o.require(check_yang_baxter(s), "braid relation fails");
  auto groups = solution_groups(s);
  GroupHandle lambda_only(4, s.lambdas());
  o.require(groups.g.order() == lambda_only.order(), "G(X,r) differs from <lambda>");
  for (const auto& g : groups.g.generators()) {
    o.require(lambda_only.contains(g), g.to_cycles() + " is not in <lambda>");
  }
  o.require(s.rho(0).to_cycles() == "(2 4)", "rho_1 is " + s.rho(0).to_cycles());
  o.require(!groups.g.contains(s.rho(0)), "rho_1 lies in G(X,r)");
  o.require(groups.g.orbits() == groups.f.orbits(), "orbits differ");
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::vector<std::pair<std::string, std::size_t>> cases{{"D1", 0}, {"D2", 1}, {"D2", 2},
                                                         {"D2", 3}, {"D3", 3}, {"D3", 5}};
  for (const auto& [name, k] : cases) {
    const std::string label = name + (k ? "(" + std::to_string(k) + ")" : "");
    auto data = paper_extension(name, k);
    o.require(check_dynamical_pair(data.base, data.pair).empty(), label + ": cocycle check fails");
    auto E = build_extension(data.base, data.pair);
    o.require(extension_indecomposability_criterion(data.base, data.pair),
              label + ": stabilizer criterion fails");
    o.require(permutation_group(E).is_transitive(), label + ": not transitive");
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto X = fixture("example_1").set;
  o.require(X.size() == 6, "order is not 6");
  o.require(is_square_free(X), "not square-free");
  o.require(is_indecomposable(X), "decomposable");
  o.require(!is_left_self_distributive(X), "left self-distributive");
  o.require(!is_right_self_distributive(X), "right self-distributive");
  o.require(!multipermutation_level(X), "multipermutational");
  for (const auto& Y : retraction_series(X)) {
    o.require(Y.dot_table() != Y.colon_table(), "a retraction has equal operations");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n) {
    EnumerationQuery q;
    q.order = n;
    q.filters = {{Property::indecomposable, Filter::require},
                 {Property::square_free, Filter::require},
                 {Property::self_distributive, Filter::forbid}};
    const auto found = enumerate_all(q).size();
    o.require(found == 0, std::to_string(found) + " examples of order " + std::to_string(n));
    std::size_t direct = 0;
    for (const auto& X : structures(Kind::q_cycle_set, n)) {
      if (is_indecomposable(X) && is_square_free(X) && !is_left_self_distributive(X) &&
          !is_right_self_distributive(X)) {
        ++direct;
      }
    }
    o.require(direct == 0, "direct scan found examples of order " + std::to_string(n));
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t indecomposable = 0, simple = 0;
  for (const auto& X : structures(Kind::cycle_set, 6)) {
    if (is_indecomposable(X)) {
      ++indecomposable;
      o.require(is_retractable(X), "an indecomposable cycle set is irretractable");
    }
    if (is_simple_oracle(X)) ++simple;
  }
  o.require(indecomposable > 0, "no indecomposable cycle sets found");
  o.require(simple == 0, std::to_string(simple) + " simple cycle sets");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(indecomposable) + " indecomposable";
  return o;
}

Outcome criterion10() {
  Outcome o;
  auto sets = collect(Kind::q_cycle_set, 1, 4);
  auto fixtures = fixture_sets();
  sets.insert(sets.end(), fixtures.begin(), fixtures.end());
  std::size_t failures = 0;
  for (const auto& X : sets) {
    bool ok = check_dis_equality(X) && delta_pair_map(X).bijective && is_nondegenerate(X);
    auto s = to_solution(X);
    ok = ok && check_yang_baxter(s) && from_solution(s) == X;
    if (!ok) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " structures fail");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(sets.size()) + " structures";
  return o;
}

std::vector<QCycleSet> indecomposable_upto6() {
  std::vector<QCycleSet> out;
  for (const auto& X : collect(Kind::q_cycle_set, 2, 6)) {
    if (is_indecomposable(X)) out.push_back(X);
  }
  for (const auto& X : structures(Kind::cycle_set, 7)) {
    if (is_indecomposable(X)) out.push_back(X);
  }
  for (const auto& X : fixture_sets()) {
    if (X.size() > 1 && is_indecomposable(X)) out.push_back(X);
  }
  return out;
}

Outcome criterion11() {
  Outcome o;
  std::size_t checked = 0, disagreements = 0, cycle_sets = 0, level_two = 0;
  for (const auto& X : indecomposable_upto6()) {
    ++checked;
    const auto level = primitive_level(X).level;
    if (has_finite_primitive_level(X) != level.has_value()) ++disagreements;
    if (X.is_cycle_set()) {
      ++cycle_sets;
      if (cycle_set_finite_level(X) != level.has_value()) ++disagreements;
      if (!is_prime(X.size())) {
        ++level_two;
        if (primitive_level_two_check(X) != (level == 2u)) ++disagreements;
      }
    }
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(checked) + " structures, " +
              std::to_string(cycle_sets) + " cycle sets, " + std::to_string(level_two) +
              " level-two checks";
  return o;
}

Outcome criterion12() {
  Outcome o;
  std::size_t checked = 0, disagreements = 0;
  std::vector<QCycleSet> sets = collect(Kind::cycle_set, 2, 7);
  auto qcs = collect(Kind::q_cycle_set, 2, 6);
  sets.insert(sets.end(), qcs.begin(), qcs.end());
  for (const auto& X : fixture_sets()) {
    if (X.size() > 1 && X.size() <= 8) sets.push_back(X);
  }
  for (const auto& X : sets) {
    auto G = permutation_group(X);
    if (!G.is_transitive() || !G.is_abelian()) continue;
    ++checked;
    if (primitive_level(X).level != big_omega(X.size())) ++disagreements;
  }
  o.require(checked > 0, "no structures with abelian group");
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(checked) + " structures";
  return o;
}

Outcome criterion13() {
  Outcome o;
  std::size_t checked = 0, violations = 0;
  for (const auto& X : collect(Kind::cycle_set, 2, 6)) {
    if (!is_indecomposable(X) || !primitive_level(X).level) continue;
    ++checked;
    for (Point x = 0; x < X.size(); ++x) {
      if (X.sigma(x).fixed_point_count() != 0) {
        ++violations;
        break;
      }
    }
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(checked) + " cycle sets";
  return o;
}

Outcome criterion14() {
  Outcome o;
  std::vector<QCycleSet> sets = collect(Kind::q_cycle_set, 1, 5);
  auto cs = collect(Kind::cycle_set, 1, 7);
  sets.insert(sets.end(), cs.begin(), cs.end());
  auto fixtures = fixture_sets();
  sets.insert(sets.end(), fixtures.begin(), fixtures.end());
  std::map<std::string, std::size_t> applicable, counterexamples;
  for (const auto& X : sets) {
    for (const auto& imp : structure_checks(X)) {
      if (imp.hypothesis) ++applicable[imp.name];
      if (!imp.holds()) ++counterexamples[imp.name];
    }
  }
  for (const auto& [name, k] : counterexamples) {
    o.require(k == 0, name + ": " + std::to_string(k) + " counterexamples");
  }
  std::string summary = std::to_string(sets.size()) + " structures;";
  for (const auto& [name, k] : applicable) summary += " " + name + "=" + std::to_string(k);
  o.detail += (o.detail.empty() ? "" : "; ") + summary;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria{
      {1, "simple4: simple, unique block system, sigma product moves blocks", 1, criterion1},
      {2, "simple9: simple, unique block system, sigma product moves blocks", 1, criterion2},
      {3, "nonsimple6: not simple, block displacements in the fixer", 1, criterion3},
      {4, "primitive4: primitive with level 1", 1, criterion4},
      {5, "J4 solution: involutive, G(X,r) = <lambda>, rho_1 outside, equal orbits", 1, criterion5},
      {6, "extensions D1, D2(1..3), D3(3, 5): cocycles and indecomposability", 5, criterion6},
      {7, "example_1: square-free, indecomposable, not self-distributive, not mpl", 1, criterion7},
      {8, "orders 2-4: no indecomposable square-free non-self-distributive", 300, criterion8},
      {9, "order 6 cycle sets: indecomposable ones retractable, none simple", 600, criterion9},
      {10, "property suite on regular q-cycle sets of order <= 4 and fixtures", 120, criterion10},
      {11, "finite level criteria agree with the computed level", 0, criterion11},
      {12, "abelian group: primitive level equals Omega(|X|)", 0, criterion12},
      {13, "finite level cycle sets have fixed-point-free sigma", 0, criterion13},
      {14, "structure implications (i)-(vi) have no counterexamples", 0, criterion14},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && seconds > c.time_limit) {
      outcome.require(false, "time limit exceeded");
    }
    if (!outcome.pass) ++failed;
    std::printf("%s criterion %2d: %s (%.2f s)%s%s\n", outcome.pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), seconds, outcome.detail.empty() ? "" : " -- ",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
