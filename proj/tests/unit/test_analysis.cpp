#include <doctest.h>

#include "qcycle/analysis.hpp"
#include "qcycle/error.hpp"
#include "qcycle/fixtures.hpp"

using namespace qcs;

namespace {

std::optional<std::size_t> level(const char* name) { return primitive_level(fixture(name).set).level; }

}  // namespace

TEST_CASE("simplicity by both methods") {
  for (const char* name : {"simple4", "simple9", "J4", "primitive4"}) {
    CAPTURE(name);
    auto X = fixture(name).set;
    CHECK(is_simple_blocks(X));
    CHECK(is_simple_oracle(X));
  }
  for (const char* name : {"nonsimple6", "D1", "SF:1", "cyclic:4"}) {
    CAPTURE(name);
    auto X = fixture(name).set;
    CHECK_FALSE(is_simple_blocks(X));
    CHECK_FALSE(is_simple_oracle(X));
    CHECK(non_simplicity_witness(X));
  }
  CHECK_THROWS_AS(is_simple_oracle(trivial_set(1)), PreconditionError);
}

TEST_CASE("displacement generators of nonsimple6 fix the blocks") {
  auto X = fixture("nonsimple6").set;
  BlockSystem B(6, {{0, 5}, {1, 4}, {2, 3}});
  CHECK(block_dis_in_fixer(X, B));
  for (const auto& block : B.blocks()) {
    auto gens = displacement_generators(X, block);
    for (const auto& g : gens.negative) CHECK(fixes_blocks(g, B));
  }
  CHECK(check_dis_equality(X));
}

TEST_CASE("primitive levels") {
  // Values from tests/oracles/brute_force.py (longest congruence chains).
  CHECK(level("primitive4") == 1);
  CHECK(level("nonsimple6") == 2);
  CHECK_FALSE(level("simple4"));
  CHECK_FALSE(level("simple9"));
  CHECK(level("D1") == 3);
  CHECK(level("D2:1") == 2);
  CHECK(level("D2:2") == 3);
  CHECK(level("cyclic:4") == 2);
  CHECK(level("cyclic:6") == 2);
  CHECK(level("cyclic:8") == 3);
  CHECK_THROWS_AS(primitive_level(trivial_set(3)), PreconditionError);
}

TEST_CASE("level chain shape") {
  auto result = primitive_level(fixture("D1").set);
  REQUIRE(result.chain.size() == 3);
  CHECK(result.chain.front().is_equality());
  for (std::size_t i = 1; i < result.chain.size(); ++i) {
    CHECK(refines(result.chain[i - 1], result.chain[i]));
    CHECK(result.chain[i].class_count() < result.chain[i - 1].class_count());
  }
}

TEST_CASE("finite level criteria agree with the level") {
  for (const char* name : {"simple4", "simple9", "nonsimple6", "primitive4", "D1", "D2:3",
                           "D3:3", "SF:1", "cyclic:6", "cyclic:9"}) {
    CAPTURE(name);
    auto X = fixture(name).set;
    const bool finite = primitive_level(X).level.has_value();
    CHECK(has_finite_primitive_level(X) == finite);
    if (X.is_cycle_set()) CHECK(cycle_set_finite_level(X) == finite);
  }
  CHECK(primitive_level_two_check(cyclic_set(4)));
  CHECK(primitive_level_two_check(cyclic_set(6)));
  CHECK_FALSE(primitive_level_two_check(cyclic_set(8)));
  CHECK_THROWS_AS(primitive_level_two_check(cyclic_set(5)), PreconditionError);
}

TEST_CASE("abelian formula") {
  for (std::size_t n : {2, 4, 6, 8, 9, 12}) {
    CAPTURE(n);
    auto X = cyclic_set(n);
    CHECK(primitive_level_abelian(X) == big_omega(n));
    CHECK(primitive_level(X).level == big_omega(n));
  }
}

TEST_CASE("retraction") {
  CHECK(multipermutation_level(trivial_set(3)) == 1);
  CHECK(multipermutation_level(trivial_set(1)) == 0);
  CHECK(multipermutation_level(fixture("D1").set) == 2);
  CHECK_FALSE(multipermutation_level(fixture("simple4").set));
  CHECK_FALSE(is_retractable(fixture("simple4").set));
  auto r = retract(cyclic_set(4));
  CHECK(r.set.size() == 1);
  auto series = retraction_series(fixture("SF:1").set);
  CHECK(series.size() >= 1);
  for (const auto& Y : series) CHECK(Y.dot_table() != Y.colon_table());
}

TEST_CASE("fixed points of cycle sets") {
  auto report = fixed_point_tests(fixture("simple4").set);
  CHECK(report.ok());
  auto c = fixed_point_tests(cyclic_set(6));
  CHECK_FALSE(c.has_fixed_point);
  CHECK(c.ok());
  auto t = fixed_point_tests(trivial_set(3));
  CHECK(t.has_fixed_point);
  CHECK(t.witness);
}

TEST_CASE("structure checks hold on fixtures") {
  for (const char* name : {"simple4", "simple9", "nonsimple6", "primitive4", "J4", "D1", "SF:1",
                           "trivial:4", "cyclic:6"}) {
    CAPTURE(name);
    for (const auto& imp : structure_checks(fixture(name).set)) {
      CAPTURE(imp.name);
      CHECK(imp.holds());
    }
  }
}

TEST_CASE("prime helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(big_omega(1) == 0);
  CHECK(big_omega(12) == 3);
  CHECK(big_omega(64) == 6);
}
