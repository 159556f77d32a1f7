#include <doctest.h>

#include "qcycle/analysis.hpp"
#include "qcycle/blocks.hpp"
#include "qcycle/error.hpp"
#include "qcycle/fixtures.hpp"
#include "qcycle/perm_group.hpp"

using namespace qcs;

TEST_CASE("group orders of the fixtures") {
  // Orders confirmed by closure in tests/oracles/brute_force.py.
  CHECK(permutation_group(fixture("simple4").set).order() == 8);
  CHECK(permutation_group(fixture("simple9").set).order() == 81);
  CHECK(permutation_group(fixture("nonsimple6").set).order() == 24);
  CHECK(permutation_group(fixture("primitive4").set).order() == 12);
  CHECK(permutation_group(fixture("D1").set).order() == 8);
  CHECK(permutation_group(fixture("D2:1").set).order() == 4);
}

TEST_CASE("orbits of an intransitive group") {
  GroupHandle G(6, {Permutation::from_cycles("(1 2)", 6), Permutation::from_cycles("(3 4 5)", 6)});
  auto orbits = G.orbits();
  REQUIRE(orbits.size() == 3);
  CHECK(orbits[0] == std::vector<Point>{0, 1});
  CHECK(orbits[1] == std::vector<Point>{2, 3, 4});
  CHECK(orbits[2] == std::vector<Point>{5});
  CHECK_FALSE(G.is_transitive());
  CHECK(G.order() == 6);
  CHECK(G.is_abelian());
}

TEST_CASE("membership by sifting") {
  GroupHandle A4(4, {Permutation::from_cycles("(1 2 3)", 4), Permutation::from_cycles("(2 3 4)", 4)});
  CHECK(A4.order() == 12);
  CHECK(A4.contains(Permutation::from_cycles("(1 2)(3 4)", 4)));
  CHECK_FALSE(A4.contains(Permutation::from_cycles("(1 2)", 4)));
  GroupHandle S8(8, {Permutation::from_cycles("(1 2 3 4 5 6 7 8)", 8), Permutation::from_cycles("(1 2)", 8)});
  CHECK(S8.order() == 40320);
  CHECK(S8.order_string() == "40320");
}

TEST_CASE("block systems of simple4 and simple9") {
  auto G4 = permutation_group(fixture("simple4").set);
  auto systems = all_block_systems(G4);
  REQUIRE(systems.size() == 1);
  CHECK(systems[0].to_string() == "{{1,4},{2,3}}");
  auto G9 = permutation_group(fixture("simple9").set);
  auto systems9 = all_block_systems(G9);
  REQUIRE(systems9.size() == 1);
  CHECK(systems9[0].to_string() == "{{1,4,9},{2,6,8},{3,5,7}}");
}

TEST_CASE("minimal block system and primitivity") {
  auto G = permutation_group(cyclic_set(6));
  CHECK(minimal_block_system(G, 0, 3).to_string() == "{{1,4},{2,5},{3,6}}");
  CHECK(minimal_block_system(G, 0, 2).to_string() == "{{1,3,5},{2,4,6}}");
  CHECK(minimal_block_system(G, 0, 1).size() == 1);
  CHECK(all_block_systems(G).size() == 2);
  CHECK_FALSE(is_primitive(G));
  CHECK(is_primitive(permutation_group(fixture("primitive4").set)));
  CHECK(is_primitive(permutation_group(cyclic_set(5))));
}

TEST_CASE("block stabilizer of a cyclic order 6 group") {
  auto G = permutation_group(cyclic_set(6));
  BlockSystem B(6, {{0, 3}, {1, 4}, {2, 5}});
  REQUIRE(is_invariant(G, B));
  auto gens = block_stabilizer_generators(G, B, B.block_of(0));
  GroupHandle H(6, gens);
  CHECK(H.order() == 2);
  CHECK(H.orbit(0) == std::vector<Point>{0, 3});
  CHECK(block_action(G, B).order() == 3);
}

TEST_CASE("fixer membership") {
  BlockSystem B(4, {{0, 3}, {1, 2}});
  CHECK(fixes_blocks(Permutation::from_cycles("(1 4)(2 3)", 4), B));
  CHECK_FALSE(fixes_blocks(Permutation::from_cycles("(1 2)(3 4)", 4), B));
  CHECK(preserves_blocks(Permutation::from_cycles("(1 2)(3 4)", 4), B));
  CHECK_FALSE(preserves_blocks(Permutation::from_cycles("(1 2)", 4), B));
}

TEST_CASE("block systems need a partition") {
  CHECK_THROWS_AS(BlockSystem(4, {{0, 1}, {1, 2, 3}}), InvalidStructure);
  GroupHandle G(4, {Permutation::from_cycles("(1 2)", 4)});
  CHECK_THROWS_AS(all_block_systems(G), PreconditionError);
}
