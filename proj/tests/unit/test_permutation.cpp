#include <doctest.h>

#include "qcycle/error.hpp"
#include "qcycle/fixtures.hpp"
#include "qcycle/permutation.hpp"

using namespace qcs;

TEST_CASE("composition is right to left") {
  auto g = Permutation::from_cycles("(1 2 3)", 3);
  auto h = Permutation::from_cycles("(1 2)", 3);
  // g(h(1)) = g(2) = 3
  CHECK((g * h)(0) == 2);
  CHECK((h * g)(0) == 0);
}

TEST_CASE("identity and involution cases") {
  auto g = Permutation::from_cycles("(1 4)", 4);
  CHECK(g * Permutation::identity(4) == g);
  auto t = Permutation::from_cycles("(1 2)", 2);
  CHECK((t * t).is_identity());
}

TEST_CASE("sigma_1 sigma_4^-1 on simple4") {
  auto X = fixture("simple4").set;
  auto s1 = X.sigma(0);
  auto s4inv = X.sigma(3).inverse();
  CHECK(s1.to_cycles() == "(1 4)");
  CHECK(s4inv.to_cycles() == "(1 3 4 2)");
  auto c = s1 * s4inv;
  CHECK(c(0) == 2);  // 1 -> 3
  CHECK(c(3) == 1);  // 4 -> 2
  std::vector<Point> delta1{0, 3};
  CHECK(c.image_of(delta1) == std::vector<Point>{1, 2});
}

TEST_CASE("cycle notation round trip") {
  for (const char* text : {"()", "(1 3 4 2)", "(1 2)(3 5 4)"}) {
    auto p = Permutation::from_cycles(text, 5);
    CHECK(Permutation::from_cycles(p.to_cycles(), 5) == p);
  }
  CHECK(Permutation::from_cycles("(1 2)(3 5 4)", 5).to_cycles() == "(1 2)(3 5 4)");
}

TEST_CASE("invalid permutations are rejected") {
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), InvalidStructure);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 2}), InvalidStructure);
  CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)), PreconditionError);
}

TEST_CASE("order and cycle type") {
  auto p = Permutation::from_cycles("(1 2)(3 5 4)", 6);
  CHECK(p.order() == 6);
  CHECK(p.cycle_type() == std::vector<std::size_t>{1, 2, 3});
  CHECK(p.fixed_point_count() == 1);
  CHECK(p * p.inverse() == Permutation::identity(6));
}
