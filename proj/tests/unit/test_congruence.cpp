#include <doctest.h>

#include "qcycle/analysis.hpp"
#include "qcycle/canonical.hpp"
#include "qcycle/congruence.hpp"
#include "qcycle/error.hpp"
#include "qcycle/fixtures.hpp"

using namespace qcs;

TEST_CASE("congruence lattices") {
  // Counts from tests/oracles/brute_force.py.
  CHECK(all_congruences(fixture("simple4").set).size() == 2);
  CHECK(all_congruences(fixture("primitive4").set).size() == 2);
  CHECK(all_congruences(trivial_set(3)).size() == 5);
  auto cong = all_congruences(fixture("nonsimple6").set);
  REQUIRE(cong.size() == 3);
  CHECK(cong.front().is_equality());
  CHECK(cong[1].to_string() == "{{1,6},{2,5},{3,4}}");
  CHECK(cong.back().is_total());
}

TEST_CASE("principal congruence") {
  auto X = fixture("nonsimple6").set;
  CHECK(principal_congruence(X, 0, 5).to_string() == "{{1,6},{2,5},{3,4}}");
  CHECK(principal_congruence(X, 0, 1).is_total());
  CHECK(is_compatible(X, principal_congruence(X, 0, 5)));
}

TEST_CASE("lattice operations") {
  std::vector<std::size_t> a{0, 0, 1, 1}, b{0, 1, 1, 2};
  Congruence A(a), B(b);
  CHECK(join(A, B).is_total());
  CHECK(meet(A, B).to_string() == "{{1},{2},{3},{4}}");
  CHECK(refines(meet(A, B), A));
  CHECK_FALSE(refines(A, B));
}

TEST_CASE("quotient of nonsimple6") {
  auto X = fixture("nonsimple6").set;
  auto theta = principal_congruence(X, 0, 5);
  auto q = quotient(X, theta);
  CHECK(q.set.size() == 3);
  // Tables from tests/oracles/brute_force.py.
  CHECK(q.set == QCycleSet::from_rows({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}},
                                      {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}));
  CHECK(is_homomorphism(X, q.set, q.projection));
  CHECK(is_covering_map(X, q.set, q.projection));
  CHECK(covering_fiber_size(6, q.projection) == 2);
  std::vector<std::size_t> bad{0, 0, 1, 2, 3, 4};
  CHECK_THROWS_AS(quotient(X, Congruence(bad)), PreconditionError);
}

TEST_CASE("covering maps") {
  auto X = cyclic_set(4);
  auto Y = cyclic_set(2);
  std::vector<Point> f{0, 1, 0, 1};
  CHECK(is_covering_map(X, Y, f));
  std::vector<Point> g{0, 0, 0, 0};
  CHECK_FALSE(is_homomorphism(X, Y, g));
  CHECK_THROWS_AS(is_covering_map(X, Y, g), PreconditionError);
  CHECK(covering_fiber_size(4, std::vector<Point>{0, 0, 0, 1}) == 0);
}

TEST_CASE("isomorphism") {
  auto X = fixture("simple9").set;
  auto p = Permutation::from_cycles("(1 5 9)(2 7)", 9);
  auto Y = X.relabel(p);
  auto f = is_isomorphic(X, Y);
  REQUIRE(f);
  for (Point x = 0; x < 9; ++x) {
    for (Point y = 0; y < 9; ++y) {
      CHECK(Y.dot((*f)(x), (*f)(y)) == (*f)(X.dot(x, y)));
      CHECK(Y.colon((*f)(x), (*f)(y)) == (*f)(X.colon(x, y)));
    }
  }
  CHECK_FALSE(is_isomorphic(fixture("simple4").set, fixture("primitive4").set));
  CHECK_FALSE(is_isomorphic(cyclic_set(4), cyclic_set(5)));
}

TEST_CASE("canonical form") {
  auto X = fixture("nonsimple6").set;
  auto c = canonical_labeling(X);
  CHECK(c.form == X.relabel(c.relabeling));
  auto Y = X.relabel(Permutation::from_cycles("(1 6 2)(3 4)", 6));
  CHECK(canonical_form(Y) == c.form);
  CHECK(canonical_form(c.form) == c.form);
}

TEST_CASE("epimorphic images") {
  auto images = epimorphic_images(fixture("D1").set);
  CHECK_FALSE(images.empty());
  for (const auto& im : images) {
    CHECK(im.set.size() == im.congruence.class_count());
    CHECK(check_q_axioms(im.set).ok());
  }
  CHECK(epimorphic_images(fixture("simple4").set).empty());
  CHECK(to_block_system(principal_congruence(fixture("nonsimple6").set, 0, 5)).size() == 3);
}
