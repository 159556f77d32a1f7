#include <doctest.h>

#include "qcycle/analysis.hpp"
#include "qcycle/error.hpp"
#include "qcycle/extension.hpp"
#include "qcycle/fixtures.hpp"

using namespace qcs;

TEST_CASE("built-in extensions") {
  std::vector<std::pair<std::string, std::size_t>> cases{{"D1", 0}, {"D2", 1}, {"D2", 2},
                                                         {"D2", 3}, {"D3", 3}, {"D3", 5}};
  for (const auto& [name, k] : cases) {
    CAPTURE(name);
    CAPTURE(k);
    auto data = paper_extension(name, k);
    CHECK(check_dynamical_pair(data.base, data.pair).empty());
    auto E = build_extension(data.base, data.pair);
    CHECK(check_q_axioms(E).ok());
    CHECK(is_indecomposable(E));
    CHECK(extension_indecomposability_criterion(data.base, data.pair));
    auto B = extension_blocks(data.base, data.pair);
    CHECK(B.size() == data.base.size());
  }
}

TEST_CASE("SF extension") {
  auto data = paper_extension("SF", 1);
  auto E = build_extension(data.base, data.pair);
  CHECK(E.size() == 6);
  CHECK(is_square_free(E));
  CHECK(is_indecomposable(E));
  CHECK_FALSE(is_left_self_distributive(E));
  CHECK_FALSE(is_right_self_distributive(E));
  CHECK_FALSE(multipermutation_level(E));
  CHECK(E == fixture("example_1").set);
}

TEST_CASE("extension carrier layout") {
  auto data = paper_extension("D3", 3);
  auto E = build_extension(data.base, data.pair);
  const Point m = 3;
  for (Point x = 0; x < 3; ++x) {
    for (Point s = 0; s < m; ++s) {
      for (Point y = 0; y < 3; ++y) {
        for (Point t = 0; t < m; ++t) {
          CHECK(E.dot(x * m + s, y * m + t) ==
                data.base.dot(x, y) * m + data.pair.alpha(x, y, s, t));
        }
      }
    }
  }
}

TEST_CASE("trivial pair gives a direct product") {
  auto X = cyclic_set(3);
  auto E = build_extension(X, trivial_pair(3, 2));
  CHECK(E.size() == 6);
  CHECK(check_q_axioms(E).ok());
  CHECK_FALSE(is_indecomposable(E));
  CHECK_FALSE(extension_indecomposability_criterion(X, trivial_pair(3, 2)));
}

TEST_CASE("a broken cocycle is reported") {
  auto data = paper_extension("D1");
  auto alpha = data.pair.alpha_table();
  auto alpha_prime = data.pair.alpha_prime_table();
  // Swap one slice of alpha: still bijective, but no longer a cocycle.
  std::swap(alpha[0], alpha[1]);
  DynamicalPair broken(4, 2, alpha, alpha_prime);
  auto violations = check_dynamical_pair(data.base, broken);
  CHECK_FALSE(violations.empty());
  CHECK_THROWS_AS(build_extension(data.base, broken), InvalidStructure);
}

TEST_CASE("pair validation") {
  std::vector<Point> bad(4 * 4 * 2 * 2, 0);
  CHECK_THROWS_AS(DynamicalPair(4, 2, bad, bad), InvalidStructure);
  CHECK_THROWS_AS(DynamicalPair(4, 2, {0, 1}, {0, 1}), InvalidStructure);
  CHECK_THROWS_AS(build_extension(cyclic_set(3), trivial_pair(4, 2)), PreconditionError);
  CHECK_THROWS_AS(paper_extension("D3", 4), PreconditionError);
  CHECK_THROWS_AS(paper_extension("D9"), PreconditionError);
}
