#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcycle/structures.hpp"

namespace qcs {

struct Fixture {
  std::string name;
  /// Always set; for solution fixtures it is the corresponding q-cycle set.
  QCycleSet set;
  std::optional<Solution> solution;
};

/// Names accepted by fixture(); parametrized entries are shown with their
/// parameter placeholder.
std::vector<std::string> fixture_names();

/// simple4, simple9, nonsimple6, primitive4, J4, trivial:N, cyclic:N, D1,
/// D2:k, D3:p, SF:m (example_1 is SF:1).  Throws PreconditionError on an
/// unknown name or bad parameter.
Fixture fixture(const std::string& name);

/// The four-point involutive solution with lambda_1 = (2 3), lambda_2 =
/// (1 4), lambda_3 = (1 2 4 3), lambda_4 = (1 3 4 2).
Solution j4_solution();

/// x.y = x:y = y on n points.
QCycleSet trivial_set(std::size_t n);
/// The cycle set x.y = x:y = y + 1 mod n.
QCycleSet cyclic_set(std::size_t n);

}  // namespace qcs
