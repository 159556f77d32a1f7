#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "qcycle/permutation.hpp"

namespace qcs {

using GroupOrder = boost::multiprecision::cpp_int;

/// A permutation group given by generators.
///
/// The stabilizer chain is built on first use with the deterministic
/// Schreier-Sims algorithm (base points taken in increasing order, skipping
/// points fixed by the current strong generators).  Copies share the chain;
/// once built it is read-only, so handles may be queried concurrently.
class GroupHandle {
 public:
  GroupHandle(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  /// Smallest generator-closed set containing p, sorted.
  std::vector<Point> orbit(Point p) const;
  /// All orbits, each sorted, ordered by minimum.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  GroupOrder order() const;
  std::string order_string() const;
  /// Membership by sifting through the stabilizer chain.
  bool contains(const Permutation& g) const;

  /// All generator pairs commute.
  bool is_abelian() const;
  /// Transitive and |G| = degree.
  bool is_regular_action() const;

  std::vector<Point> base() const;
  std::vector<std::size_t> fundamental_orbit_lengths() const;
  std::vector<Permutation> strong_generators() const;

  /// Every element, in breadth-first order from the identity.  Throws
  /// BoundExceeded when the order is larger than `bound`.
  std::vector<Permutation> elements(std::size_t bound = 1'000'000) const;

 private:
  struct Chain;
  struct Lazy;
  const Chain& chain() const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Lazy> lazy_;
};

}  // namespace qcs
