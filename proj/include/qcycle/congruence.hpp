#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcycle/blocks.hpp"
#include "qcycle/structures.hpp"

namespace qcs {

/// An equivalence relation on {0..n-1}, stored as a class id per point.
/// Ids are assigned in order of first appearance, so class k is the class
/// with the k-th smallest minimum.
class Congruence {
 public:
  Congruence() = default;
  /// Any labelling; classes are the fibres of `label`.
  explicit Congruence(std::span<const std::size_t> label);

  static Congruence equality(std::size_t n);
  static Congruence total(std::size_t n);

  std::size_t size() const noexcept { return label_.size(); }
  std::size_t class_count() const noexcept { return class_count_; }
  std::size_t class_of(Point x) const { return label_[x]; }
  const std::vector<std::size_t>& labels() const noexcept { return label_; }
  /// Sorted classes, ordered by minimum.
  std::vector<std::vector<Point>> classes() const;
  std::vector<std::vector<Point>> one_based() const;

  bool is_equality() const noexcept { return class_count_ == label_.size(); }
  bool is_total() const noexcept { return class_count_ <= 1; }
  bool related(Point a, Point b) const { return label_[a] == label_[b]; }

  /// "{{1,6},{2,5},{3,4}}".
  std::string to_string() const;

  friend bool operator==(const Congruence& a, const Congruence& b) {
    return a.label_ == b.label_;
  }
  friend auto operator<=>(const Congruence& a, const Congruence& b) {
    return a.label_ <=> b.label_;
  }

 private:
  std::vector<std::size_t> label_;
  std::size_t class_count_ = 0;
};

/// Smallest compatible equivalence identifying a and b.
Congruence principal_congruence(const QCycleSet& X, Point a, Point b);

/// a~b and c~d imply a.c ~ b.d and a:c ~ b:d.
bool is_compatible(const QCycleSet& X, const Congruence& theta);

/// The whole congruence lattice: equality, total and every join of
/// principal congruences.  Ordered by decreasing number of classes, ties
/// broken by labels.
std::vector<Congruence> all_congruences(const QCycleSet& X);

/// Every class of `fine` lies inside a class of `coarse`.
bool refines(const Congruence& fine, const Congruence& coarse);
Congruence join(const Congruence& a, const Congruence& b);
Congruence meet(const Congruence& a, const Congruence& b);

struct Quotient {
  QCycleSet set;
  /// projection[x] is the class of x, i.e. a point of `set`.
  std::vector<Point> projection;
};

/// Throws PreconditionError if theta is not compatible.
Quotient quotient(const QCycleSet& X, const Congruence& theta);

/// f(x.y) = f(x).f(y) and f(x:y) = f(x):f(y) for a map f: X -> Y.
bool is_homomorphism(const QCycleSet& X, const QCycleSet& Y, std::span<const Point> f);

/// All fibres of f have the same size.  Throws PreconditionError unless f
/// is a surjective homomorphism.
bool is_covering_map(const QCycleSet& X, const QCycleSet& Y, std::span<const Point> f);

/// Common fibre size of a covering map, 0 if the fibres differ.
std::size_t covering_fiber_size(std::size_t domain_size, std::span<const Point> f);

/// An isomorphism f: X -> Y when one exists.
std::optional<Permutation> is_isomorphic(const QCycleSet& X, const QCycleSet& Y);

struct Image {
  QCycleSet set;
  Congruence congruence;
};

/// Quotients by every congruence other than equality and total, one per
/// isomorphism class, in the order of all_congruences.
std::vector<Image> epimorphic_images(const QCycleSet& X);

BlockSystem to_block_system(const Congruence& theta);

}  // namespace qcs
