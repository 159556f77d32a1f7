#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcycle/blocks.hpp"
#include "qcycle/congruence.hpp"
#include "qcycle/perm_group.hpp"
#include "qcycle/structures.hpp"

namespace qcs {

/// G(X) = <sigma_x, delta_x>.  Requires X regular.
GroupHandle permutation_group(const QCycleSet& X);

struct SolutionGroups {
  GroupHandle g;  // <lambda_x, eta_x>
  GroupHandle f;  // <lambda_x, rho_x>
};
SolutionGroups solution_groups(const Solution& s);

/// G(X) is transitive.  Requires X regular.
bool is_indecomposable(const QCycleSet& X);

struct Retraction {
  QCycleSet set;
  std::vector<Point> projection;
  /// x ~ y iff sigma_x = sigma_y and delta_x = delta_y.
  Congruence relation;
};

Retraction retract(const QCycleSet& X);
bool is_retractable(const QCycleSet& X);
/// Least k with |Ret^k(X)| = 1; empty when the iteration stalls above 1.
std::optional<std::size_t> multipermutation_level(const QCycleSet& X);
/// X, Ret(X), Ret^2(X), ... up to the first fixed size.
std::vector<QCycleSet> retraction_series(const QCycleSet& X);

struct DisplacementGenerators {
  /// sigma_x sigma_y^-1 and delta_x delta_y^-1, deduplicated.
  std::vector<Permutation> positive;
  /// sigma_x^-1 sigma_y and delta_x^-1 delta_y, deduplicated.
  std::vector<Permutation> negative;
  /// The restricting block, if any (x and y range over it).
  std::optional<std::vector<Point>> block;
};

DisplacementGenerators displacement_generators(const QCycleSet& X);
DisplacementGenerators displacement_generators(const QCycleSet& X, std::span<const Point> block);

/// Every positive generator lies in <negative> and vice versa.
bool check_dis_equality(const QCycleSet& X);

/// Every generator of Dis(X, Delta), for every block Delta of B, fixes all
/// blocks of B.
bool block_dis_in_fixer(const QCycleSet& X, const BlockSystem& B);
/// Same with Dis(X) itself.
bool dis_in_fixer(const QCycleSet& X, const BlockSystem& B);

/// Simplicity decided through block systems of G(X).  Requires X regular
/// and |X| > 1.
bool is_simple_blocks(const QCycleSet& X);
/// Simplicity decided through the congruence lattice.  Requires |X| > 1.
bool is_simple_oracle(const QCycleSet& X);
/// A congruence other than equality and total, if any; the one with the
/// most classes is chosen.
std::optional<Congruence> non_simplicity_witness(const QCycleSet& X);

/// Criterion through maximal block systems.  Requires X regular and
/// indecomposable.
bool has_finite_primitive_level(const QCycleSet& X);

struct PrimitiveLevel {
  /// Empty when no chain of images ends at a primitive q-cycle set.
  std::optional<std::size_t> level;
  /// A longest chain: congruences of X with strictly fewer classes at each
  /// step, the first being equality and the last giving a primitive image.
  std::vector<Congruence> chain;
};

/// Longest chain of proper epimorphic images ending at a primitive one.
/// Requires X regular, indecomposable, and |X| > 1.
PrimitiveLevel primitive_level(const QCycleSet& X);

/// The number of prime factors of |X| with multiplicity.  Requires X
/// indecomposable with abelian G(X).
std::size_t primitive_level_abelian(const QCycleSet& X);

/// Finite level criterion for cycle sets, through block systems with a
/// prime number of blocks.  Requires an indecomposable cycle set.
bool cycle_set_finite_level(const QCycleSet& X);

/// Level 2 criterion for cycle sets.  Requires an indecomposable cycle set
/// of non-prime size.
bool primitive_level_two_check(const QCycleSet& X);

struct FixedPointReport {
  bool has_fixed_point = false;
  /// First (x, y) with x.y = y.
  std::optional<std::pair<Point, Point>> witness;
  bool indecomposable = false;
  /// Evaluated for indecomposable X with |X| > 1.
  std::optional<bool> finite_primitive_level;
  /// Indecomposable with finite level implies no fixed point.
  bool finite_level_rule_holds = true;
  /// |X| = p^2, indecomposable, with a fixed point: declared simple.
  std::optional<bool> declared_simple;
  std::optional<bool> oracle_simple;
  /// A fixed point and an epimorphic image of prime size imply
  /// decomposable.
  bool prime_image_rule_holds = true;

  bool ok() const {
    return finite_level_rule_holds && prime_image_rule_holds &&
           (!declared_simple || declared_simple == oracle_simple);
  }
};

/// Requires a cycle set.
FixedPointReport fixed_point_tests(const QCycleSet& X);

struct Implication {
  std::string name;
  bool hypothesis = false;
  bool conclusion = false;
  bool holds() const { return !hypothesis || conclusion; }
};

/// Items (i)-(vi): squaring maps vs operations for regular G, retractability
/// for regular G, multipermutation for abelian G, imprimitivity of
/// retractable composite sizes, the square-free retraction series, and
/// finite level for multipermutational structures.  Requires X regular.
std::vector<Implication> structure_checks(const QCycleSet& X);

bool is_prime(std::size_t n);
/// Number of prime factors with multiplicity.
std::size_t big_omega(std::size_t n);

}  // namespace qcs
