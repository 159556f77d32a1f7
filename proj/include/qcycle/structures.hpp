#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcycle/permutation.hpp"

namespace qcs {

using Rows = std::vector<std::vector<Point>>;

/// A finite set with two operation tables.  Row x of `dot` is sigma_x
/// (y -> x.y) and must be a bijection; row x of `colon` is delta_x
/// (y -> x:y) and is bijective exactly when the q-cycle set is regular.
///
/// Construction validates shape and bijectivity of the dot rows only; the
/// identities (q1)-(q3) are checked separately by check_q_axioms so that
/// broken tables can still be represented and diagnosed.
class QCycleSet {
 public:
  QCycleSet() = default;

  /// Flat row-major tables of size n*n.  Throws InvalidStructure on a shape
  /// mismatch, an out-of-range entry, or a non-bijective dot row.
  QCycleSet(std::size_t n, std::vector<Point> dot, std::vector<Point> colon);

  static QCycleSet from_rows(const Rows& dot, const Rows& colon);

  /// sigma_x and delta_x given as 1-based cycle notation; an empty `delta`
  /// means delta_x = id for every x.
  static QCycleSet from_cycles(const std::vector<std::string>& sigma,
                               const std::vector<std::string>& delta,
                               std::size_t n);

  /// The cycle set whose operations coincide.
  static QCycleSet cycle_set(const Rows& dot) { return from_rows(dot, dot); }

  std::size_t size() const noexcept { return n_; }
  Point dot(Point x, Point y) const { return dot_[x * n_ + y]; }
  Point colon(Point x, Point y) const { return colon_[x * n_ + y]; }
  std::span<const Point> dot_row(Point x) const {
    return {dot_.data() + x * n_, n_};
  }
  std::span<const Point> colon_row(Point x) const {
    return {colon_.data() + x * n_, n_};
  }
  const std::vector<Point>& dot_table() const noexcept { return dot_; }
  const std::vector<Point>& colon_table() const noexcept { return colon_; }

  Permutation sigma(Point x) const;
  /// Throws PreconditionError if delta_x is not bijective.
  Permutation delta(Point x) const;

  bool is_cycle_set() const noexcept { return dot_ == colon_; }

  /// The isomorphic copy obtained by renaming every point x to p(x).
  QCycleSet relabel(const Permutation& p) const;

  friend bool operator==(const QCycleSet&, const QCycleSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Point> dot_;
  std::vector<Point> colon_;
};

enum class Axiom { q1 = 1, q2 = 2, q3 = 3 };

struct AxiomViolation {
  Axiom axiom;
  Point x, y, z;
  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

struct AxiomReport {
  /// Shape problems and non-bijective dot rows; when non-empty the identities
  /// were not evaluated.
  std::vector<std::string> malformed;
  /// Ordered lexicographically by (axiom, x, y, z).
  std::vector<AxiomViolation> violations;

  bool ok() const noexcept { return malformed.empty() && violations.empty(); }
};

AxiomReport check_q_axioms(const QCycleSet& X, std::size_t max_violations = SIZE_MAX);

/// Same check on raw row tables, reporting malformed input instead of
/// throwing.
AxiomReport check_q_axioms(const Rows& dot, const Rows& colon,
                           std::size_t max_violations = SIZE_MAX);

bool is_regular(const QCycleSet& X);

struct SquaringMaps {
  std::vector<Point> q;        // x -> x.x
  std::vector<Point> q_prime;  // x -> x:x
};

SquaringMaps squaring_maps(const QCycleSet& X);
bool is_nondegenerate(const QCycleSet& X);
bool is_square_free(const QCycleSet& X);
/// delta_x = id for every x.
bool is_left_self_distributive(const QCycleSet& X);
/// sigma_x = id for every x.
bool is_right_self_distributive(const QCycleSet& X);

/// The pair map (x, y) -> (x.y, y:x), indexed by x*n + y, encoded the same
/// way.
struct PairMap {
  std::vector<std::size_t> images;
  bool bijective = false;
};

PairMap delta_pair_map(const QCycleSet& X);

/// A finite set with maps lambda_x and rho_x; r(x, y) = (lambda_x(y), rho_y(x)).
/// Construction rejects degenerate data.
class Solution {
 public:
  Solution() = default;
  Solution(std::vector<Permutation> lambda, std::vector<Permutation> rho);

  /// Throws InvalidStructure naming the first non-bijective row.
  static Solution from_rows(const Rows& lambda, const Rows& rho);

  std::size_t size() const noexcept { return lambda_.size(); }
  const Permutation& lambda(Point x) const { return lambda_[x]; }
  const Permutation& rho(Point x) const { return rho_[x]; }
  const std::vector<Permutation>& lambdas() const noexcept { return lambda_; }
  const std::vector<Permutation>& rhos() const noexcept { return rho_; }

  std::pair<Point, Point> operator()(Point x, Point y) const {
    return {lambda_[x](y), rho_[y](x)};
  }

  friend bool operator==(const Solution&, const Solution&) = default;

 private:
  std::vector<Permutation> lambda_;
  std::vector<Permutation> rho_;
};

/// First triple (x, y, z) where the braid relation fails.
std::optional<std::array<Point, 3>> yang_baxter_violation(const Solution& s);
bool check_yang_baxter(const Solution& s);
bool is_bijective_map(const Solution& s);
bool is_involutive(const Solution& s);
/// All lambda_x and rho_x bijective; applies to raw tables.
bool is_nondegenerate_solution(const Rows& lambda, const Rows& rho);

/// r(x, y) = (sigma_x^-1(y), delta_{sigma_x^-1(y)}(x)).  Requires X regular.
Solution to_solution(const QCycleSet& X);

/// x.y = lambda_x^-1(y), x:y = rho_{lambda_y^-1(x)}(y).  Rejects solutions that
/// fail the braid relation or whose map r is not bijective.
QCycleSet from_solution(const Solution& s);

/// eta_x(y) = rho_{lambda_y^-1(x)}(y).
Permutation eta_map(const Solution& s, Point x);

/// r'(x, y) = (y, lambda_y rho_{lambda_x^-1(y)}(x)).
Solution derived_solution(const Solution& s);

}  // namespace qcs
