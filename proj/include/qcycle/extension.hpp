#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qcycle/blocks.hpp"
#include "qcycle/structures.hpp"

namespace qcs {

/// Cocycle data over a base of size n with fibre {0..m-1}.  Entries are
/// stored flat: alpha(x, y, s, t) at ((x * n + y) * m + s) * m + t.
class DynamicalPair {
 public:
  DynamicalPair() = default;
  /// Throws InvalidStructure on a shape mismatch, an entry outside the
  /// fibre, or a non-bijective slice t -> alpha(x, y, s, t).  The slices of
  /// alpha_prime may be arbitrary maps; they are bijective exactly when the
  /// extension of a regular base is regular.
  DynamicalPair(std::size_t n, std::size_t m, std::vector<Point> alpha,
                std::vector<Point> alpha_prime);

  std::size_t base_size() const noexcept { return n_; }
  std::size_t fiber_size() const noexcept { return m_; }
  Point alpha(Point x, Point y, Point s, Point t) const { return alpha_[index(x, y, s) + t]; }
  Point alpha_prime(Point x, Point y, Point s, Point t) const {
    return alpha_prime_[index(x, y, s) + t];
  }
  std::span<const Point> alpha_slice(Point x, Point y, Point s) const {
    return {alpha_.data() + index(x, y, s), m_};
  }
  std::span<const Point> alpha_prime_slice(Point x, Point y, Point s) const {
    return {alpha_prime_.data() + index(x, y, s), m_};
  }
  const std::vector<Point>& alpha_table() const noexcept { return alpha_; }
  const std::vector<Point>& alpha_prime_table() const noexcept { return alpha_prime_; }
  bool alpha_prime_bijective() const;

  friend bool operator==(const DynamicalPair&, const DynamicalPair&) = default;

 private:
  std::size_t index(Point x, Point y, Point s) const { return ((x * n_ + y) * m_ + s) * m_; }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Point> alpha_;
  std::vector<Point> alpha_prime_;
};

struct CocycleViolation {
  int identity;  // 1, 2 or 3
  Point x, y, z, s, t, u;
  friend bool operator==(const CocycleViolation&, const CocycleViolation&) = default;
};

/// All three cocycle identities over every (x, y, z, s, t, u), ordered by
/// (identity, x, y, z, s, t, u).  Throws PreconditionError on a size
/// mismatch with X.
std::vector<CocycleViolation> check_dynamical_pair(const QCycleSet& X, const DynamicalPair& P,
                                                   std::size_t max_violations = SIZE_MAX);

/// Carrier X x S with (x, s) stored at x * m + s.  Throws InvalidStructure
/// when the pair fails the cocycle identities.
QCycleSet build_extension(const QCycleSet& X, const DynamicalPair& P);

/// {{x} x S : x in X}.  Throws PreconditionError when the extension is
/// decomposable.
BlockSystem extension_blocks(const QCycleSet& X, const DynamicalPair& P);

/// The set-wise stabilizer of {x} x S in G(X x S) acts transitively on it.
bool stabilizer_transitive_on_fiber(const QCycleSet& X, const DynamicalPair& P, Point x);

/// X indecomposable and some fibre stabilizer transitive.
bool extension_indecomposability_criterion(const QCycleSet& X, const DynamicalPair& P);

/// Pair with alpha(x, y, s, t) = alpha_prime(x, y, s, t) = t.
DynamicalPair trivial_pair(std::size_t n, std::size_t m);

struct ExtensionData {
  QCycleSet base;
  DynamicalPair pair;
};

/// Named families: "D1"; "D2" with k >= 1; "D3" with p prime; "SF" with
/// m >= 1 (fibre (Z/2)^m).  Throws PreconditionError on an unknown name or
/// a bad parameter.
ExtensionData paper_extension(const std::string& name, std::size_t param = 0);

}  // namespace qcs
