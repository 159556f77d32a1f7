#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcs {

/// A point of a finite carrier {0, ..., n-1}.
using Point = std::uint32_t;

/// Returns true if `images` is a bijection of {0, ..., images.size()-1}.
bool is_bijection(std::span<const Point> images);

/// A bijection of {0, ..., n-1}, stored as its image list.
///
/// Products follow the right-to-left convention: (g * h)(x) = g(h(x)).
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidStructure if `images` is not a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Parses disjoint cycles with 1-based points, e.g. "(1 3 4 2)(5 6)".
  /// Unlisted points are fixed; "()" or an empty string is the identity.
  static Permutation from_cycles(std::string_view cycles, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::size_t order() const;

  /// Lengths of all cycles (fixed points included), sorted ascending.
  std::vector<std::size_t> cycle_type() const;
  std::size_t fixed_point_count() const noexcept;

  /// 1-based cycle notation with fixed points omitted; "()" for the identity.
  std::string to_cycles() const;

  /// Image of a set of points, sorted.
  std::vector<Point> image_of(std::span<const Point> set) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation& g, const Permutation& h);

  std::vector<Point> images_;
};

/// x -> g(h(x)). Throws PreconditionError on degree mismatch.
Permutation compose(const Permutation& g, const Permutation& h);

inline Permutation operator*(const Permutation& g, const Permutation& h) {
  return compose(g, h);
}

}  // namespace qcs
