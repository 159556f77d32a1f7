#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qcycle/perm_group.hpp"
#include "qcycle/permutation.hpp"

namespace qcs {

/// A partition of {0..n-1}, stored canonically: each block sorted, blocks
/// ordered by their minimum.
class BlockSystem {
 public:
  BlockSystem() = default;
  /// Throws InvalidStructure unless `blocks` partitions {0..n-1}.
  BlockSystem(std::size_t degree, std::vector<std::vector<Point>> blocks);
  /// Blocks are the classes of `label` (any labelling).
  static BlockSystem from_labels(std::span<const std::size_t> label);

  std::size_t degree() const noexcept { return block_of_.size(); }
  std::size_t size() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<Point>>& blocks() const noexcept { return blocks_; }
  const std::vector<Point>& block(std::size_t i) const { return blocks_[i]; }
  std::size_t block_of(Point p) const { return block_of_[p]; }
  /// Size of every block when uniform, 0 otherwise.
  std::size_t block_size() const noexcept;
  /// Singletons or a single block.
  bool is_trivial() const noexcept { return size() == 1 || size() == degree(); }

  /// "{{1,4},{2,3}}" with 1-based points.
  std::string to_string() const;
  std::vector<std::vector<Point>> one_based() const;

  friend bool operator==(const BlockSystem& a, const BlockSystem& b) {
    return a.blocks_ == b.blocks_;
  }
  friend auto operator<=>(const BlockSystem& a, const BlockSystem& b) {
    return a.blocks_ <=> b.blocks_;
  }

 private:
  std::vector<std::vector<Point>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Every block of `fine` lies inside a block of `coarse`.
bool refines(const BlockSystem& fine, const BlockSystem& coarse);
/// Finest common coarsening.
BlockSystem join(const BlockSystem& a, const BlockSystem& b);

/// g maps every block onto a block.
bool preserves_blocks(const Permutation& g, const BlockSystem& B);
/// g maps every block onto itself, i.e. g lies in Fix(B).
bool fixes_blocks(const Permutation& g, const BlockSystem& B);
bool is_invariant(const GroupHandle& G, const BlockSystem& B);

/// Finest G-invariant partition in which p and q share a block (union-find
/// closure).  Requires G transitive and p != q.
BlockSystem minimal_block_system(const GroupHandle& G, Point p, Point q);

/// Every block system other than the two trivial partitions, sorted.
/// Requires G transitive.
std::vector<BlockSystem> all_block_systems(const GroupHandle& G);

/// Transitive with no nontrivial block system.  Requires G transitive.
bool is_primitive(const GroupHandle& G);

/// Systems whose induced action on the blocks is primitive.
std::vector<BlockSystem> maximal_block_systems(const GroupHandle& G);

/// The action of G on the blocks of an invariant system, as a group of
/// degree B.size().
GroupHandle block_action(const GroupHandle& G, const BlockSystem& B);

/// Generators of the set-wise stabilizer of block `index`, obtained as
/// Schreier generators of the action on blocks.  B must be G-invariant;
/// transitivity is not required.
std::vector<Permutation> block_stabilizer_generators(const GroupHandle& G,
                                                     const BlockSystem& B,
                                                     std::size_t index);

}  // namespace qcs
