#include "qcycle/blocks.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "qcycle/error.hpp"
#include "union_find.hpp"

namespace qcs {

BlockSystem::BlockSystem(std::size_t degree, std::vector<std::vector<Point>> blocks)
    : blocks_(std::move(blocks)), block_of_(degree, SIZE_MAX) {
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidStructure("empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (Point p : blocks_[i]) {
      if (p >= degree || block_of_[p] != SIZE_MAX) {
        throw InvalidStructure("blocks do not partition the carrier");
      }
      block_of_[p] = i;
    }
  }
  for (std::size_t b : block_of_) {
    if (b == SIZE_MAX) throw InvalidStructure("blocks do not cover the carrier");
  }
}

BlockSystem BlockSystem::from_labels(std::span<const std::size_t> label) {
  std::map<std::size_t, std::vector<Point>> classes;
  for (std::size_t i = 0; i < label.size(); ++i) {
    classes[label[i]].push_back(static_cast<Point>(i));
  }
  std::vector<std::vector<Point>> blocks;
  for (auto& [_, members] : classes) blocks.push_back(std::move(members));
  return BlockSystem(label.size(), std::move(blocks));
}

std::size_t BlockSystem::block_size() const noexcept {
  if (blocks_.empty()) return 0;
  std::size_t s = blocks_.front().size();
  for (const auto& b : blocks_) {
    if (b.size() != s) return 0;
  }
  return s;
}

std::string BlockSystem::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out << ',';
    out << '{';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) out << ',';
      out << blocks_[i][j] + 1;
    }
    out << '}';
  }
  out << '}';
  return out.str();
}

std::vector<std::vector<Point>> BlockSystem::one_based() const {
  auto out = blocks_;
  for (auto& b : out) {
    for (auto& p : b) ++p;
  }
  return out;
}

bool refines(const BlockSystem& fine, const BlockSystem& coarse) {
  if (fine.degree() != coarse.degree()) return false;
  for (const auto& b : fine.blocks()) {
    std::size_t target = coarse.block_of(b.front());
    for (Point p : b) {
      if (coarse.block_of(p) != target) return false;
    }
  }
  return true;
}

BlockSystem join(const BlockSystem& a, const BlockSystem& b) {
  if (a.degree() != b.degree()) throw PreconditionError("block systems of different degree");
  detail::UnionFind uf(a.degree());
  for (const auto* sys : {&a, &b}) {
    for (const auto& block : sys->blocks()) {
      for (Point p : block) uf.unite(block.front(), p);
    }
  }
  auto labels = uf.labels();
  return BlockSystem::from_labels(labels);
}

bool preserves_blocks(const Permutation& g, const BlockSystem& B) {
  if (g.degree() != B.degree()) throw PreconditionError("permutation and block system degrees differ");
  for (const auto& block : B.blocks()) {
    std::size_t target = B.block_of(g(block.front()));
    if (B.block(target).size() != block.size()) return false;
    for (Point p : block) {
      if (B.block_of(g(p)) != target) return false;
    }
  }
  return true;
}

bool fixes_blocks(const Permutation& g, const BlockSystem& B) {
  if (g.degree() != B.degree()) throw PreconditionError("permutation and block system degrees differ");
  for (Point p = 0; p < g.degree(); ++p) {
    if (B.block_of(g(p)) != B.block_of(p)) return false;
  }
  return true;
}

bool is_invariant(const GroupHandle& G, const BlockSystem& B) {
  for (const auto& g : G.generators()) {
    if (!preserves_blocks(g, B)) return false;
  }
  return true;
}

namespace {

void require_transitive(const GroupHandle& G, const char* what) {
  if (!G.is_transitive()) {
    throw PreconditionError(std::string(what) + " requires a transitive group");
  }
}

BlockSystem minimal_block_system_unchecked(const GroupHandle& G, Point p, Point q) {
  detail::UnionFind uf(G.degree());
  std::deque<std::pair<Point, Point>> pending;
  if (uf.unite(p, q)) pending.emplace_back(p, q);
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    for (const auto& g : G.generators()) {
      Point ga = g(a);
      Point gb = g(b);
      if (uf.unite(ga, gb)) pending.emplace_back(ga, gb);
    }
  }
  auto labels = uf.labels();
  return BlockSystem::from_labels(labels);
}

}  // namespace

BlockSystem minimal_block_system(const GroupHandle& G, Point p, Point q) {
  require_transitive(G, "minimal_block_system");
  if (p >= G.degree() || q >= G.degree() || p == q) {
    throw PreconditionError("minimal_block_system needs two distinct points of the carrier");
  }
  return minimal_block_system_unchecked(G, p, q);
}

std::vector<BlockSystem> all_block_systems(const GroupHandle& G) {
  require_transitive(G, "all_block_systems");
  const std::size_t n = G.degree();
  std::vector<BlockSystem> minimal;
  for (Point beta = 1; beta < n; ++beta) {
    auto sys = minimal_block_system_unchecked(G, 0, beta);
    if (sys.size() == 1) continue;
    if (std::find(minimal.begin(), minimal.end(), sys) == minimal.end()) {
      minimal.push_back(std::move(sys));
    }
  }
  std::set<BlockSystem> found(minimal.begin(), minimal.end());
  std::deque<BlockSystem> pending(minimal.begin(), minimal.end());
  while (!pending.empty()) {
    BlockSystem current = std::move(pending.front());
    pending.pop_front();
    for (const auto& m : minimal) {
      auto joined = join(current, m);
      if (joined.size() == 1) continue;
      if (found.insert(joined).second) pending.push_back(std::move(joined));
    }
  }
  return {found.begin(), found.end()};
}

bool is_primitive(const GroupHandle& G) {
  require_transitive(G, "is_primitive");
  for (Point beta = 1; beta < G.degree(); ++beta) {
    if (minimal_block_system_unchecked(G, 0, beta).size() != 1) return false;
  }
  return true;
}

GroupHandle block_action(const GroupHandle& G, const BlockSystem& B) {
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) {
    if (!preserves_blocks(g, B)) {
      throw PreconditionError("block system is not invariant under the group");
    }
    std::vector<Point> images(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) {
      images[i] = static_cast<Point>(B.block_of(g(B.block(i).front())));
    }
    gens.emplace_back(std::move(images));
  }
  return GroupHandle(B.size(), std::move(gens));
}

std::vector<BlockSystem> maximal_block_systems(const GroupHandle& G) {
  std::vector<BlockSystem> out;
  for (auto& sys : all_block_systems(G)) {
    if (is_primitive(block_action(G, sys))) out.push_back(std::move(sys));
  }
  return out;
}

std::vector<Permutation> block_stabilizer_generators(const GroupHandle& G,
                                                     const BlockSystem& B,
                                                     std::size_t index) {
  if (index >= B.size()) throw PreconditionError("block index out of range");
  if (!is_invariant(G, B)) {
    throw PreconditionError("block system is not invariant under the group");
  }
  const std::size_t n = G.degree();
  // transversal[j] maps block `index` onto block j.
  std::vector<std::optional<Permutation>> transversal(B.size());
  transversal[index] = Permutation::identity(n);
  std::vector<std::size_t> orbit{index};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    std::size_t j = orbit[head];
    for (const auto& g : G.generators()) {
      std::size_t k = B.block_of(g(B.block(j).front()));
      if (!transversal[k]) {
        transversal[k] = g * *transversal[j];
        orbit.push_back(k);
      }
    }
  }
  std::vector<Permutation> out;
  for (std::size_t j : orbit) {
    for (const auto& g : G.generators()) {
      std::size_t k = B.block_of(g(B.block(j).front()));
      Permutation s = transversal[k]->inverse() * g * *transversal[j];
      if (!s.is_identity() && std::find(out.begin(), out.end(), s) == out.end()) {
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

}  // namespace qcs
