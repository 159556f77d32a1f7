#include "qcycle/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <optional>
#include <set>

#include "qcycle/error.hpp"

namespace qcs {

namespace {

struct Level {
  Point base = 0;
  std::vector<Permutation> generators;
  // transversal[beta] maps base to beta; empty outside the basic orbit.
  std::vector<std::optional<Permutation>> transversal;
  std::vector<Point> orbit;
};

void rebuild_orbit(Level& level, std::size_t degree) {
  level.transversal.assign(degree, std::nullopt);
  level.orbit.clear();
  level.transversal[level.base] = Permutation::identity(degree);
  level.orbit.push_back(level.base);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    Point beta = level.orbit[head];
    for (const auto& s : level.generators) {
      Point image = s(beta);
      if (!level.transversal[image]) {
        level.transversal[image] = s * *level.transversal[beta];
        level.orbit.push_back(image);
      }
    }
  }
}

Point first_moved_point(const Permutation& g) {
  for (Point p = 0; p < g.degree(); ++p) {
    if (g(p) != p) return p;
  }
  return 0;
}

}  // namespace

struct GroupHandle::Chain {
  std::vector<Level> levels;

  // Strips g through levels [from, end); returns the residue and the level
  // where sifting stopped (levels.size() if it went through).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < levels.size(); ++l) {
      Point beta = g(levels[l].base);
      const auto& u = levels[l].transversal[beta];
      if (!u) return {std::move(g), l};
      g = u->inverse() * g;
    }
    return {std::move(g), levels.size()};
  }
};

struct GroupHandle::Lazy {
  std::once_flag once;
  Chain chain;
};

GroupHandle::GroupHandle(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), lazy_(std::make_shared<Lazy>()) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      throw PreconditionError("generator degree " + std::to_string(g.degree()) +
                              " differs from group degree " + std::to_string(degree_));
    }
  }
}

const GroupHandle::Chain& GroupHandle::chain() const {
  std::call_once(lazy_->once, [this] {
    Chain& chain = lazy_->chain;
    std::vector<Permutation> gens;
    for (const auto& g : generators_) {
      if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) {
        gens.push_back(g);
      }
    }

    auto fixes_bases = [&](const Permutation& g, std::size_t upto) {
      for (std::size_t l = 0; l < upto; ++l) {
        if (g(chain.levels[l].base) != chain.levels[l].base) return false;
      }
      return true;
    };

    for (const auto& g : gens) {
      if (fixes_bases(g, chain.levels.size())) {
        Level level;
        level.base = first_moved_point(g);
        chain.levels.push_back(std::move(level));
      }
    }
    std::sort(chain.levels.begin(), chain.levels.end(),
              [](const Level& a, const Level& b) { return a.base < b.base; });
    for (std::size_t l = 0; l < chain.levels.size(); ++l) {
      for (const auto& g : gens) {
        if (fixes_bases(g, l)) chain.levels[l].generators.push_back(g);
      }
      rebuild_orbit(chain.levels[l], degree_);
    }

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain.levels.size()) - 1;
    while (i >= 0) {
      bool restarted = false;
      Level& level = chain.levels[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; !restarted && k < level.orbit.size(); ++k) {
        Point beta = level.orbit[k];
        for (std::size_t si = 0; si < level.generators.size(); ++si) {
          const Permutation s = level.generators[si];
          Permutation schreier =
              level.transversal[s(beta)]->inverse() * s * *level.transversal[beta];
          auto [residue, stop] = chain.sift(std::move(schreier), static_cast<std::size_t>(i) + 1);
          if (stop == chain.levels.size() && residue.is_identity()) continue;
          if (stop == chain.levels.size()) {
            Level fresh;
            fresh.base = first_moved_point(residue);
            chain.levels.push_back(std::move(fresh));
          }
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
            chain.levels[l].generators.push_back(residue);
            rebuild_orbit(chain.levels[l], degree_);
          }
          i = static_cast<std::ptrdiff_t>(stop);
          restarted = true;
          break;
        }
      }
      if (!restarted) --i;
    }
  });
  return lazy_->chain;
}

std::vector<Point> GroupHandle::orbit(Point p) const {
  if (p >= degree_) throw PreconditionError("point outside the group's degree");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> out{p};
  seen[p] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators_) {
      Point q = g(out[head]);
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> GroupHandle::orbits() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(degree_, false);
  for (Point p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto o = orbit(p);
    for (Point q : o) seen[q] = true;
    result.push_back(std::move(o));
  }
  return result;
}

bool GroupHandle::is_transitive() const {
  return degree_ > 0 && orbit(0).size() == degree_;
}

GroupOrder GroupHandle::order() const {
  GroupOrder result = 1;
  for (const auto& level : chain().levels) result *= level.orbit.size();
  return result;
}

std::string GroupHandle::order_string() const { return order().str(); }

bool GroupHandle::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, stop] = chain().sift(g, 0);
  return stop == chain().levels.size() && residue.is_identity();
}

bool GroupHandle::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
    }
  }
  return true;
}

bool GroupHandle::is_regular_action() const {
  return is_transitive() && order() == degree_;
}

std::vector<Point> GroupHandle::base() const {
  std::vector<Point> out;
  for (const auto& level : chain().levels) out.push_back(level.base);
  return out;
}

std::vector<std::size_t> GroupHandle::fundamental_orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& level : chain().levels) out.push_back(level.orbit.size());
  return out;
}

std::vector<Permutation> GroupHandle::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& level : chain().levels) {
    for (const auto& g : level.generators) {
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  }
  return out;
}

std::vector<Permutation> GroupHandle::elements(std::size_t bound) const {
  if (order() > bound) {
    throw BoundExceeded("group of order " + order_string() +
                        " exceeds the element materialization bound " +
                        std::to_string(bound));
  }
  std::set<Permutation> seen;
  std::vector<Permutation> out{Permutation::identity(degree_)};
  seen.insert(out.front());
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators_) {
      Permutation next = g * out[head];
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace qcs
