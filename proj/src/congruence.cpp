#include "qcycle/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "qcycle/error.hpp"
#include "union_find.hpp"

namespace qcs {

Congruence::Congruence(std::span<const std::size_t> label) : label_(label.size()) {
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t i = 0; i < label.size(); ++i) {
    auto [it, fresh] = renumber.emplace(label[i], renumber.size());
    label_[i] = it->second;
  }
  class_count_ = renumber.size();
}

Congruence Congruence::equality(std::size_t n) {
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  return Congruence(label);
}

Congruence Congruence::total(std::size_t n) {
  std::vector<std::size_t> label(n, 0);
  return Congruence(label);
}

std::vector<std::vector<Point>> Congruence::classes() const {
  std::vector<std::vector<Point>> out(class_count_);
  for (std::size_t i = 0; i < label_.size(); ++i) out[label_[i]].push_back(static_cast<Point>(i));
  return out;
}

std::vector<std::vector<Point>> Congruence::one_based() const {
  auto out = classes();
  for (auto& c : out) {
    for (auto& p : c) ++p;
  }
  return out;
}

std::string Congruence::to_string() const {
  std::ostringstream out;
  out << '{';
  auto cls = classes();
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (i) out << ',';
    out << '{';
    for (std::size_t j = 0; j < cls[i].size(); ++j) {
      if (j) out << ',';
      out << cls[i][j] + 1;
    }
    out << '}';
  }
  out << '}';
  return out.str();
}

namespace {

Congruence from_union_find(detail::UnionFind& uf) {
  auto labels = uf.labels();
  return Congruence(labels);
}

// Closes the pairs already merged in `uf` (and listed in `pending`) under
// left and right translations by both operations.
void close(const QCycleSet& X, detail::UnionFind& uf,
           std::deque<std::pair<Point, Point>>& pending) {
  const Point n = static_cast<Point>(X.size());
  auto merge = [&](Point a, Point b) {
    if (uf.unite(a, b)) pending.emplace_back(a, b);
  };
  while (!pending.empty()) {
    auto [u, v] = pending.front();
    pending.pop_front();
    for (Point z = 0; z < n; ++z) {
      merge(X.dot(u, z), X.dot(v, z));
      merge(X.dot(z, u), X.dot(z, v));
      merge(X.colon(u, z), X.colon(v, z));
      merge(X.colon(z, u), X.colon(z, v));
    }
  }
}

}  // namespace

Congruence principal_congruence(const QCycleSet& X, Point a, Point b) {
  if (a >= X.size() || b >= X.size()) throw PreconditionError("point outside the carrier");
  detail::UnionFind uf(X.size());
  std::deque<std::pair<Point, Point>> pending;
  if (uf.unite(a, b)) pending.emplace_back(a, b);
  close(X, uf, pending);
  return from_union_find(uf);
}

bool is_compatible(const QCycleSet& X, const Congruence& theta) {
  if (theta.size() != X.size()) return false;
  const Point n = static_cast<Point>(X.size());
  // Checking one argument at a time suffices: a~b, c~d gives
  // a.c ~ b.c ~ b.d.
  for (Point a = 0; a < n; ++a) {
    for (Point b = a + 1; b < n; ++b) {
      if (!theta.related(a, b)) continue;
      for (Point z = 0; z < n; ++z) {
        if (!theta.related(X.dot(a, z), X.dot(b, z)) ||
            !theta.related(X.dot(z, a), X.dot(z, b)) ||
            !theta.related(X.colon(a, z), X.colon(b, z)) ||
            !theta.related(X.colon(z, a), X.colon(z, b))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool refines(const Congruence& fine, const Congruence& coarse) {
  if (fine.size() != coarse.size()) return false;
  std::vector<std::size_t> image(fine.class_count(), SIZE_MAX);
  for (Point x = 0; x < fine.size(); ++x) {
    std::size_t& target = image[fine.class_of(x)];
    if (target == SIZE_MAX) target = coarse.class_of(x);
    if (target != coarse.class_of(x)) return false;
  }
  return true;
}

Congruence join(const Congruence& a, const Congruence& b) {
  if (a.size() != b.size()) throw PreconditionError("congruences on different carriers");
  detail::UnionFind uf(a.size());
  for (const auto* theta : {&a, &b}) {
    std::vector<Point> first(theta->class_count(), 0);
    std::vector<bool> seen(theta->class_count(), false);
    for (Point x = 0; x < theta->size(); ++x) {
      std::size_t c = theta->class_of(x);
      if (!seen[c]) {
        seen[c] = true;
        first[c] = x;
      } else {
        uf.unite(first[c], x);
      }
    }
  }
  return from_union_find(uf);
}

Congruence meet(const Congruence& a, const Congruence& b) {
  if (a.size() != b.size()) throw PreconditionError("congruences on different carriers");
  std::vector<std::size_t> label(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    label[x] = a.class_of(static_cast<Point>(x)) * b.class_count() +
               b.class_of(static_cast<Point>(x));
  }
  return Congruence(label);
}

std::vector<Congruence> all_congruences(const QCycleSet& X) {
  const Point n = static_cast<Point>(X.size());
  std::set<Congruence> principal;
  for (Point a = 0; a < n; ++a) {
    for (Point b = a + 1; b < n; ++b) principal.insert(principal_congruence(X, a, b));
  }
  std::set<Congruence> found(principal.begin(), principal.end());
  found.insert(Congruence::equality(n));
  std::deque<Congruence> pending(principal.begin(), principal.end());
  while (!pending.empty()) {
    Congruence current = std::move(pending.front());
    pending.pop_front();
    for (const auto& p : principal) {
      auto joined = join(current, p);
      if (found.insert(joined).second) pending.push_back(std::move(joined));
    }
  }
  std::vector<Congruence> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const Congruence& a, const Congruence& b) {
    return a.class_count() > b.class_count();
  });
  return out;
}

Quotient quotient(const QCycleSet& X, const Congruence& theta) {
  if (!is_compatible(X, theta)) {
    throw PreconditionError("partition " + theta.to_string() + " is not a congruence");
  }
  const std::size_t m = theta.class_count();
  std::vector<Point> rep(m);
  std::vector<bool> seen(m, false);
  for (Point x = 0; x < X.size(); ++x) {
    std::size_t c = theta.class_of(x);
    if (!seen[c]) {
      seen[c] = true;
      rep[c] = x;
    }
  }
  std::vector<Point> dot(m * m), colon(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      dot[i * m + j] = static_cast<Point>(theta.class_of(X.dot(rep[i], rep[j])));
      colon[i * m + j] = static_cast<Point>(theta.class_of(X.colon(rep[i], rep[j])));
    }
  }
  Quotient out{QCycleSet(m, std::move(dot), std::move(colon)), {}};
  out.projection.reserve(X.size());
  for (std::size_t c : theta.labels()) out.projection.push_back(static_cast<Point>(c));
  return out;
}

bool is_homomorphism(const QCycleSet& X, const QCycleSet& Y, std::span<const Point> f) {
  if (f.size() != X.size()) return false;
  for (Point v : f) {
    if (v >= Y.size()) return false;
  }
  for (Point x = 0; x < X.size(); ++x) {
    for (Point y = 0; y < X.size(); ++y) {
      if (f[X.dot(x, y)] != Y.dot(f[x], f[y])) return false;
      if (f[X.colon(x, y)] != Y.colon(f[x], f[y])) return false;
    }
  }
  return true;
}

std::size_t covering_fiber_size(std::size_t domain_size, std::span<const Point> f) {
  std::map<Point, std::size_t> fibre;
  for (std::size_t x = 0; x < domain_size && x < f.size(); ++x) ++fibre[f[x]];
  if (fibre.empty()) return 0;
  std::size_t size = fibre.begin()->second;
  for (const auto& [_, count] : fibre) {
    if (count != size) return 0;
  }
  return size;
}

bool is_covering_map(const QCycleSet& X, const QCycleSet& Y, std::span<const Point> f) {
  if (!is_homomorphism(X, Y, f)) throw PreconditionError("map is not a homomorphism");
  std::vector<bool> hit(Y.size(), false);
  for (Point v : f) hit[v] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
    throw PreconditionError("map is not surjective");
  }
  return covering_fiber_size(X.size(), f) != 0;
}

namespace {

constexpr Point kUnset = static_cast<Point>(-1);

// Cycle type for a bijective row; for any other map, a marker followed by
// the sorted fibre sizes.
std::vector<std::size_t> map_type(std::span<const Point> row) {
  if (is_bijection(row)) {
    return Permutation(std::vector<Point>(row.begin(), row.end())).cycle_type();
  }
  std::vector<std::size_t> fibre(row.size(), 0);
  for (Point v : row) ++fibre[v];
  std::sort(fibre.begin(), fibre.end());
  fibre.insert(fibre.begin(), SIZE_MAX);
  return fibre;
}

std::vector<std::vector<std::size_t>> signatures(const QCycleSet& X) {
  std::vector<std::vector<std::size_t>> out;
  for (Point x = 0; x < X.size(); ++x) {
    auto sig = map_type(X.dot_row(x));
    auto d = map_type(X.colon_row(x));
    sig.push_back(SIZE_MAX - 1);
    sig.insert(sig.end(), d.begin(), d.end());
    sig.push_back(X.dot(x, x) == x);
    sig.push_back(X.colon(x, x) == x);
    out.push_back(std::move(sig));
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const QCycleSet& X, const QCycleSet& Y)
      : X_(X), Y_(Y), n_(static_cast<Point>(X.size())), f_(n_, kUnset), finv_(n_, kUnset),
        sx_(signatures(X)), sy_(signatures(Y)) {}

  bool signatures_match() const {
    auto a = sx_;
    auto b = sy_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool search() {
    Point x = 0;
    while (x < n_ && f_[x] != kUnset) ++x;
    if (x == n_) return true;
    for (Point y = 0; y < n_; ++y) {
      if (finv_[y] != kUnset || sx_[x] != sy_[y]) continue;
      std::size_t mark = trail_.size();
      if (assign(x, y) && propagate(mark) && search()) return true;
      undo(mark);
    }
    return false;
  }

  Permutation result() const { return Permutation(f_); }

 private:
  bool assign(Point x, Point y) {
    if (f_[x] != kUnset) return f_[x] == y;
    if (finv_[y] != kUnset || sx_[x] != sy_[y]) return false;
    f_[x] = y;
    finv_[y] = x;
    trail_.push_back(x);
    return true;
  }

  bool propagate(std::size_t from) {
    for (std::size_t k = from; k < trail_.size(); ++k) {
      Point x = trail_[k];
      for (Point a = 0; a < n_; ++a) {
        if (f_[a] == kUnset) continue;
        if (!assign(X_.dot(x, a), Y_.dot(f_[x], f_[a])) ||
            !assign(X_.dot(a, x), Y_.dot(f_[a], f_[x])) ||
            !assign(X_.colon(x, a), Y_.colon(f_[x], f_[a])) ||
            !assign(X_.colon(a, x), Y_.colon(f_[a], f_[x]))) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Point x = trail_.back();
      trail_.pop_back();
      finv_[f_[x]] = kUnset;
      f_[x] = kUnset;
    }
  }

  const QCycleSet& X_;
  const QCycleSet& Y_;
  Point n_;
  std::vector<Point> f_, finv_;
  std::vector<Point> trail_;
  std::vector<std::vector<std::size_t>> sx_, sy_;
};

}  // namespace

std::optional<Permutation> is_isomorphic(const QCycleSet& X, const QCycleSet& Y) {
  if (X.size() != Y.size() || X.is_cycle_set() != Y.is_cycle_set()) return std::nullopt;
  if (X.size() == 0) return Permutation::identity(0);
  IsoSearch search(X, Y);
  if (!search.signatures_match() || !search.search()) return std::nullopt;
  return search.result();
}

std::vector<Image> epimorphic_images(const QCycleSet& X) {
  std::vector<Image> out;
  for (auto& theta : all_congruences(X)) {
    if (theta.is_equality() || theta.is_total()) continue;
    auto q = quotient(X, theta).set;
    bool duplicate = std::any_of(out.begin(), out.end(), [&](const Image& seen) {
      return seen.set.size() == q.size() && is_isomorphic(seen.set, q).has_value();
    });
    if (!duplicate) out.push_back({std::move(q), std::move(theta)});
  }
  return out;
}

BlockSystem to_block_system(const Congruence& theta) {
  return BlockSystem::from_labels(theta.labels());
}

}  // namespace qcs
