#include "qcycle/canonical.hpp"

namespace qcs {

namespace {

constexpr Point kUnset = static_cast<Point>(-1);

// Branch and bound over labelings.  New labels are handed out in order of
// first appearance in the key, so a choice is only needed when a cell refers
// to a row or column label that no point carries yet; every other unseen
// value takes the next free label, which is always the smallest option.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const QCycleSet& X)
      : X_(X),
        n_(static_cast<Point>(X.size())),
        tables_(X.is_cycle_set() ? 1 : 2),
        total_(static_cast<std::size_t>(n_) * n_ * tables_),
        label_(n_, kUnset),
        point_(n_, kUnset),
        best_(total_, 0) {}

  Permutation run() {
    dfs(0, false);
    return Permutation(best_label_);
  }

 private:
  Point entry(std::size_t t, Point x, Point y) const {
    return t == 0 ? X_.dot(x, y) : X_.colon(x, y);
  }

  void give_label(Point v) {
    label_[v] = labelled_;
    point_[labelled_++] = v;
  }

  void take_label(Point v) {
    --labelled_;
    point_[labelled_] = kUnset;
    label_[v] = kUnset;
  }

  void dfs(std::size_t c, bool less) {
    std::vector<Point> given;
    auto undo = [&] {
      for (auto it = given.rbegin(); it != given.rend(); ++it) take_label(*it);
    };
    while (c < total_) {
      const Point i = static_cast<Point>(c / (static_cast<std::size_t>(n_) * tables_));
      const std::size_t t = (c / n_) % tables_;
      const Point j = static_cast<Point>(c % n_);
      if (j >= labelled_) {
        bool first = true;
        for (Point a = 0; a < n_; ++a) {
          if (label_[a] != kUnset) continue;
          give_label(a);
          dfs(c, first && less);
          take_label(a);
          first = false;
        }
        undo();
        return;
      }
      const Point v = entry(t, point_[i], point_[j]);
      if (label_[v] == kUnset) {
        give_label(v);
        given.push_back(v);
      }
      const Point value = label_[v];
      if (!less) {
        if (have_best_ && value > best_[c]) {
          undo();
          return;
        }
        if (!have_best_ || value < best_[c]) less = true;
      }
      if (less) best_[c] = value;
      ++c;
    }
    if (less) {
      have_best_ = true;
      best_label_ = label_;
    }
    undo();
  }

  const QCycleSet& X_;
  Point n_;
  std::size_t tables_;
  std::size_t total_;
  std::vector<Point> label_;  // old point -> new label
  std::vector<Point> point_;  // new label -> old point
  Point labelled_ = 0;
  std::vector<Point> best_;
  std::vector<Point> best_label_;
  bool have_best_ = false;
};

}  // namespace

CanonicalLabeling canonical_labeling(const QCycleSet& X) {
  if (X.size() == 0) return {X, Permutation::identity(0)};
  Permutation p = CanonicalSearch(X).run();
  return {X.relabel(p), std::move(p)};
}

QCycleSet canonical_form(const QCycleSet& X) { return canonical_labeling(X).form; }

}  // namespace qcs
