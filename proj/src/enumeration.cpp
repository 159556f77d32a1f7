#include "qcycle/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <thread>

#include "qcycle/analysis.hpp"
#include "qcycle/blocks.hpp"
#include "qcycle/error.hpp"

namespace qcs {

std::string to_string(Kind kind) {
  return kind == Kind::cycle_set ? "cycle_set" : "q_cycle_set";
}

std::string to_string(Property p) {
  switch (p) {
    case Property::regular: return "regular";
    case Property::indecomposable: return "indecomposable";
    case Property::square_free: return "square_free";
    case Property::irretractable: return "irretractable";
    case Property::simple: return "simple";
    case Property::left_self_distributive: return "left_self_distributive";
    case Property::right_self_distributive: return "right_self_distributive";
    case Property::self_distributive: return "self_distributive";
    case Property::cycle_set: return "cycle_set";
    case Property::primitive: return "primitive";
  }
  return "?";
}

Kind parse_kind(const std::string& text) {
  if (text == "qcs" || text == "q_cycle_set" || text == "q-cycle-set") return Kind::q_cycle_set;
  if (text == "cs" || text == "cycle_set" || text == "cycle-set") return Kind::cycle_set;
  throw ParseError("unknown structure kind '" + text + "' (expected qcs or cs)");
}

Property parse_property(const std::string& text) {
  std::string key = text;
  std::replace(key.begin(), key.end(), '-', '_');
  static const std::map<std::string, Property> names{
      {"regular", Property::regular},
      {"indecomposable", Property::indecomposable},
      {"square_free", Property::square_free},
      {"irretractable", Property::irretractable},
      {"simple", Property::simple},
      {"left_self_distributive", Property::left_self_distributive},
      {"left_sd", Property::left_self_distributive},
      {"right_self_distributive", Property::right_self_distributive},
      {"right_sd", Property::right_self_distributive},
      {"self_distributive", Property::self_distributive},
      {"sd", Property::self_distributive},
      {"cycle_set", Property::cycle_set},
      {"primitive", Property::primitive},
  };
  auto it = names.find(key);
  if (it == names.end()) throw ParseError("unknown property '" + text + "'");
  return it->second;
}

bool has_property(const QCycleSet& X, Property p) {
  if (p == Property::cycle_set) return X.is_cycle_set();
  const bool regular = is_regular(X);
  if (p == Property::regular || !regular) return regular;
  switch (p) {
    case Property::indecomposable: return is_indecomposable(X);
    case Property::square_free: return is_square_free(X);
    case Property::irretractable: return !is_retractable(X);
    case Property::simple: return X.size() > 1 && is_simple_oracle(X);
    case Property::left_self_distributive: return is_left_self_distributive(X);
    case Property::right_self_distributive: return is_right_self_distributive(X);
    case Property::self_distributive:
      return is_left_self_distributive(X) || is_right_self_distributive(X);
    case Property::primitive: {
      auto G = permutation_group(X);
      return X.size() > 1 && G.is_transitive() && is_primitive(G);
    }
    default: return false;
  }
}

Filter EnumerationQuery::filter(Property p) const {
  auto it = filters.find(p);
  if (it != filters.end()) return it->second;
  return p == Property::regular ? Filter::require : Filter::ignore;
}

namespace {

constexpr std::uint8_t kNone = 0xFF;
constexpr std::size_t kMaxOrder = 16;

struct Decision {
  std::uint16_t cell;
  std::uint8_t value;
};

// Backtracking over table cells in key order (dot row x, then colon row x).
// Every assignment is followed by propagation of (q1)-(q3) to a fixpoint.
// With canonical set, branches are cut as soon as some relabeling is known
// to give a lexicographically smaller key, so each isomorphism class is
// reached exactly once, at its least labelling.
class Search {
 public:
  Search(std::size_t n, bool cycle_set, bool colon_perm, bool canonical)
      : n_(n),
        tables_(cycle_set ? 1 : 2),
        colon_offset_(cycle_set ? 0 : n * n),
        perm_{true, colon_perm},
        canonical_(canonical),
        val_(tables_ * n * n, kNone),
        used_(tables_ * n, 0),
        filled_(tables_ * n, 0),
        label_(n, kNone),
        point_(n, kNone) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t t = 0; t < tables_; ++t) {
        for (std::size_t y = 0; y < n; ++y) key_cell_.push_back(static_cast<std::uint16_t>(t * n * n + x * n + y));
      }
    }
  }

  // Decision prefixes that complete the first key row, in search order.
  std::vector<std::vector<Decision>> split() {
    std::vector<std::vector<Decision>> out;
    std::vector<Decision> path;
    if (!propagate()) return out;
    collect(path, out);
    return out;
  }

  template <class Emit>
  void run(const std::vector<Decision>& prefix, Emit&& emit) {
    for (const auto& d : prefix) {
      if (!assign(d.cell, d.value) || !propagate()) return;
    }
    dfs(emit, prefix.empty() ? 0 : 1);
  }

  QCycleSet current() const {
    std::vector<Point> dot(val_.begin(), val_.begin() + static_cast<std::ptrdiff_t>(n_ * n_));
    std::vector<Point> colon(val_.begin() + static_cast<std::ptrdiff_t>(colon_offset_),
                             val_.begin() + static_cast<std::ptrdiff_t>(colon_offset_ + n_ * n_));
    return QCycleSet(n_, std::move(dot), std::move(colon));
  }

 private:
  std::uint8_t D(std::size_t x, std::size_t y) const { return val_[x * n_ + y]; }
  std::uint8_t C(std::size_t x, std::size_t y) const { return val_[colon_offset_ + x * n_ + y]; }
  std::size_t dcell(std::size_t x, std::size_t y) const { return x * n_ + y; }
  std::size_t ccell(std::size_t x, std::size_t y) const { return colon_offset_ + x * n_ + y; }

  bool assign(std::size_t cell, std::uint8_t v) {
    if (val_[cell] != kNone) return val_[cell] == v;
    const std::size_t row = cell / n_;
    const std::size_t t = cell / (n_ * n_);
    if (perm_[t] && ((used_[row] >> v) & 1u)) return false;
    val_[cell] = v;
    used_[row] |= 1u << v;
    ++filled_[row];
    trail_.push_back(static_cast<std::uint16_t>(cell));
    changed_ = true;
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::size_t cell = trail_.back();
      trail_.pop_back();
      const std::size_t row = cell / n_;
      used_[row] &= ~(1u << val_[cell]);
      --filled_[row];
      val_[cell] = kNone;
    }
  }

  bool equate(std::size_t a, std::size_t b) {
    const std::uint8_t va = val_[a];
    const std::uint8_t vb = val_[b];
    if (va != kNone) {
      if (vb != kNone) return va == vb;
      return assign(b, va);
    }
    if (vb != kNone) return assign(a, vb);
    return true;
  }

  bool sweep() {
    const std::size_t n = n_;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const std::uint8_t dxy = D(x, y);
        const std::uint8_t cyx = C(y, x);
        const std::uint8_t dyx = D(y, x);
        const std::uint8_t cxy = C(x, y);
        for (std::size_t z = 0; z < n; ++z) {
          const std::uint8_t dxz = D(x, z);
          const std::uint8_t dyz = D(y, z);
          // (q1) (x.y).(x.z) = (y:x).(y.z)
          if (dxy != kNone && dxz != kNone && cyx != kNone && dyz != kNone &&
              !equate(dcell(dxy, dxz), dcell(cyx, dyz))) {
            return false;
          }
          if (tables_ == 1) continue;
          const std::uint8_t cxz = C(x, z);
          const std::uint8_t cyz = C(y, z);
          // (q2) (x:y):(x:z) = (y.x):(y:z)
          if (cxy != kNone && cxz != kNone && dyx != kNone && cyz != kNone &&
              !equate(ccell(cxy, cxz), ccell(dyx, cyz))) {
            return false;
          }
          // (q3) (x.y):(x.z) = (y:x).(y:z)
          if (dxy != kNone && dxz != kNone && cyx != kNone && cyz != kNone &&
              !equate(ccell(dxy, dxz), dcell(cyx, cyz))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // A permutation row with one empty cell takes the missing value.
  bool singles() {
    for (std::size_t row = 0; row < used_.size(); ++row) {
      const std::size_t t = row / n_;
      if (!perm_[t] || filled_[row] != n_ - 1) continue;
      const std::uint32_t missing = ~used_[row] & ((1u << n_) - 1u);
      const std::uint8_t v = static_cast<std::uint8_t>(std::countr_zero(missing));
      for (std::size_t y = 0; y < n_; ++y) {
        if (val_[row * n_ + y] == kNone) {
          if (!assign(row * n_ + y, v)) return false;
          break;
        }
      }
    }
    return true;
  }

  bool propagate() {
    do {
      changed_ = false;
      if (!sweep() || !singles()) return false;
    } while (changed_);
    return true;
  }

  std::size_t first_open() const {
    std::size_t pos = 0;
    while (pos < key_cell_.size() && val_[key_cell_[pos]] != kNone) ++pos;
    return pos;
  }

  void collect(std::vector<Decision>& path, std::vector<std::vector<Decision>>& out) {
    const std::size_t pos = first_open();
    if (pos >= n_) {
      if (!canonical_ || !smaller_relabeling_exists()) out.push_back(path);
      return;
    }
    const std::size_t cell = key_cell_[pos];
    for (std::uint8_t v = 0; v < n_; ++v) {
      const std::size_t mark = trail_.size();
      if (assign(cell, v) && propagate()) {
        path.push_back({static_cast<std::uint16_t>(cell), v});
        collect(path, out);
        path.pop_back();
      }
      undo(mark);
    }
  }

  template <class Emit>
  void dfs(Emit& emit, std::size_t checked_rows) {
    const std::size_t pos = first_open();
    const std::size_t rows = pos / n_;
    if (canonical_ && rows > checked_rows) {
      if (smaller_relabeling_exists()) return;
      checked_rows = rows;
    }
    if (pos == key_cell_.size()) {
      emit(current());
      return;
    }
    const std::size_t cell = key_cell_[pos];
    for (std::uint8_t v = 0; v < n_; ++v) {
      const std::size_t mark = trail_.size();
      if (assign(cell, v) && propagate()) dfs(emit, checked_rows);
      undo(mark);
    }
  }

  // ---- lex-leader test -------------------------------------------------

  void give_label(std::uint8_t v) {
    label_[v] = labelled_;
    point_[labelled_++] = v;
  }

  void take_label(std::uint8_t v) {
    --labelled_;
    point_[labelled_] = kNone;
    label_[v] = kNone;
  }

  // True if some relabeling gives a key that is smaller than the current
  // one for every completion of the partial tables.  Labels are handed out
  // in order of first appearance, as in canonical_form; a branch stops at
  // the first cell whose value is not yet known.
  bool smaller_relabeling_exists() {
    labelled_ = 0;
    std::fill(label_.begin(), label_.end(), kNone);
    std::fill(point_.begin(), point_.end(), kNone);
    return smaller_from(0);
  }

  bool smaller_from(std::size_t c) {
    std::uint8_t given[kMaxOrder];
    std::size_t given_count = 0;
    bool result = false;
    const std::size_t row_len = n_ * tables_;
    while (c < key_cell_.size()) {
      const std::size_t i = c / row_len;
      const std::size_t t = (c / n_) % tables_;
      const std::size_t j = c % n_;
      if (j >= labelled_) {
        for (std::uint8_t a = 0; a < n_ && !result; ++a) {
          if (label_[a] != kNone) continue;
          give_label(a);
          result = smaller_from(c);
          take_label(a);
        }
        break;
      }
      const std::uint8_t ours = val_[key_cell_[c]];
      const std::uint8_t src = val_[t * n_ * n_ + point_[i] * n_ + point_[j]];
      if (ours == kNone || src == kNone) break;
      std::uint8_t value = label_[src];
      if (value == kNone) {
        value = labelled_;
        give_label(src);
        given[given_count++] = src;
      }
      if (value != ours) {
        result = value < ours;
        break;
      }
      ++c;
    }
    while (given_count > 0) take_label(given[--given_count]);
    return result;
  }

  std::size_t n_;
  std::size_t tables_;
  std::size_t colon_offset_;
  bool perm_[2];
  bool canonical_;
  std::vector<std::uint8_t> val_;
  std::vector<std::uint32_t> used_;
  std::vector<std::size_t> filled_;
  std::vector<std::uint16_t> trail_;
  std::vector<std::uint16_t> key_cell_;
  bool changed_ = false;

  std::vector<std::uint8_t> label_;
  std::vector<std::uint8_t> point_;
  std::uint8_t labelled_ = 0;
};

bool passes(const EnumerationQuery& query, const QCycleSet& X) {
  for (const auto& [p, f] : query.filters) {
    if (f == Filter::ignore) continue;
    if (has_property(X, p) != (f == Filter::require)) return false;
  }
  if (!query.filters.contains(Property::regular) && !is_regular(X)) return false;
  return true;
}

}  // namespace

void enumerate(const EnumerationQuery& query, const std::function<void(const QCycleSet&)>& emit,
               const EnumerationBounds& bounds) {
  const std::size_t n = query.order;
  if (n < 1) throw PreconditionError("enumeration order must be at least 1");
  const bool cycle_set = query.kind == Kind::cycle_set;
  const std::size_t bound = cycle_set ? bounds.cycle_sets : bounds.q_cycle_sets;
  if (n > bound && !query.override_bounds) {
    throw BoundExceeded("order " + std::to_string(n) + " exceeds the " + to_string(query.kind) +
                        " enumeration bound " + std::to_string(bound) +
                        "; pass the override flag to run anyway");
  }
  if (n > kMaxOrder) {
    throw BoundExceeded("order " + std::to_string(n) + " exceeds the hard limit " +
                        std::to_string(kMaxOrder));
  }
  const bool colon_perm = cycle_set || query.filter(Property::regular) == Filter::require;

  Search root(n, cycle_set, colon_perm, query.canonicalize);
  auto tasks = root.split();
  std::vector<std::vector<QCycleSet>> results(tasks.size());
  auto work = [&](std::size_t k) {
    Search search(n, cycle_set, colon_perm, query.canonicalize);
    search.run(tasks[k], [&](const QCycleSet& X) {
      if (passes(query, X)) results[k].push_back(X);
    });
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(query.workers, tasks.size()));
  if (workers == 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) {
      work(k);
      for (const auto& X : results[k]) emit(X);
      results[k].clear();
    }
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < tasks.size(); k = next++) work(k);
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& bucket : results) {
    for (const auto& X : bucket) emit(X);
  }
}

std::vector<QCycleSet> enumerate_all(const EnumerationQuery& query,
                                     const EnumerationBounds& bounds) {
  std::vector<QCycleSet> out;
  enumerate(query, [&](const QCycleSet& X) { out.push_back(X); }, bounds);
  return out;
}

Profile profile_of(const QCycleSet& X) {
  Profile p;
  auto G = permutation_group(X);
  p.indecomposable = G.is_transitive();
  p.primitive = X.size() > 1 && p.indecomposable && is_primitive(G);
  p.square_free = is_square_free(X);
  p.simple = X.size() > 1 && is_simple_oracle(X);
  p.mpl = multipermutation_level(X);
  return p;
}

CountReport count_report(std::size_t from, std::size_t to, Kind kind, bool override_bounds,
                         const EnumerationBounds& bounds) {
  CountReport report;
  report.kind = kind;
  for (std::size_t n = from; n <= to; ++n) {
    EnumerationQuery query;
    query.order = n;
    query.kind = kind;
    query.override_bounds = override_bounds;
    auto& cells = report.cells[n];
    std::size_t total = 0;
    enumerate(query, [&](const QCycleSet& X) {
      ++cells[profile_of(X)];
      ++total;
    }, bounds);
    report.totals[n] = total;
  }
  return report;
}

}  // namespace qcs
