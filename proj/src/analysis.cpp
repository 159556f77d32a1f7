#include "qcycle/analysis.hpp"

#include <algorithm>
#include <map>

#include "qcycle/error.hpp"

namespace qcs {

namespace {

void require_regular(const QCycleSet& X, const char* what) {
  if (!is_regular(X)) {
    throw PreconditionError(std::string(what) + " requires a regular q-cycle set");
  }
}

void require_indecomposable(const QCycleSet& X, const char* what) {
  require_regular(X, what);
  if (!is_indecomposable(X)) {
    throw PreconditionError(std::string(what) + " requires an indecomposable q-cycle set");
  }
}

void require_cycle_set(const QCycleSet& X, const char* what) {
  if (!X.is_cycle_set()) throw PreconditionError(std::string(what) + " requires a cycle set");
}

void push_unique(std::vector<Permutation>& out, Permutation g) {
  if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
}

}  // namespace

GroupHandle permutation_group(const QCycleSet& X) {
  require_regular(X, "permutation_group");
  std::vector<Permutation> gens;
  for (Point x = 0; x < X.size(); ++x) {
    push_unique(gens, X.sigma(x));
    push_unique(gens, X.delta(x));
  }
  return GroupHandle(X.size(), std::move(gens));
}

SolutionGroups solution_groups(const Solution& s) {
  std::vector<Permutation> g, f;
  for (Point x = 0; x < s.size(); ++x) {
    push_unique(g, s.lambda(x));
    push_unique(f, s.lambda(x));
  }
  for (Point x = 0; x < s.size(); ++x) {
    push_unique(g, eta_map(s, x));
    push_unique(f, s.rho(x));
  }
  return {GroupHandle(s.size(), std::move(g)), GroupHandle(s.size(), std::move(f))};
}

bool is_indecomposable(const QCycleSet& X) {
  return permutation_group(X).is_transitive();
}

Retraction retract(const QCycleSet& X) {
  require_regular(X, "retract");
  std::map<std::pair<std::vector<Point>, std::vector<Point>>, std::size_t> ids;
  std::vector<std::size_t> label(X.size());
  for (Point x = 0; x < X.size(); ++x) {
    auto d = X.dot_row(x);
    auto c = X.colon_row(x);
    std::pair key{std::vector<Point>(d.begin(), d.end()), std::vector<Point>(c.begin(), c.end())};
    label[x] = ids.emplace(std::move(key), ids.size()).first->second;
  }
  Congruence relation(label);
  auto q = quotient(X, relation);
  return {std::move(q.set), std::move(q.projection), std::move(relation)};
}

bool is_retractable(const QCycleSet& X) {
  return X.size() == 1 || !retract(X).relation.is_equality();
}

std::vector<QCycleSet> retraction_series(const QCycleSet& X) {
  std::vector<QCycleSet> series{X};
  while (true) {
    auto next = retract(series.back()).set;
    if (next.size() == series.back().size()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> multipermutation_level(const QCycleSet& X) {
  auto series = retraction_series(X);
  if (series.back().size() != 1) return std::nullopt;
  return series.size() - 1;
}

namespace {

DisplacementGenerators build_displacement(const QCycleSet& X, std::span<const Point> points) {
  require_regular(X, "displacement_generators");
  std::vector<Permutation> sigma, sigma_inv, delta, delta_inv;
  for (Point x : points) {
    if (x >= X.size()) throw PreconditionError("block point outside the carrier");
    sigma.push_back(X.sigma(x));
    delta.push_back(X.delta(x));
    sigma_inv.push_back(sigma.back().inverse());
    delta_inv.push_back(delta.back().inverse());
  }
  DisplacementGenerators out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      push_unique(out.positive, sigma[i] * sigma_inv[j]);
      push_unique(out.positive, delta[i] * delta_inv[j]);
      push_unique(out.negative, sigma_inv[i] * sigma[j]);
      push_unique(out.negative, delta_inv[i] * delta[j]);
    }
  }
  return out;
}

bool all_fix(const std::vector<Permutation>& gens, const BlockSystem& B) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Permutation& g) { return fixes_blocks(g, B); });
}

}  // namespace

DisplacementGenerators displacement_generators(const QCycleSet& X) {
  std::vector<Point> all(X.size());
  for (Point x = 0; x < X.size(); ++x) all[x] = x;
  return build_displacement(X, all);
}

DisplacementGenerators displacement_generators(const QCycleSet& X, std::span<const Point> block) {
  auto out = build_displacement(X, block);
  out.block = std::vector<Point>(block.begin(), block.end());
  return out;
}

bool check_dis_equality(const QCycleSet& X) {
  auto dis = displacement_generators(X);
  GroupHandle plus(X.size(), dis.positive);
  GroupHandle minus(X.size(), dis.negative);
  return std::all_of(dis.positive.begin(), dis.positive.end(),
                     [&](const Permutation& g) { return minus.contains(g); }) &&
         std::all_of(dis.negative.begin(), dis.negative.end(),
                     [&](const Permutation& g) { return plus.contains(g); });
}

bool block_dis_in_fixer(const QCycleSet& X, const BlockSystem& B) {
  for (const auto& block : B.blocks()) {
    if (!all_fix(displacement_generators(X, block).negative, B)) return false;
  }
  return true;
}

bool dis_in_fixer(const QCycleSet& X, const BlockSystem& B) {
  return all_fix(displacement_generators(X).negative, B);
}

bool is_simple_blocks(const QCycleSet& X) {
  require_regular(X, "is_simple_blocks");
  if (X.size() < 2) throw PreconditionError("simplicity requires at least two points");
  auto G = permutation_group(X);
  if (!G.is_transitive()) return false;
  for (const auto& B : all_block_systems(G)) {
    if (block_dis_in_fixer(X, B)) return false;
  }
  return true;
}

std::optional<Congruence> non_simplicity_witness(const QCycleSet& X) {
  for (auto& theta : all_congruences(X)) {
    if (!theta.is_equality() && !theta.is_total()) return theta;
  }
  return std::nullopt;
}

bool is_simple_oracle(const QCycleSet& X) {
  if (X.size() < 2) throw PreconditionError("simplicity requires at least two points");
  return !non_simplicity_witness(X).has_value();
}

bool has_finite_primitive_level(const QCycleSet& X) {
  require_indecomposable(X, "has_finite_primitive_level");
  auto G = permutation_group(X);
  if (is_primitive(G)) return true;
  for (const auto& B : maximal_block_systems(G)) {
    if (block_dis_in_fixer(X, B)) return true;
  }
  return false;
}

namespace {

// Longest chains over the congruence lattice of X: the images of X/theta
// are exactly the quotients by congruences of X above theta.
class LevelSearch {
 public:
  explicit LevelSearch(const QCycleSet& X) : X_(X), lattice_(all_congruences(X)) {
    memo_.resize(lattice_.size());
    next_.assign(lattice_.size(), SIZE_MAX);
  }

  PrimitiveLevel run() {
    std::size_t root = 0;  // equality comes first
    PrimitiveLevel out;
    out.level = level(root);
    if (out.level) {
      for (std::size_t k = root; k != SIZE_MAX; k = next_[k]) out.chain.push_back(lattice_[k]);
    }
    return out;
  }

 private:
  std::optional<std::size_t> level(std::size_t k) {
    if (memo_[k]) return *memo_[k];
    std::optional<std::size_t> best;
    auto image = quotient(X_, lattice_[k]).set;
    if (is_primitive(permutation_group(image))) {
      best = 1;
    } else {
      for (std::size_t j = 0; j < lattice_.size(); ++j) {
        const auto& coarser = lattice_[j];
        if (coarser.is_total() || coarser.class_count() >= lattice_[k].class_count() ||
            !refines(lattice_[k], coarser)) {
          continue;
        }
        auto sub = level(j);
        if (sub && (!best || *sub + 1 > *best)) {
          best = *sub + 1;
          next_[k] = j;
        }
      }
    }
    memo_[k] = best;
    return best;
  }

  const QCycleSet& X_;
  std::vector<Congruence> lattice_;
  std::vector<std::optional<std::optional<std::size_t>>> memo_;
  std::vector<std::size_t> next_;
};

}  // namespace

PrimitiveLevel primitive_level(const QCycleSet& X) {
  if (X.size() < 2) throw PreconditionError("primitive level requires at least two points");
  require_indecomposable(X, "primitive_level");
  return LevelSearch(X).run();
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::size_t big_omega(std::size_t n) {
  std::size_t count = 0;
  for (std::size_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      n /= d;
      ++count;
    }
  }
  if (n > 1) ++count;
  return count;
}

std::size_t primitive_level_abelian(const QCycleSet& X) {
  require_indecomposable(X, "primitive_level_abelian");
  if (!permutation_group(X).is_abelian()) {
    throw PreconditionError("primitive_level_abelian requires an abelian permutation group");
  }
  return big_omega(X.size());
}

bool cycle_set_finite_level(const QCycleSet& X) {
  require_cycle_set(X, "cycle_set_finite_level");
  require_indecomposable(X, "cycle_set_finite_level");
  auto G = permutation_group(X);
  if (is_primitive(G)) return true;
  for (const auto& B : all_block_systems(G)) {
    if (is_prime(B.size()) && dis_in_fixer(X, B)) return true;
  }
  return false;
}

bool primitive_level_two_check(const QCycleSet& X) {
  require_cycle_set(X, "primitive_level_two_check");
  require_indecomposable(X, "primitive_level_two_check");
  if (is_prime(X.size())) {
    throw PreconditionError("primitive_level_two_check requires a non-prime size");
  }
  auto G = permutation_group(X);
  if (X.size() < 2 || is_primitive(G)) return false;
  auto systems = all_block_systems(G);
  bool found = false;
  for (const auto& B : systems) {
    if (!is_prime(B.size()) || !dis_in_fixer(X, B)) continue;
    found = true;
    for (const auto& finer : systems) {
      if (finer != B && refines(finer, B) && block_dis_in_fixer(X, finer)) return false;
    }
  }
  return found;
}

FixedPointReport fixed_point_tests(const QCycleSet& X) {
  require_cycle_set(X, "fixed_point_tests");
  FixedPointReport out;
  const Point n = static_cast<Point>(X.size());
  for (Point x = 0; x < n && !out.witness; ++x) {
    for (Point y = 0; y < n; ++y) {
      if (X.dot(x, y) == y) {
        out.witness = std::pair{x, y};
        break;
      }
    }
  }
  out.has_fixed_point = out.witness.has_value();
  out.indecomposable = is_indecomposable(X);
  if (out.indecomposable && n > 1) {
    out.finite_primitive_level = has_finite_primitive_level(X);
    out.finite_level_rule_holds = !(*out.finite_primitive_level && out.has_fixed_point);
    std::size_t root = 0;
    while (root * root < n) ++root;
    if (root * root == n && is_prime(root) && out.has_fixed_point) {
      out.declared_simple = true;
      out.oracle_simple = is_simple_oracle(X);
    }
  }
  if (out.has_fixed_point) {
    auto lattice = all_congruences(X);
    bool prime_image = std::any_of(lattice.begin(), lattice.end(), [](const Congruence& c) {
      return is_prime(c.class_count());
    });
    out.prime_image_rule_holds = !(prime_image && out.indecomposable);
  }
  return out;
}

std::vector<Implication> structure_checks(const QCycleSet& X) {
  require_regular(X, "structure_checks");
  const std::size_t n = X.size();
  auto G = permutation_group(X);
  const bool indecomposable = G.is_transitive();
  const bool regular_group = G.is_regular_action();
  const bool abelian = G.is_abelian();
  const bool retractable = is_retractable(X);
  const auto series = retraction_series(X);
  const bool multipermutational = series.back().size() == 1;
  const auto squares = squaring_maps(X);

  std::vector<Implication> out;
  out.push_back({"(i) regular G, indecomposable => (q = q' iff dot = colon)",
                 regular_group && indecomposable,
                 (squares.q == squares.q_prime) == X.is_cycle_set()});
  out.push_back({"(ii) regular G, indecomposable, |X| > 1 => retractable",
                 regular_group && indecomposable && n > 1, retractable});
  out.push_back({"(iii) regular abelian G, indecomposable => multipermutational",
                 regular_group && abelian && indecomposable, multipermutational});

  Implication imprimitive{"(iv) retractable, indecomposable, |X| composite => imprimitive G",
                          retractable && indecomposable && n > 1 && !is_prime(n), false};
  if (imprimitive.hypothesis) imprimitive.conclusion = !all_block_systems(G).empty();
  out.push_back(std::move(imprimitive));

  Implication square_free{
      "(v) square-free, indecomposable, |X| > 1 => no Ret^k is a cycle set, not multipermutational",
      is_square_free(X) && indecomposable && n > 1, false};
  if (square_free.hypothesis) {
    square_free.conclusion =
        !multipermutational && std::none_of(series.begin(), series.end(),
                                            [](const QCycleSet& R) { return R.is_cycle_set(); });
  }
  out.push_back(std::move(square_free));

  Implication finite{"(vi) multipermutational, indecomposable, |X| > 1 => finite primitive level",
                     multipermutational && indecomposable && n > 1, false};
  if (finite.hypothesis) finite.conclusion = primitive_level(X).level.has_value();
  out.push_back(std::move(finite));
  return out;
}

}  // namespace qcs
