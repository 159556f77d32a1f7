#include "qcycle/structures.hpp"

#include <algorithm>

#include "qcycle/error.hpp"

namespace qcs {

namespace {

std::vector<Point> flatten(const Rows& rows, std::size_t n, const char* name) {
  if (rows.size() != n) {
    throw InvalidStructure(std::string(name) + " has " + std::to_string(rows.size()) +
                           " rows, expected " + std::to_string(n));
  }
  std::vector<Point> flat;
  flat.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (rows[x].size() != n) {
      throw InvalidStructure(std::string(name) + " row " + std::to_string(x + 1) +
                             " has " + std::to_string(rows[x].size()) +
                             " entries, expected " + std::to_string(n));
    }
    flat.insert(flat.end(), rows[x].begin(), rows[x].end());
  }
  return flat;
}

std::vector<std::string> malformed_rows(const Rows& dot, const Rows& colon) {
  std::vector<std::string> issues;
  const std::size_t n = dot.size();
  if (colon.size() != n) {
    issues.push_back("colon has " + std::to_string(colon.size()) + " rows, dot has " +
                     std::to_string(n));
    return issues;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (dot[x].size() != n || colon[x].size() != n) {
      issues.push_back("row " + std::to_string(x + 1) + " has the wrong length");
      continue;
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (dot[x][y] >= n || colon[x][y] >= n) {
        issues.push_back("row " + std::to_string(x + 1) + " has an entry outside 1.." +
                         std::to_string(n));
        break;
      }
    }
  }
  if (!issues.empty()) return issues;
  for (std::size_t x = 0; x < n; ++x) {
    if (!is_bijection(dot[x])) {
      issues.push_back("dot row " + std::to_string(x + 1) + " is not a permutation");
    }
  }
  return issues;
}

}  // namespace

QCycleSet::QCycleSet(std::size_t n, std::vector<Point> dot, std::vector<Point> colon)
    : n_(n), dot_(std::move(dot)), colon_(std::move(colon)) {
  if (n_ == 0) throw InvalidStructure("carrier must be non-empty");
  if (dot_.size() != n_ * n_ || colon_.size() != n_ * n_) {
    throw InvalidStructure("operation tables must have n*n entries");
  }
  for (std::size_t i = 0; i < n_ * n_; ++i) {
    if (dot_[i] >= n_ || colon_[i] >= n_) {
      throw InvalidStructure("table entry outside 1.." + std::to_string(n_));
    }
  }
  for (Point x = 0; x < n_; ++x) {
    if (!is_bijection(dot_row(x))) {
      throw InvalidStructure("dot row " + std::to_string(x + 1) +
                             " is not a permutation (sigma_x must be bijective)");
    }
  }
}

QCycleSet QCycleSet::from_rows(const Rows& dot, const Rows& colon) {
  const std::size_t n = dot.size();
  return QCycleSet(n, flatten(dot, n, "dot"), flatten(colon, n, "colon"));
}

QCycleSet QCycleSet::from_cycles(const std::vector<std::string>& sigma,
                                 const std::vector<std::string>& delta, std::size_t n) {
  if (sigma.size() != n || (!delta.empty() && delta.size() != n)) {
    throw InvalidStructure("expected one cycle description per point");
  }
  std::vector<Point> dot;
  std::vector<Point> colon;
  dot.reserve(n * n);
  colon.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    auto s = Permutation::from_cycles(sigma[x], n);
    dot.insert(dot.end(), s.images().begin(), s.images().end());
    auto d = delta.empty() ? Permutation::identity(n) : Permutation::from_cycles(delta[x], n);
    colon.insert(colon.end(), d.images().begin(), d.images().end());
  }
  return QCycleSet(n, std::move(dot), std::move(colon));
}

Permutation QCycleSet::sigma(Point x) const {
  auto row = dot_row(x);
  return Permutation(std::vector<Point>(row.begin(), row.end()));
}

Permutation QCycleSet::delta(Point x) const {
  auto row = colon_row(x);
  if (!is_bijection(row)) {
    throw PreconditionError("delta_" + std::to_string(x + 1) +
                            " is not bijective (q-cycle set is not regular)");
  }
  return Permutation(std::vector<Point>(row.begin(), row.end()));
}

QCycleSet QCycleSet::relabel(const Permutation& p) const {
  std::vector<Point> dot(n_ * n_);
  std::vector<Point> colon(n_ * n_);
  for (Point x = 0; x < n_; ++x) {
    for (Point y = 0; y < n_; ++y) {
      dot[p(x) * n_ + p(y)] = p(this->dot(x, y));
      colon[p(x) * n_ + p(y)] = p(this->colon(x, y));
    }
  }
  return QCycleSet(n_, std::move(dot), std::move(colon));
}

namespace {

template <class Dot, class Colon>
void scan_axioms(std::size_t n, Dot dot, Colon colon, std::size_t max_violations,
                 std::vector<AxiomViolation>& out) {
  for (int k = 1; k <= 3; ++k) {
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        for (Point z = 0; z < n; ++z) {
          bool holds = true;
          switch (k) {
            case 1:
              holds = dot(dot(x, y), dot(x, z)) == dot(colon(y, x), dot(y, z));
              break;
            case 2:
              holds = colon(colon(x, y), colon(x, z)) == colon(dot(y, x), colon(y, z));
              break;
            case 3:
              holds = colon(dot(x, y), dot(x, z)) == dot(colon(y, x), colon(y, z));
              break;
          }
          if (!holds) {
            out.push_back({static_cast<Axiom>(k), x, y, z});
            if (out.size() >= max_violations) return;
          }
        }
      }
    }
  }
}

}  // namespace

AxiomReport check_q_axioms(const QCycleSet& X, std::size_t max_violations) {
  AxiomReport report;
  if (max_violations == 0) return report;
  scan_axioms(
      X.size(), [&](Point a, Point b) { return X.dot(a, b); },
      [&](Point a, Point b) { return X.colon(a, b); }, max_violations, report.violations);
  return report;
}

AxiomReport check_q_axioms(const Rows& dot, const Rows& colon, std::size_t max_violations) {
  AxiomReport report;
  report.malformed = malformed_rows(dot, colon);
  if (!report.malformed.empty() || max_violations == 0) return report;
  scan_axioms(
      dot.size(), [&](Point a, Point b) { return dot[a][b]; },
      [&](Point a, Point b) { return colon[a][b]; }, max_violations, report.violations);
  return report;
}

bool is_regular(const QCycleSet& X) {
  for (Point x = 0; x < X.size(); ++x) {
    if (!is_bijection(X.colon_row(x))) return false;
  }
  return true;
}

SquaringMaps squaring_maps(const QCycleSet& X) {
  SquaringMaps maps;
  for (Point x = 0; x < X.size(); ++x) {
    maps.q.push_back(X.dot(x, x));
    maps.q_prime.push_back(X.colon(x, x));
  }
  return maps;
}

bool is_nondegenerate(const QCycleSet& X) {
  if (!is_regular(X)) return false;
  auto maps = squaring_maps(X);
  return is_bijection(maps.q) && is_bijection(maps.q_prime);
}

bool is_square_free(const QCycleSet& X) {
  for (Point x = 0; x < X.size(); ++x) {
    if (X.dot(x, x) != x || X.colon(x, x) != x) return false;
  }
  return true;
}

bool is_left_self_distributive(const QCycleSet& X) {
  for (Point x = 0; x < X.size(); ++x) {
    for (Point y = 0; y < X.size(); ++y) {
      if (X.colon(x, y) != y) return false;
    }
  }
  return true;
}

bool is_right_self_distributive(const QCycleSet& X) {
  for (Point x = 0; x < X.size(); ++x) {
    for (Point y = 0; y < X.size(); ++y) {
      if (X.dot(x, y) != y) return false;
    }
  }
  return true;
}

PairMap delta_pair_map(const QCycleSet& X) {
  const std::size_t n = X.size();
  PairMap map;
  map.images.resize(n * n);
  std::vector<bool> hit(n * n, false);
  map.bijective = true;
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      std::size_t image = X.dot(x, y) * n + X.colon(y, x);
      map.images[x * n + y] = image;
      if (hit[image]) map.bijective = false;
      hit[image] = true;
    }
  }
  return map;
}

Solution::Solution(std::vector<Permutation> lambda, std::vector<Permutation> rho)
    : lambda_(std::move(lambda)), rho_(std::move(rho)) {
  const std::size_t n = lambda_.size();
  if (n == 0) throw InvalidStructure("carrier must be non-empty");
  if (rho_.size() != n) {
    throw InvalidStructure("lambda and rho must have one map per point");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (lambda_[x].degree() != n || rho_[x].degree() != n) {
      throw InvalidStructure("map " + std::to_string(x + 1) + " has the wrong degree");
    }
  }
}

Solution Solution::from_rows(const Rows& lambda, const Rows& rho) {
  const std::size_t n = lambda.size();
  if (rho.size() != n) throw InvalidStructure("lambda and rho row counts differ");
  std::vector<Permutation> l;
  std::vector<Permutation> r;
  for (std::size_t x = 0; x < n; ++x) {
    if (lambda[x].size() != n || rho[x].size() != n) {
      throw InvalidStructure("row " + std::to_string(x + 1) + " has the wrong length");
    }
    if (!is_bijection(lambda[x])) {
      throw InvalidStructure("degenerate solution: lambda_" + std::to_string(x + 1) +
                             " is not bijective");
    }
    if (!is_bijection(rho[x])) {
      throw InvalidStructure("degenerate solution: rho_" + std::to_string(x + 1) +
                             " is not bijective");
    }
    l.emplace_back(lambda[x]);
    r.emplace_back(rho[x]);
  }
  return Solution(std::move(l), std::move(r));
}

std::optional<std::array<Point, 3>> yang_baxter_violation(const Solution& s) {
  const std::size_t n = s.size();
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      for (Point z = 0; z < n; ++z) {
        // (r x id)(id x r)(r x id)
        auto [a1, b1] = s(x, y);
        auto [b2, c2] = s(b1, z);
        auto [a3, b3] = s(a1, b2);
        // (id x r)(r x id)(id x r)
        auto [q1, r1] = s(y, z);
        auto [p2, q2] = s(x, q1);
        auto [q3, r3] = s(q2, r1);
        if (a3 != p2 || b3 != q3 || c2 != r3) return std::array<Point, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

bool check_yang_baxter(const Solution& s) { return !yang_baxter_violation(s).has_value(); }

bool is_bijective_map(const Solution& s) {
  const std::size_t n = s.size();
  std::vector<bool> hit(n * n, false);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      auto [a, b] = s(x, y);
      std::size_t idx = a * n + b;
      if (hit[idx]) return false;
      hit[idx] = true;
    }
  }
  return true;
}

bool is_involutive(const Solution& s) {
  const std::size_t n = s.size();
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      auto [a, b] = s(x, y);
      auto [c, d] = s(a, b);
      if (c != x || d != y) return false;
    }
  }
  return true;
}

bool is_nondegenerate_solution(const Rows& lambda, const Rows& rho) {
  if (lambda.size() != rho.size()) return false;
  for (std::size_t x = 0; x < lambda.size(); ++x) {
    if (lambda[x].size() != lambda.size() || rho[x].size() != lambda.size()) return false;
    if (!is_bijection(lambda[x]) || !is_bijection(rho[x])) return false;
  }
  return true;
}

Solution to_solution(const QCycleSet& X) {
  if (!is_regular(X)) {
    throw PreconditionError("to_solution requires a regular q-cycle set");
  }
  const std::size_t n = X.size();
  std::vector<Permutation> lambda;
  std::vector<Permutation> sigma_inv;
  for (Point x = 0; x < n; ++x) {
    sigma_inv.push_back(X.sigma(x).inverse());
    lambda.push_back(sigma_inv.back());
  }
  std::vector<Permutation> rho;
  for (Point y = 0; y < n; ++y) {
    std::vector<Point> images(n);
    for (Point x = 0; x < n; ++x) images[x] = X.colon(sigma_inv[x](y), x);
    rho.emplace_back(std::move(images));
  }
  return Solution(std::move(lambda), std::move(rho));
}

QCycleSet from_solution(const Solution& s) {
  if (auto w = yang_baxter_violation(s)) {
    throw InvalidStructure("braid relation fails at (" + std::to_string((*w)[0] + 1) + ", " +
                           std::to_string((*w)[1] + 1) + ", " +
                           std::to_string((*w)[2] + 1) + ")");
  }
  if (!is_bijective_map(s)) {
    throw InvalidStructure("the map r is not bijective on X x X");
  }
  const std::size_t n = s.size();
  std::vector<Permutation> lambda_inv;
  for (Point x = 0; x < n; ++x) lambda_inv.push_back(s.lambda(x).inverse());
  std::vector<Point> dot(n * n);
  std::vector<Point> colon(n * n);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      dot[x * n + y] = lambda_inv[x](y);
      colon[x * n + y] = s.rho(lambda_inv[y](x))(y);
    }
  }
  return QCycleSet(n, std::move(dot), std::move(colon));
}

Permutation eta_map(const Solution& s, Point x) {
  const std::size_t n = s.size();
  std::vector<Point> images(n);
  for (Point y = 0; y < n; ++y) {
    Point pre = s.lambda(y).inverse()(x);
    images[y] = s.rho(pre)(y);
  }
  return Permutation(std::move(images));
}

Solution derived_solution(const Solution& s) {
  const std::size_t n = s.size();
  std::vector<Permutation> lambda(n, Permutation::identity(n));
  std::vector<Permutation> lambda_inv;
  for (Point x = 0; x < n; ++x) lambda_inv.push_back(s.lambda(x).inverse());
  std::vector<Permutation> rho;
  for (Point y = 0; y < n; ++y) {
    std::vector<Point> images(n);
    for (Point x = 0; x < n; ++x) {
      images[x] = s.lambda(y)(s.rho(lambda_inv[x](y))(x));
    }
    rho.emplace_back(std::move(images));
  }
  return Solution(std::move(lambda), std::move(rho));
}

}  // namespace qcs
