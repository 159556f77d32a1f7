#include "qcycle/extension.hpp"

#include <algorithm>

#include "qcycle/analysis.hpp"
#include "qcycle/error.hpp"

namespace qcs {

DynamicalPair::DynamicalPair(std::size_t n, std::size_t m, std::vector<Point> alpha,
                             std::vector<Point> alpha_prime)
    : n_(n), m_(m), alpha_(std::move(alpha)), alpha_prime_(std::move(alpha_prime)) {
  const std::size_t expected = n * n * m * m;
  if (alpha_.size() != expected || alpha_prime_.size() != expected) {
    throw InvalidStructure("dynamical pair tables must have n*n*m*m = " +
                           std::to_string(expected) + " entries");
  }
  for (const auto* table : {&alpha_, &alpha_prime_}) {
    for (Point v : *table) {
      if (v >= m) throw InvalidStructure("dynamical pair entry outside the fibre");
    }
  }
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      for (Point s = 0; s < m; ++s) {
        if (!is_bijection(alpha_slice(x, y, s))) {
          throw InvalidStructure("alpha(" + std::to_string(x + 1) + "," + std::to_string(y + 1) +
                                 "," + std::to_string(s + 1) + ",-) is not bijective");
        }
      }
    }
  }
}

bool DynamicalPair::alpha_prime_bijective() const {
  for (Point x = 0; x < n_; ++x) {
    for (Point y = 0; y < n_; ++y) {
      for (Point s = 0; s < m_; ++s) {
        if (!is_bijection(alpha_prime_slice(x, y, s))) return false;
      }
    }
  }
  return true;
}

namespace {

void require_matching(const QCycleSet& X, const DynamicalPair& P) {
  if (X.size() != P.base_size()) {
    throw PreconditionError("dynamical pair is over a base of size " +
                            std::to_string(P.base_size()) + ", not " + std::to_string(X.size()));
  }
}

}  // namespace

std::vector<CocycleViolation> check_dynamical_pair(const QCycleSet& X, const DynamicalPair& P,
                                                   std::size_t max_violations) {
  require_matching(X, P);
  const Point n = static_cast<Point>(X.size());
  const Point m = static_cast<Point>(P.fiber_size());
  std::vector<CocycleViolation> out;
  auto a = [&](Point x, Point y, Point s, Point t) { return P.alpha(x, y, s, t); };
  auto b = [&](Point x, Point y, Point s, Point t) { return P.alpha_prime(x, y, s, t); };
  for (int id = 1; id <= 3; ++id) {
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        for (Point z = 0; z < n; ++z) {
          for (Point s = 0; s < m; ++s) {
            for (Point t = 0; t < m; ++t) {
              for (Point u = 0; u < m; ++u) {
                Point lhs = 0, rhs = 0;
                switch (id) {
                  case 1:
                    lhs = a(X.dot(x, y), X.dot(x, z), a(x, y, s, t), a(x, z, s, u));
                    rhs = a(X.colon(y, x), X.dot(y, z), b(y, x, t, s), a(y, z, t, u));
                    break;
                  case 2:
                    lhs = b(X.colon(x, y), X.colon(x, z), b(x, y, s, t), b(x, z, s, u));
                    rhs = b(X.dot(y, x), X.colon(y, z), a(y, x, t, s), b(y, z, t, u));
                    break;
                  default:
                    lhs = b(X.dot(x, y), X.dot(x, z), a(x, y, s, t), a(x, z, s, u));
                    rhs = a(X.colon(y, x), X.colon(y, z), b(y, x, t, s), b(y, z, t, u));
                    break;
                }
                if (lhs != rhs) {
                  out.push_back({id, x, y, z, s, t, u});
                  if (out.size() >= max_violations) return out;
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

QCycleSet build_extension(const QCycleSet& X, const DynamicalPair& P) {
  auto violations = check_dynamical_pair(X, P, 1);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw InvalidStructure("cocycle identity " + std::to_string(v.identity) +
                           " fails at x=" + std::to_string(v.x + 1) + " y=" +
                           std::to_string(v.y + 1) + " z=" + std::to_string(v.z + 1) +
                           " s=" + std::to_string(v.s + 1) + " t=" + std::to_string(v.t + 1) +
                           " u=" + std::to_string(v.u + 1));
  }
  const std::size_t n = X.size();
  const std::size_t m = P.fiber_size();
  const std::size_t N = n * m;
  std::vector<Point> dot(N * N), colon(N * N);
  for (Point x = 0; x < n; ++x) {
    for (Point s = 0; s < m; ++s) {
      for (Point y = 0; y < n; ++y) {
        for (Point t = 0; t < m; ++t) {
          const std::size_t cell = (x * m + s) * N + (y * m + t);
          dot[cell] = static_cast<Point>(X.dot(x, y) * m + P.alpha(x, y, s, t));
          colon[cell] = static_cast<Point>(X.colon(x, y) * m + P.alpha_prime(x, y, s, t));
        }
      }
    }
  }
  return QCycleSet(N, std::move(dot), std::move(colon));
}

namespace {

BlockSystem fibre_partition(std::size_t n, std::size_t m) {
  std::vector<std::vector<Point>> blocks(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t s = 0; s < m; ++s) blocks[x].push_back(static_cast<Point>(x * m + s));
  }
  return BlockSystem(n * m, std::move(blocks));
}

}  // namespace

BlockSystem extension_blocks(const QCycleSet& X, const DynamicalPair& P) {
  auto E = build_extension(X, P);
  auto G = permutation_group(E);
  if (!G.is_transitive()) throw PreconditionError("the extension is decomposable");
  auto B = fibre_partition(X.size(), P.fiber_size());
  if (!is_invariant(G, B)) {
    throw InvalidStructure("fibre partition is not invariant under the extension's group");
  }
  return B;
}

bool stabilizer_transitive_on_fiber(const QCycleSet& X, const DynamicalPair& P, Point x) {
  require_matching(X, P);
  if (x >= X.size()) throw PreconditionError("base point outside the carrier");
  auto E = build_extension(X, P);
  auto G = permutation_group(E);
  const std::size_t m = P.fiber_size();
  auto B = fibre_partition(X.size(), m);
  GroupHandle H(E.size(), block_stabilizer_generators(G, B, x));
  return H.orbit(static_cast<Point>(x * m)).size() == m;
}

bool extension_indecomposability_criterion(const QCycleSet& X, const DynamicalPair& P) {
  if (!is_indecomposable(X)) return false;
  for (Point x = 0; x < X.size(); ++x) {
    if (stabilizer_transitive_on_fiber(X, P, x)) return true;
  }
  return false;
}

DynamicalPair trivial_pair(std::size_t n, std::size_t m) {
  std::vector<Point> table(n * n * m * m);
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<Point>(i % m);
  return DynamicalPair(n, m, table, table);
}

namespace {

template <class F>
std::vector<Point> tabulate(std::size_t n, std::size_t m, F f) {
  std::vector<Point> out;
  out.reserve(n * n * m * m);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      for (Point s = 0; s < m; ++s) {
        for (Point t = 0; t < m; ++t) out.push_back(static_cast<Point>(f(x, y, s, t)));
      }
    }
  }
  return out;
}

QCycleSet shift_base(std::size_t n, int dot_step, int colon_step) {
  std::vector<Point> dot(n * n), colon(n * n);
  const auto N = static_cast<long>(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      dot[x * n + y] = static_cast<Point>(((static_cast<long>(y) + dot_step) % N + N) % N);
      colon[x * n + y] = static_cast<Point>(((static_cast<long>(y) + colon_step) % N + N) % N);
    }
  }
  return QCycleSet(n, std::move(dot), std::move(colon));
}

}  // namespace

ExtensionData paper_extension(const std::string& name, std::size_t param) {
  if (name == "D1") {
    auto flip_odd = [](Point x, Point, Point, Point t) { return t ^ (x & 1u); };
    return {shift_base(4, 1, -1), DynamicalPair(4, 2, tabulate(4, 2, flip_odd),
                                                tabulate(4, 2, flip_odd))};
  }
  if (name == "D2") {
    if (param < 1) throw PreconditionError("D2 needs k >= 1");
    const std::size_t n = 2 * param;
    auto odd = [](Point x, Point, Point, Point t) { return t ^ (x & 1u); };
    auto even = [](Point x, Point, Point, Point t) { return t ^ (~x & 1u); };
    return {shift_base(n, 1, 1), DynamicalPair(n, 2, tabulate(n, 2, odd), tabulate(n, 2, even))};
  }
  if (name == "D3") {
    if (!is_prime(param)) throw PreconditionError("D3 needs a prime parameter");
    const std::size_t p = param;
    auto a = [p](Point x, Point, Point, Point t) { return (t + x) % p; };
    auto b = [p](Point x, Point, Point, Point t) { return (t + x + 1) % p; };
    return {shift_base(p, 1, 1), DynamicalPair(p, p, tabulate(p, p, a), tabulate(p, p, b))};
  }
  if (name == "SF") {
    if (param < 1 || param > 12) throw PreconditionError("SF needs 1 <= m <= 12");
    const std::size_t m = std::size_t{1} << param;
    auto base = QCycleSet::from_cycles({"(2 3)", "(1 3)", "(1 2)"}, {}, 3);
    auto a = [](Point, Point, Point, Point t) { return t; };
    auto b = [](Point x, Point y, Point s, Point t) { return x == y ? t : (s ^ t); };
    return {std::move(base), DynamicalPair(3, m, tabulate(3, m, a), tabulate(3, m, b))};
  }
  throw PreconditionError("unknown extension family '" + name + "' (expected D1, D2, D3 or SF)");
}

}  // namespace qcs
