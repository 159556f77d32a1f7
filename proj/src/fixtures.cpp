#include "qcycle/fixtures.hpp"

#include <charconv>

#include "qcycle/error.hpp"
#include "qcycle/extension.hpp"

namespace qcs {

namespace {

std::size_t parse_parameter(const std::string& name, const std::string& text) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw PreconditionError("bad parameter '" + text + "' for fixture " + name);
  }
  return value;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"simple4", "simple9", "nonsimple6", "primitive4", "J4",  "example_1",
          "trivial:N", "cyclic:N", "D1",       "D2:k",       "D3:p", "SF:m"};
}

Solution j4_solution() {
  const std::size_t n = 4;
  std::vector<Permutation> lambda{
      Permutation::from_cycles("(2 3)", n), Permutation::from_cycles("(1 4)", n),
      Permutation::from_cycles("(1 2 4 3)", n), Permutation::from_cycles("(1 3 4 2)", n)};
  std::vector<Permutation> rho;
  for (Point y = 0; y < n; ++y) {
    std::vector<Point> images(n);
    for (Point x = 0; x < n; ++x) images[x] = lambda[lambda[x](y)].inverse()(x);
    rho.emplace_back(std::move(images));
  }
  return Solution(std::move(lambda), std::move(rho));
}

QCycleSet trivial_set(std::size_t n) {
  Rows rows(n, std::vector<Point>(n));
  for (auto& row : rows) {
    for (std::size_t y = 0; y < n; ++y) row[y] = static_cast<Point>(y);
  }
  return QCycleSet::cycle_set(rows);
}

QCycleSet cyclic_set(std::size_t n) {
  Rows rows(n, std::vector<Point>(n));
  for (auto& row : rows) {
    for (std::size_t y = 0; y < n; ++y) row[y] = static_cast<Point>((y + 1) % n);
  }
  return QCycleSet::cycle_set(rows);
}

Fixture fixture(const std::string& name) {
  if (name == "simple4") {
    std::vector<std::string> s{"(1 4)", "(1 3 4 2)", "(2 3)", "(1 2 4 3)"};
    return {name, QCycleSet::from_cycles(s, s, 4), std::nullopt};
  }
  if (name == "simple9") {
    std::vector<std::string> s{"(1 3 8 4 5 2 9 7 6)", "(1 7 6 4 3 8 9 5 2)",
                               "(1 7 8 4 3 2 9 5 6)", "(1 2 7 4 6 3 9 8 5)",
                               "(1 8 5 4 2 7 9 6 3)", "(1 8 7 4 2 3 9 6 5)",
                               "(1 9 4)(2 8 6)",      "(1 9 4)(3 7 5)",
                               "(2 8 6)(3 7 5)"};
    return {name, QCycleSet::from_cycles(s, s, 9), std::nullopt};
  }
  if (name == "nonsimple6") {
    return {name,
            QCycleSet::from_cycles({"(2 4 5 3)", "(1 3 6 4)", "(1 5 6 2)", "(1 2 6 5)",
                                    "(1 4 6 3)", "(2 3 5 4)"},
                                   {}, 6),
            std::nullopt};
  }
  if (name == "primitive4") {
    return {name,
            QCycleSet::from_cycles({"(2 4 3)", "(1 3 4)", "(1 4 2)", "(1 2 3)"}, {}, 4),
            std::nullopt};
  }
  if (name == "J4") {
    auto s = j4_solution();
    return {name, from_solution(s), s};
  }
  if (name == "example_1") return fixture("SF:1");
  if (name == "D1") {
    auto data = paper_extension("D1");
    return {name, build_extension(data.base, data.pair), std::nullopt};
  }

  auto colon = name.find(':');
  if (colon == std::string::npos) throw PreconditionError("unknown fixture '" + name + "'");
  const std::string family = name.substr(0, colon);
  const std::size_t param = parse_parameter(name, name.substr(colon + 1));
  if (family == "trivial" || family == "cyclic") {
    if (param < 1) throw PreconditionError("fixture " + name + " needs a positive size");
    return {name, family == "trivial" ? trivial_set(param) : cyclic_set(param), std::nullopt};
  }
  if (family == "D2" || family == "D3" || family == "SF") {
    auto data = paper_extension(family, param);
    return {name, build_extension(data.base, data.pair), std::nullopt};
  }
  throw PreconditionError("unknown fixture '" + name + "'");
}

}  // namespace qcs
