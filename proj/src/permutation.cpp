#include "qcycle/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qcycle/error.hpp"

namespace qcs {

bool is_bijection(std::span<const Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (!is_bijection(images_)) {
    throw InvalidStructure("image list is not a bijection of {1.." +
                           std::to_string(images_.size()) + "}");
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(std::string_view cycles, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < cycles.size() && (cycles[pos] == ' ' || cycles[pos] == '\t' ||
                                   cycles[pos] == ',')) {
      ++pos;
    }
  };
  skip_space();
  while (pos < cycles.size()) {
    if (cycles[pos] != '(') {
      throw ParseError("expected '(' in cycle notation: " + std::string(cycles));
    }
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (pos >= cycles.size()) {
        throw ParseError("unterminated cycle: " + std::string(cycles));
      }
      if (cycles[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t value = 0;
      std::size_t digits = 0;
      while (pos < cycles.size() && cycles[pos] >= '0' && cycles[pos] <= '9') {
        value = value * 10 + static_cast<std::size_t>(cycles[pos] - '0');
        ++pos;
        ++digits;
      }
      if (digits == 0) {
        throw ParseError("unexpected character in cycle notation: " +
                         std::string(cycles));
      }
      if (value < 1 || value > degree) {
        throw ParseError("point " + std::to_string(value) + " outside 1.." +
                         std::to_string(degree));
      }
      Point p = static_cast<Point>(value - 1);
      if (used[p]) {
        throw ParseError("cycles are not disjoint: " + std::string(cycles));
      }
      used[p] = true;
      cycle.push_back(p);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    skip_space();
  }
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<Point>(i);
  }
  return Permutation(std::move(inv), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point p = static_cast<Point>(i); !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, len);
  return result;
}

std::size_t Permutation::fixed_point_count() const noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == i) ++count;
  }
  return count;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    bool first = true;
    for (Point p = static_cast<Point>(i); !seen[p]; p = images_[p]) {
      seen[p] = true;
      if (!first) out << ' ';
      out << (p + 1);
      first = false;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::vector<Point> Permutation::image_of(std::span<const Point> set) const {
  std::vector<Point> out;
  out.reserve(set.size());
  for (Point p : set) out.push_back(images_[p]);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation compose(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) {
    throw PreconditionError("cannot compose permutations of degree " +
                            std::to_string(g.degree()) + " and " +
                            std::to_string(h.degree()));
  }
  std::vector<Point> images(g.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = g.images_[h.images_[i]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

}  // namespace qcs
