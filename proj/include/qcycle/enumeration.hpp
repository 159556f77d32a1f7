#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcycle/structures.hpp"

namespace qcs {

enum class Kind { q_cycle_set, cycle_set };

enum class Property {
  regular,
  indecomposable,
  square_free,
  irretractable,
  simple,
  left_self_distributive,
  right_self_distributive,
  self_distributive,  // left or right
  cycle_set,
  primitive,
};

enum class Filter { require, forbid, ignore };

std::string to_string(Kind kind);
std::string to_string(Property p);
/// Accepts the names printed by to_string and a few short forms
/// ("qcs", "cs", "sd", "left_sd", "right_sd").  Throws ParseError.
Kind parse_kind(const std::string& text);
Property parse_property(const std::string& text);

/// Evaluates a property.  Everything except `regular` and `cycle_set` is
/// false on a non-regular structure; `simple` and `primitive` are false on
/// a single point.
bool has_property(const QCycleSet& X, Property p);

struct EnumerationQuery {
  std::size_t order = 1;
  Kind kind = Kind::q_cycle_set;
  /// Properties not listed are ignored, except `regular`, which defaults
  /// to require.
  std::map<Property, Filter> filters;
  /// When false every labelled structure is produced, not one per
  /// isomorphism class.
  bool canonicalize = true;
  bool override_bounds = false;
  /// Worker threads; results are identical for any value.
  std::size_t workers = 1;

  Filter filter(Property p) const;
};

struct EnumerationBounds {
  std::size_t q_cycle_sets = 5;
  std::size_t cycle_sets = 7;
};

/// Calls `emit` once per structure satisfying the filters, in increasing
/// lexicographic order of tables.  With canonicalize set, each emitted
/// structure is its own canonical form.  Throws BoundExceeded when the
/// order is above the bound for its kind and override_bounds is not set.
void enumerate(const EnumerationQuery& query, const std::function<void(const QCycleSet&)>& emit,
               const EnumerationBounds& bounds = {});

std::vector<QCycleSet> enumerate_all(const EnumerationQuery& query,
                                     const EnumerationBounds& bounds = {});

struct Profile {
  bool indecomposable = false;
  bool primitive = false;
  bool square_free = false;
  bool simple = false;
  /// Empty when not multipermutational.
  std::optional<std::size_t> mpl;

  friend auto operator<=>(const Profile&, const Profile&) = default;
};

struct CountReport {
  Kind kind = Kind::q_cycle_set;
  /// order -> profile -> number of isomorphism classes.
  std::map<std::size_t, std::map<Profile, std::size_t>> cells;
  std::map<std::size_t, std::size_t> totals;
};

Profile profile_of(const QCycleSet& X);

/// Regular structures of each order in [from, to], tallied by profile.
CountReport count_report(std::size_t from, std::size_t to, Kind kind, bool override_bounds = false,
                         const EnumerationBounds& bounds = {});

}  // namespace qcs
