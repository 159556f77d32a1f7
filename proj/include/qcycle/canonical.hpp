#pragma once

#include "qcycle/structures.hpp"

namespace qcs {

struct CanonicalLabeling {
  QCycleSet form;
  /// Old label -> new label; form == X.relabel(relabeling).
  Permutation relabeling;
};

/// The relabeling of X whose tables, read row by row with dot row x followed
/// by colon row x, are lexicographically least.  Isomorphic inputs give
/// equal forms.
CanonicalLabeling canonical_labeling(const QCycleSet& X);
QCycleSet canonical_form(const QCycleSet& X);

}  // namespace qcs
