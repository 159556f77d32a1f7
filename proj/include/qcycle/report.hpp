#pragma once

#include <string>

#include <json.hpp>

#include "qcycle/io.hpp"
#include "qcycle/structures.hpp"

namespace qcs {

/// Version of the structured analysis report; bumped when fields change.
inline constexpr int kReportSchemaVersion = 1;

/// Every invariant of X with its witnessing data.  Fields that need a
/// regular (or indecomposable) structure are null when they do not apply;
/// primitive_level is then the string "undefined".  Deterministic.
nlohmann::ordered_json analysis_report(const QCycleSet& X);

/// Solution-level data (involutive, braid relation, G(X,r), F) followed by
/// the report of the corresponding q-cycle set under "q_cycle_set".
nlohmann::ordered_json analysis_report(const Solution& s);

/// Axiom, regularity, and non-degeneracy checks on raw tables; "valid"
/// says whether the document describes a q-cycle set (resp. a solution).
nlohmann::ordered_json verify_report(const TableDocument& doc);

/// Congruences of X and the quotient by each, marking images that are
/// primitive and those isomorphic to an earlier one.
nlohmann::ordered_json quotients_report(const QCycleSet& X);

/// Indented "key: value" lines; arrays of scalars on one line.
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace qcs
