#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcycle/extension.hpp"
#include "qcycle/structures.hpp"

namespace qcs {

enum class DocumentKind { q_cycle_set, solution };

/// One parsed table document, 0-based, before any structural validation.
/// For q-cycle sets `first` is dot and `second` colon; for solutions they
/// are lambda and rho.  Entries are in range and rows have length n, but
/// bijectivity and the axioms are not checked.
struct TableDocument {
  DocumentKind kind = DocumentKind::q_cycle_set;
  std::size_t n = 0;
  Rows first;
  Rows second;
};

enum class Format { text, json };

/// Accepts the text format or JSON (one object, or an array of objects),
/// detected from the first non-blank character.  Throws ParseError.
std::vector<TableDocument> parse_documents(std::string_view input);
/// Exactly one document.
TableDocument parse_document(std::string_view input);

/// Throw InvalidStructure when the tables do not describe a value of the
/// requested kind, and PreconditionError when the document has the other
/// kind.
QCycleSet to_qcycle_set(const TableDocument& doc);
Solution to_solution_value(const TableDocument& doc);

QCycleSet parse_qcycle_set(std::string_view input);
Solution parse_solution(std::string_view input);

nlohmann::ordered_json to_json(const QCycleSet& X);
nlohmann::ordered_json to_json(const Solution& s);

std::string serialize(const QCycleSet& X, Format format = Format::text);
std::string serialize(const Solution& s, Format format = Format::text);
/// Text documents separated by blank lines, or one JSON array.
std::string serialize(const std::vector<QCycleSet>& sets, Format format = Format::text);

/// Header "n m", then n*n*m lines "x y s : images" for alpha followed by the
/// same for alpha_prime, all 1-based.  Lines within a table may come in any
/// order.  Throws ParseError, or InvalidStructure for a non-bijective alpha
/// slice.
DynamicalPair parse_pair(std::string_view input);
std::string serialize(const DynamicalPair& P);

/// Whole contents of a file, or of standard input for "-".  Throws
/// ParseError when the file cannot be read.
std::string read_input(const std::string& path);

}  // namespace qcs
