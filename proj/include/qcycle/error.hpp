#pragma once

#include <stdexcept>
#include <string>

namespace qcs {

// Values match the CLI exit codes.
enum class ErrorKind : int {
  invalid_structure = 1,
  precondition = 2,
  parse = 3,
  bound_exceeded = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A table or map that does not describe a valid structure (non-bijective
/// row, failed axiom, shape mismatch).
class InvalidStructure : public Error {
 public:
  explicit InvalidStructure(const std::string& what)
      : Error(ErrorKind::invalid_structure, what) {}
};

/// The input is well formed but outside the domain of the requested
/// operation (e.g. primitive level of a decomposable q-cycle set).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::precondition, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
};

class BoundExceeded : public Error {
 public:
  explicit BoundExceeded(const std::string& what)
      : Error(ErrorKind::bound_exceeded, what) {}
};

}  // namespace qcs
