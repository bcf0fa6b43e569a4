#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pal {

enum class ErrorKind {
  Cycle,
  DuplicateName,
  UnknownElement,
  SizeLimit,
  EnumerationOverflow,
  ClosureOverflow,
  PosetMismatch,
  NotUpClosed,
  BadArity,
  NotOrderPreserving,
  NotAnEmbedding,
  PremiseFailed,
  NotDirected,
  NotCofinal,
  Parse,
};

const char* to_string(ErrorKind kind);

/// All library failures. `witness` carries element names (or other tokens)
/// that let a caller replay the failing case.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<std::string> witness = {})
      : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witness_;
};

}  // namespace pal
