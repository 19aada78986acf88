#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semireg {

enum class ErrorKind {
  DependentGenerators,
  NoSeparator,
  LineInCone,
  UnsupportedDimension,
  DimensionMismatch,
  NotSubsemigroup,
  NotNormal,
  NotPositive,
  NotSupported,
  WindowTooSmall,
  PreconditionFailed,
  NoSolution,
  ImproperIdeal,
  NotCoprime,
  UnitEntry,
  GeneratorCap,
  NotFull,
  UnsupportedTag,
  FinitelyGeneratedInput,
  UnitInput,
  CertificateUnverified,
  Overflow,
};

const char* error_name(ErrorKind kind);

// Domain error. `witness` is a rendered counterexample when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string witness = {});

  ErrorKind kind() const { return kind_; }
  const std::string& witness() const { return witness_; }
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
  std::string witness_;
};

// Malformed textual input; `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

}  // namespace semireg
