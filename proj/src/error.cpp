#include "semireg/error.hpp"

#include <utility>

namespace semireg {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DependentGenerators: return "DependentGenerators";
    case ErrorKind::NoSeparator: return "NoSeparator";
    case ErrorKind::LineInCone: return "LineInCone";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSubsemigroup: return "NotSubsemigroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotSupported: return "NotSupported";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::ImproperIdeal: return "ImproperIdeal";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::UnitEntry: return "UnitEntry";
    case ErrorKind::GeneratorCap: return "GeneratorCap";
    case ErrorKind::NotFull: return "NotFull";
    case ErrorKind::UnsupportedTag: return "UnsupportedTag";
    case ErrorKind::FinitelyGeneratedInput: return "FinitelyGeneratedInput";
    case ErrorKind::UnitInput: return "UnitInput";
    case ErrorKind::CertificateUnverified: return "CertificateUnverified";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::string witness)
    : std::runtime_error(std::string(error_name(kind)) + ": " + message),
      kind_(kind),
      message_(message),
      witness_(std::move(witness)) {}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      message_(message),
      position_(position) {}

}  // namespace semireg
