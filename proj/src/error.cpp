#include "chiy/error.hpp"

namespace chiy {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::PoleAtTheta: return "PoleAtTheta";
    case ErrorKind::ZeroTheta: return "ZeroTheta";
    case ErrorKind::DivergesAtLimit: return "DivergesAtLimit";
    case ErrorKind::PoleAtZero: return "PoleAtZero";
    case ErrorKind::ZeroWeight: return "ZeroWeight";
    case ErrorKind::NonGenericCocharacter: return "NonGenericCocharacter";
    case ErrorKind::DuplicateWeights: return "DuplicateWeights";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::NonSmoothCone: return "NonSmoothCone";
    case ErrorKind::IncompleteFan: return "IncompleteFan";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::NonConstantSum: return "NonConstantSum";
    case ErrorKind::MissingPoincare: return "MissingPoincare";
    case ErrorKind::InconsistentDelta: return "InconsistentDelta";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

}  // namespace chiy
