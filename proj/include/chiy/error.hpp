#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chiy {

enum class ErrorKind {
  InvalidArgument,
  // exact_algebra
  PoleAtTheta,
  ZeroTheta,
  DivergesAtLimit,
  PoleAtZero,
  // fixed_point_model / builders
  ZeroWeight,
  NonGenericCocharacter,
  DuplicateWeights,
  BadRange,
  NonSmoothCone,
  IncompleteFan,
  ParseError,
  SchemaError,
  ValidationError,
  // localization_engine
  NotIsolated,
  NonConstantSum,
  MissingPoincare,
  // weight_recovery
  InconsistentDelta,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the engine carries a kind so callers (the CLI in
/// particular) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace chiy
