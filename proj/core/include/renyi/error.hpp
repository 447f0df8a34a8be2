#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace renyi {

enum class ErrorCode {
  NonHermitianInput,
  ConvergenceFailure,
  SingularPower,
  NotPsd,
  NotPd,
  DimensionMismatch,
  DomainError,
  BetaOne,
  BetaOutOfRange,
  EmptySupport,
  NotNormalized,
  NegativeProbability,
  NonFinite,
  AlphaOutOfRange,
  AlphaOne,
  NotDensity,
  SigmaSingular,
  TraceNonpositive,
  NotBipartite,
  MarginalSingular,
  OptimizerFailure,
  BadRank,
  BadZeros,
  UnknownSuite,
  BadKind,
  IoError,
  ParseError,
  DimensionTooLarge,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception. `field` names
// the offending input (argument or file key) when one can be identified.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string field = {})
      : std::runtime_error(message), code_(code), field_(std::move(field)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

}  // namespace renyi
