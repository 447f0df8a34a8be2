#include "renyi/error.hpp"

namespace renyi {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::SingularPower: return "SingularPower";
    case ErrorCode::NotPsd: return "NotPsd";
    case ErrorCode::NotPd: return "NotPd";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::BetaOne: return "BetaOne";
    case ErrorCode::BetaOutOfRange: return "BetaOutOfRange";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NegativeProbability: return "NegativeProbability";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::AlphaOne: return "AlphaOne";
    case ErrorCode::NotDensity: return "NotDensity";
    case ErrorCode::SigmaSingular: return "SigmaSingular";
    case ErrorCode::TraceNonpositive: return "TraceNonpositive";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::MarginalSingular: return "MarginalSingular";
    case ErrorCode::OptimizerFailure: return "OptimizerFailure";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::BadZeros: return "BadZeros";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::BadKind: return "BadKind";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
  }
  return "Unknown";
}

}  // namespace renyi
