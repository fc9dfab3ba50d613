#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tnorm {

enum class ErrorCode {
  NotSquare,
  NonMonic,
  InvalidArgument,
  DimensionMismatch,
  BadReductionPrime,
  NotNonnegative,
  NotPrimitive,
  NoConvergence,
  DegenerateMonodromy,
  NotAField,
  IrreducibilityUnverified,
  EmbeddingMismatch,
  BackwardTelescope,
  TooFewLevels,
  GenusTooSmall,
  ProngTooSmall,
  CardinalityOutOfRange,
  IndexSumMismatch,
  ActionDimensionMismatch,
  NegativeNorm,
  PositivityUndecided,
  NotABundle,
  MissingArgument,
  ParseError,
  UsageError,
  ConeAxiomViolation,
};

constexpr std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NonMonic: return "NonMonic";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadReductionPrime: return "BadReductionPrime";
    case ErrorCode::NotNonnegative: return "NotNonnegative";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateMonodromy: return "DegenerateMonodromy";
    case ErrorCode::NotAField: return "NotAField";
    case ErrorCode::IrreducibilityUnverified: return "IrreducibilityUnverified";
    case ErrorCode::EmbeddingMismatch: return "EmbeddingMismatch";
    case ErrorCode::BackwardTelescope: return "BackwardTelescope";
    case ErrorCode::TooFewLevels: return "TooFewLevels";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::ProngTooSmall: return "ProngTooSmall";
    case ErrorCode::CardinalityOutOfRange: return "CardinalityOutOfRange";
    case ErrorCode::IndexSumMismatch: return "IndexSumMismatch";
    case ErrorCode::ActionDimensionMismatch: return "ActionDimensionMismatch";
    case ErrorCode::NegativeNorm: return "NegativeNorm";
    case ErrorCode::PositivityUndecided: return "PositivityUndecided";
    case ErrorCode::NotABundle: return "NotABundle";
    case ErrorCode::MissingArgument: return "MissingArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::ConeAxiomViolation: return "ConeAxiomViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Input-document failure, tagged with the 1-based source line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) throw Error(code, message);
}

}  // namespace tnorm
