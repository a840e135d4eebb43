#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace regdissect {

enum class ErrorKind {
  kInvalidArgument,
  kUnknownSymbol,
  kDimensionMismatch,
  kEmptyWord,
  kBadResidue,
  kAlphabetMismatch,
  kSyntaxError,
  kUndefinedSymbol,
  kEmptyLanguage,
  kInferenceFailed,
  kFiniteSet,
  kFiniteLanguage,
  kStrategyFailed,
  kNoPeriodRow,
  kBadTriple,
  kCoverCheckFailed,
  kIllFormed,
  kNoBoundDerived,
  kIoError,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this one exception type; the
// kind tells callers (and the CLI's exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse errors carry the 1-based line they were detected on (0 if unknown).
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& message)
      : Error(ErrorKind::kSyntaxError,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace regdissect
