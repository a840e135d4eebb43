#include "regdissect/errors.hpp"

namespace regdissect {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kUnknownSymbol: return "UnknownSymbol";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kEmptyWord: return "EmptyWord";
    case ErrorKind::kBadResidue: return "BadResidue";
    case ErrorKind::kAlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::kSyntaxError: return "SyntaxError";
    case ErrorKind::kUndefinedSymbol: return "UndefinedSymbol";
    case ErrorKind::kEmptyLanguage: return "EmptyLanguage";
    case ErrorKind::kInferenceFailed: return "InferenceFailed";
    case ErrorKind::kFiniteSet: return "FiniteSet";
    case ErrorKind::kFiniteLanguage: return "FiniteLanguage";
    case ErrorKind::kStrategyFailed: return "StrategyFailed";
    case ErrorKind::kNoPeriodRow: return "NoPeriodRow";
    case ErrorKind::kBadTriple: return "BadTriple";
    case ErrorKind::kCoverCheckFailed: return "CoverCheckFailed";
    case ErrorKind::kIllFormed: return "IllFormed";
    case ErrorKind::kNoBoundDerived: return "NoBoundDerived";
    case ErrorKind::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace regdissect
