#include "clat/error.hpp"

namespace clat {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kNotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorCode::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::kNotInSplitClass: return "NotInSplitClass";
    case ErrorCode::kNotInNormalizedClass: return "NotInNormalizedClass";
    case ErrorCode::kNotReal: return "NotReal";
    case ErrorCode::kSingularM: return "SingularM";
    case ErrorCode::kNotInSL: return "NotInSL";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kNonIntegralEntry: return "NonIntegralEntry";
    case ErrorCode::kAmbiguousRounding: return "AmbiguousRounding";
    case ErrorCode::kDeterminantNotOne: return "DeterminantNotOne";
    case ErrorCode::kFirstBlockSingular: return "FirstBlockSingular";
    case ErrorCode::kPeriodMatrixSingular: return "PeriodMatrixSingular";
    case ErrorCode::kDimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::kHeightTooLarge: return "HeightTooLarge";
    case ErrorCode::kRadiusBudgetExceeded: return "RadiusBudgetExceeded";
    case ErrorCode::kLatticeMismatch: return "LatticeMismatch";
    case ErrorCode::kMajorizationFails: return "MajorizationFails";
    case ErrorCode::kInternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace clat
