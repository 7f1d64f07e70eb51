#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace clat {

// Error taxonomy shared by every module. The names returned by
// error_name() are part of the CLI's structured error payload.
enum class ErrorCode {
  kDimensionMismatch,
  kNonFinite,
  kSingularMatrix,
  kNotSelfAdjoint,
  kNotPositiveDefinite,
  kNotInSplitClass,
  kNotInNormalizedClass,
  kNotReal,
  kSingularM,
  kNotInSL,
  kRankDeficient,
  kNonIntegralEntry,
  kAmbiguousRounding,
  kDeterminantNotOne,
  kFirstBlockSingular,
  kPeriodMatrixSingular,
  kDimensionTooLarge,
  kHeightTooLarge,
  kRadiusBudgetExceeded,
  kLatticeMismatch,
  kMajorizationFails,
  kInternalError,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace clat
