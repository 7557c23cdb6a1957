#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gaussnorm {

enum class Errc {
  kSingularMatrix,
  kNotSymmetric,
  kSingularCosine,
  kNoConvergence,
  kNotPositiveDefinite,
  kNotPositive,
  kPoleAtGamma,
  kExceptionalTime,
  kNotElliptic,
  kCharacterizationMismatch,
  kDimensionMismatch,
  kNotIntegrable,
  kSingularD,
  kOutsideRegion,
  kUnbounded,
  kNotOscillatorType,
  kNotPlurisubharmonic,
  kInternalContractViolation,
  kNonIntegrableFiber,
  kNonIntegrableComposition,
  kGridTooCoarse,
  kQuadratureOverflow,
  kDivergent,
  kGridGuard,
  kInvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure in the library is reported through this type. Some errors
// carry a numeric payload: the best estimate for kNoConvergence, the offending
// spectral norm or a - b deficit for kUnbounded.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<double> value = std::nullopt)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), value_(value) {}

  Errc code() const noexcept { return code_; }
  std::optional<double> value() const noexcept { return value_; }

 private:
  Errc code_;
  std::optional<double> value_;
};

}  // namespace gaussnorm
