#ifndef MOCURVE_ERROR_HPP
#define MOCURVE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mocurve {

enum class ErrorCode {
  DegreeMismatch,
  FieldMismatch,
  InvalidField,
  DivisionByZero,
  ZeroInput,
  NotAPower,
  NotDivisible,
  Syntax,
  NotHomogeneous,
  CommonFactor,
  DegenerateImage,
  RootFailure,
  CrossProductFailure,
  NoDecomposition,
  NonSquare,
  ZeroDeterminant,
  NotImplicit,
  Unstable,
  BoxTooSmall,
  InvalidArgument,
};

/// Stable upper-case identifier, e.g. "NOT-A-POWER". Used in CLI error JSON.
std::string_view to_string(ErrorCode code) noexcept;

/// True for codes that indicate bad user input rather than an internal fault.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mocurve

#endif  // MOCURVE_ERROR_HPP
