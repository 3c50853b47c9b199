#pragma once

#include <stdexcept>
#include <string>

namespace og6 {

enum class ErrorKind {
  InvalidInput,
  DimensionMismatch,
  NotSymmetric,
  NotEven,
  Degenerate,
  InvalidTag,
  LatticeMismatch,
  ZeroVector,
  NotPrimitive,
  NotDual,
  NotIsotropic,
  NotOrthogonal,
  ZeroNorm,
  NotIntegral,
  NotIsometry,
  NegativeDefinite,
  NotInOtilde,
  NotFiniteIndex,
  NormNotTwo,
  NotIsometryOfComplement,
  NoU2Decomposition,
  OrbitMismatch,
  NotInSOPlus,
  WrongLattice,
  NotInDomain,
  PDNotIsometry,
  SquareNotTwo,
  NotInOPlus,
  NotHyperbolic,
  NotPositive,
  NotInSpan,
  // internal failures: a postcondition did not hold
  NonIntegralResult,
  SearchExhausted,
  InternalCaseFailure,
};

const char* to_string(ErrorKind kind);

/// Internal kinds signal a broken postcondition rather than bad input.
bool is_internal(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  bool internal() const noexcept { return is_internal(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace og6
