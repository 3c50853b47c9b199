#include "og6/errors.hpp"

namespace og6 {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotEven: return "NotEven";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::InvalidTag: return "InvalidTag";
    case ErrorKind::LatticeMismatch: return "LatticeMismatch";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NotDual: return "NotDual";
    case ErrorKind::NotIsotropic: return "NotIsotropic";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::ZeroNorm: return "ZeroNorm";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NotIsometry: return "NotIsometry";
    case ErrorKind::NegativeDefinite: return "NegativeDefinite";
    case ErrorKind::NotInOtilde: return "NotInOtilde";
    case ErrorKind::NotFiniteIndex: return "NotFiniteIndex";
    case ErrorKind::NormNotTwo: return "NormNotTwo";
    case ErrorKind::NotIsometryOfComplement: return "NotIsometryOfComplement";
    case ErrorKind::NoU2Decomposition: return "NoU2Decomposition";
    case ErrorKind::OrbitMismatch: return "OrbitMismatch";
    case ErrorKind::NotInSOPlus: return "NotInSOPlus";
    case ErrorKind::WrongLattice: return "WrongLattice";
    case ErrorKind::NotInDomain: return "NotInDomain";
    case ErrorKind::PDNotIsometry: return "PDNotIsometry";
    case ErrorKind::SquareNotTwo: return "SquareNotTwo";
    case ErrorKind::NotInOPlus: return "NotInOPlus";
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotInSpan: return "NotInSpan";
    case ErrorKind::NonIntegralResult: return "NonIntegralResult";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::InternalCaseFailure: return "InternalCaseFailure";
  }
  return "Unknown";
}

bool is_internal(ErrorKind kind) {
  return kind == ErrorKind::NonIntegralResult || kind == ErrorKind::SearchExhausted ||
         kind == ErrorKind::InternalCaseFailure;
}

}  // namespace og6
