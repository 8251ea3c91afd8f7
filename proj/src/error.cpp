#include "rhh/error.hpp"

namespace rhh {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ContainmentViolation: return "ContainmentViolation";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::AssociativityViolation: return "AssociativityViolation";
    case ErrorCode::UnitViolation: return "UnitViolation";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::DegreeUnderflow: return "DegreeUnderflow";
    case ErrorCode::WrongParity: return "WrongParity";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::ResourceBound: return "ResourceBound";
    case ErrorCode::NotASubalgebra: return "NotASubalgebra";
    case ErrorCode::IncoherentPMap: return "IncoherentPMap";
    case ErrorCode::RewriteDivergence: return "RewriteDivergence";
    case ErrorCode::NoConsistentConvention: return "NoConsistentConvention";
    case ErrorCode::AmbiguousConvention: return "AmbiguousConvention";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace rhh
