#pragma once

#include <stdexcept>
#include <string>

namespace rhh {

enum class ErrorCode {
  // exactla
  NotPrime,
  DimensionMismatch,
  ContainmentViolation,
  NotACocycle,
  // algebra
  AssociativityViolation,
  UnitViolation,
  TruncationTooSmall,
  BadParameter,
  // hochschild
  DegreeUnderflow,
  WrongParity,
  EvenCharacteristic,
  EmptySubset,
  ResourceBound,
  // liealg
  NotASubalgebra,
  IncoherentPMap,
  RewriteDivergence,
  // verify
  NoConsistentConvention,
  AmbiguousConvention,
  ParityViolation,
  // io
  ParseError,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// message names the offending index, field or value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rhh
