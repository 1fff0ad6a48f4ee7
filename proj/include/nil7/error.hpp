#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nil7 {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  ZeroInput,
  NotASquare,
  UnsupportedField,
  NotAnExtensionField,
  InvalidField,
  SquareClassBoundExceeded,
  Singular,
  NotSymmetric,
  DimensionMismatch,
  AmbientMismatch,
  DegreeMismatch,
  NotNilpotent,
  NotMinimal,
  NotFlat,
  BadSignature,
  WrongDimension,
  WrongLength,
  ZeroBivector,
  DependentPencil,
  DependentNet,
  UnexpectedGcdDegree,
  RationalPointSearchExceeded,
  ZeroForm,
  NotRank3,
  DividesP,
  BadPlace,
  ZeroParameter,
  AlgebraMismatch,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nil7
