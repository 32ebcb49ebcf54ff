#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace valform {

enum class ErrorCode {
  DimensionMismatch,
  LayoutMismatch,
  ContextMismatch,
  DivisionByZero,
  FractionalExponentOnNonMonomial,
  MissingImage,
  SizeMismatch,
  UnknownVariable,
  NonAdaptedWeights,
  NonAdaptedPresentation,
  ZeroPolynomial,
  ZeroFunction,
  NonzeroValue,
  DegenerateBasis,
  NonzeroFormValue,
  RankNotOne,
  NonpositiveHValue,
  InconsistentSpan,
  NotLcPlace,
  NonzeroBoundaryValue,
  ZeroSeries,
  GroupMismatch,
  FrameMismatch,
  NotInValuationRing,
  InvalidArgument,
  SyntaxError,
  SpecFormat,
};

std::string_view to_string(ErrorCode code);

// Every library failure carries the module that raised it and a stable code.
class Error : public std::runtime_error {
 public:
  Error(std::string module, ErrorCode code, const std::string& detail);

  const std::string& module() const noexcept { return module_; }
  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string module_;
  ErrorCode code_;
  std::string detail_;
};

}  // namespace valform
