#include "valform/errors.hpp"

namespace valform {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LayoutMismatch: return "LayoutMismatch";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FractionalExponentOnNonMonomial: return "FractionalExponentOnNonMonomial";
    case ErrorCode::MissingImage: return "MissingImage";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NonAdaptedWeights: return "NonAdaptedWeights";
    case ErrorCode::NonAdaptedPresentation: return "NonAdaptedPresentation";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::NonzeroValue: return "NonzeroValue";
    case ErrorCode::DegenerateBasis: return "DegenerateBasis";
    case ErrorCode::NonzeroFormValue: return "NonzeroFormValue";
    case ErrorCode::RankNotOne: return "RankNotOne";
    case ErrorCode::NonpositiveHValue: return "NonpositiveHValue";
    case ErrorCode::InconsistentSpan: return "InconsistentSpan";
    case ErrorCode::NotLcPlace: return "NotLcPlace";
    case ErrorCode::NonzeroBoundaryValue: return "NonzeroBoundaryValue";
    case ErrorCode::ZeroSeries: return "ZeroSeries";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::FrameMismatch: return "FrameMismatch";
    case ErrorCode::NotInValuationRing: return "NotInValuationRing";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SpecFormat: return "SpecFormat";
  }
  return "Unknown";
}

Error::Error(std::string module, ErrorCode code, const std::string& detail)
    : std::runtime_error(module + ": " + std::string(to_string(code)) +
                         (detail.empty() ? "" : ": " + detail)),
      module_(std::move(module)),
      code_(code),
      detail_(detail) {}

}  // namespace valform
