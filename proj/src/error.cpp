#include "tropical/error.hpp"

namespace trop {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MismatchedDescriptor: return "MismatchedDescriptor";
    case Errc::NotDoubled: return "NotDoubled";
    case Errc::NonPositive: return "NonPositive";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NotUnivariate: return "NotUnivariate";
    case Errc::NotTangible: return "NotTangible";
    case Errc::NoRoots: return "NoRoots";
    case Errc::UnsupportedDescriptor: return "UnsupportedDescriptor";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::TooLarge: return "TooLarge";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NonTangibleRHS: return "NonTangibleRHS";
    case Errc::TooManyVectors: return "TooManyVectors";
    case Errc::EmptySet: return "EmptySet";
    case Errc::NotFound: return "NotFound";
    case Errc::NotMultilinear: return "NotMultilinear";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::NotARoot: return "NotARoot";
    case Errc::Overflow: return "Overflow";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace trop
