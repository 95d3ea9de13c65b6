#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trop {

/// Error kinds raised by the kernel. The names are part of the CLI contract.
enum class Errc {
  MismatchedDescriptor,
  NotDoubled,
  NonPositive,
  ArityMismatch,
  NotUnivariate,
  NotTangible,
  NoRoots,
  UnsupportedDescriptor,
  ShapeMismatch,
  NotSquare,
  TooLarge,
  IndexOutOfRange,
  SingularMatrix,
  NonTangibleRHS,
  TooManyVectors,
  EmptySet,
  NotFound,
  NotMultilinear,
  HypothesisViolated,
  NotARoot,
  Overflow,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace trop
