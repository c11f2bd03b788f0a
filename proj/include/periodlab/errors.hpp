#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace periodlab {

enum class Errc {
  NotPrime,
  MismatchedModulus,
  DivisionByZero,
  BadCongruence,
  TrivialCharacter,
  SingularCurve,
  UnsupportedDegree,
  UnsupportedPrime,
  ComplexRoots,
  QuadratureNoConvergence,
  DegenerateLattice,
  ReductionNoConvergence,
  DegenerateFamilyMember,
  PoleAtNonpositiveInteger,
  NonUnit,
  MismatchedStructure,
  InsufficientPrecision,
  InvalidArgument,
  Overflow,
};

std::string_view errc_name(Errc code) noexcept;

/// Domain error raised by every library operation. The code is stable and
/// is what the CLI reports; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace periodlab
