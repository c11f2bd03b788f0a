#include "periodlab/errors.hpp"

namespace periodlab {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::MismatchedModulus: return "MismatchedModulus";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::BadCongruence: return "BadCongruence";
    case Errc::TrivialCharacter: return "TrivialCharacter";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::UnsupportedPrime: return "UnsupportedPrime";
    case Errc::ComplexRoots: return "ComplexRoots";
    case Errc::QuadratureNoConvergence: return "QuadratureNoConvergence";
    case Errc::DegenerateLattice: return "DegenerateLattice";
    case Errc::ReductionNoConvergence: return "ReductionNoConvergence";
    case Errc::DegenerateFamilyMember: return "DegenerateFamilyMember";
    case Errc::PoleAtNonpositiveInteger: return "PoleAtNonpositiveInteger";
    case Errc::NonUnit: return "NonUnit";
    case Errc::MismatchedStructure: return "MismatchedStructure";
    case Errc::InsufficientPrecision: return "InsufficientPrecision";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace periodlab
