#include "lcgf2/error.hpp"

namespace lcgf2 {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::AsymmetricMatrix: return "AsymmetricMatrix";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::LabelMismatch: return "LabelMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::SingularPrincipalSubmatrix: return "SingularPrincipalSubmatrix";
    case Errc::ZeroDiagonalViolation: return "ZeroDiagonalViolation";
    case Errc::SizeCapExceeded: return "SizeCapExceeded";
    case Errc::ZeroRow: return "ZeroRow";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::NotDoubleOccurrence: return "NotDoubleOccurrence";
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::GraphMismatch: return "GraphMismatch";
    case Errc::CircuitNotInPartition: return "CircuitNotInPartition";
    case Errc::NotAnEulerSystem: return "NotAnEulerSystem";
    case Errc::NoMatchingPartition: return "NoMatchingPartition";
  }
  return "Unknown";
}

void invariant_failure(const std::string& what) {
  throw std::logic_error("invariant violated: " + what);
}

}  // namespace lcgf2
