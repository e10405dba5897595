#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcgf2 {

enum class Errc {
  InvalidInput,
  AsymmetricMatrix,
  DuplicateLabel,
  UnknownLabel,
  LabelMismatch,
  SingularMatrix,
  SingularPrincipalSubmatrix,
  ZeroDiagonalViolation,
  SizeCapExceeded,
  ZeroRow,
  NotAnEdge,
  NotDoubleOccurrence,
  EmptyWord,
  InvalidGraph,
  GraphMismatch,
  CircuitNotInPartition,
  NotAnEulerSystem,
  NoMatchingPartition,
};

const char* errc_name(Errc code) noexcept;

/// Recoverable failure of a library operation on invalid or unsuitable input.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// A matrix (or relative interlacement matrix) turned out to be singular.
/// Carries the GF(2) nullity so callers can report it.
class SingularityError : public Error {
 public:
  SingularityError(Errc code, const std::string& what, std::size_t nullity)
      : Error(code, what), nullity_(nullity) {}

  std::size_t nullity() const noexcept { return nullity_; }

 private:
  std::size_t nullity_;
};

// A violated internal invariant. These guard identities that must hold for
// every valid input; reaching one means the implementation is wrong.
[[noreturn]] void invariant_failure(const std::string& what);

inline void ensure(bool condition, const char* what) {
  if (!condition) invariant_failure(what);
}

}  // namespace lcgf2
