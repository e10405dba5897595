#pragma once

// Symmetric GF(2) matrix algebra: rank and nullspace, inversion, principal
// pivot transforms, simple and non-simple local complements, pivots, modified
// inverses, and the constructions that relate local complementation to
// modified inversion.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lcgf2/sym_matrix.hpp"

namespace lcgf2 {

inline constexpr std::size_t kDefaultModifiedInverseCap = 20;

struct RankNullity {
  std::size_t rank = 0;
  std::size_t nullity = 0;
  friend bool operator==(const RankNullity&, const RankNullity&) = default;
};

RankNullity rank_nullity(const SymMatrix& m);
bool is_nonsingular(const SymMatrix& m);

/// Reduced-echelon basis of {x : x * M = 0}.
std::vector<Gf2Vector> nullspace_basis(const SymMatrix& m);

/// Throws SingularityError(SingularMatrix) carrying the nullity.
SymMatrix inverse(const SymMatrix& m);

/// M * X. Throws SingularityError(SingularPrincipalSubmatrix) when M[X,X] is
/// singular.
SymMatrix principal_pivot_transform(const SymMatrix& m, const VertexSet& x);
SymMatrix principal_pivot_transform(const SymMatrix& m, std::span<const std::size_t> x);

/// S^i: toggles s_jk for every pair of distinct neighbours j, k of i.
SymMatrix simple_local_complement(const SymMatrix& s, std::size_t i);
SymMatrix simple_local_complement(const SymMatrix& s, std::string_view i);

/// S^i followed by toggling s_jj at every neighbour j of i.
SymMatrix nonsimple_local_complement(const SymMatrix& s, std::size_t i);
SymMatrix nonsimple_local_complement(const SymMatrix& s, std::string_view i);

/// Pivot on the edge ij, computed as ((S^i)^j)^i and checked against
/// ((S^j)^i)^j. Diagonal entries are not constrained. Requires s_ij = 1
/// (throws NotAnEdge): without the edge the two triple compositions differ.
SymMatrix pivot(const SymMatrix& s, std::size_t i, std::size_t j);
SymMatrix pivot(const SymMatrix& s, std::string_view i, std::string_view j);

SymMatrix toggle_diagonal(const SymMatrix& m, const DiagonalMask& w);
SymMatrix toggle_diagonal(const SymMatrix& m, const BitVector& mask);
SymMatrix zero_diagonal(const SymMatrix& m);

/// One successful completion S + D and the modified inverse it produces.
struct ModifiedInverseMove {
  DiagonalMask mask;
  SymMatrix result;
};

/// Every modified inverse of a zero-diagonal S, deduplicated, in order of
/// the first diagonal mask (by integer value, bit k = label k) producing it.
/// Throws ZeroDiagonalViolation, SizeCapExceeded when size() > cap.
std::vector<ModifiedInverseMove> modified_inverse_moves(const SymMatrix& s,
                                                        std::size_t cap = kDefaultModifiedInverseCap);
std::vector<SymMatrix> modified_inverses(const SymMatrix& s,
                                         std::size_t cap = kDefaultModifiedInverseCap);

struct Completion {
  SymMatrix matrix;    // nonsingular, equal to S off the toggled diagonal
  DiagonalMask toggled;
};

/// Nonsingular matrix differing from zero-diagonal S only in diagonal
/// entries other than i, grown one leading principal submatrix at a time
/// with i first and its first neighbour second. Throws ZeroRow,
/// ZeroDiagonalViolation.
Completion nonsingular_completion(const SymMatrix& s, std::size_t i);
Completion nonsingular_completion(const SymMatrix& s, std::string_view i);

/// The three bordered matrices
///   M1 = [M k; r 1],  M2 = [M k; r 0],  M3 = [M 0; 0 1]
/// (k = r^T) with their nullspaces. Two of them share a nullspace of
/// dimension nu; the odd one has dimension nu + 1 and contains it.
struct BorderedNullityReport {
  std::array<SymMatrix, 3> matrices;
  std::array<std::vector<Gf2Vector>, 3> nullspaces;
  std::array<std::size_t, 2> shared;  // indices (0-based) of the equal pair
  std::size_t odd = 0;
  std::size_t nu = 0;
};

/// Throws LabelMismatch when rho's labels differ from m's. A failure of the
/// two-share/one-contains conclusion is an invariant failure.
BorderedNullityReport nu_triple(const SymMatrix& m, const Gf2Vector& rho);

struct WalkStep {
  enum class Kind { Single, Pair };
  Kind kind = Kind::Single;
  std::size_t first = 0;
  std::size_t second = 0;  // Pair only
  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

std::string describe(const WalkStep& step, const Labels& labels);

/// Inverse of a nonsingular M as a sequence of single and paired principal
/// pivot transforms on unused indices. Single steps take the smallest unused
/// index with diagonal 1; otherwise Pair takes the lexicographically least
/// unused pair with an off-diagonal 1. Each step is checked against the
/// non-simple local complement / pivot it must equal, and the composite
/// against inverse(M). Throws SingularityError(SingularMatrix).
std::vector<WalkStep> ppt_inverse_walk(const SymMatrix& m);

/// Applies the steps of a walk in order.
SymMatrix apply_walk(const SymMatrix& m, std::span<const WalkStep> steps);

/// Toggles every entry (diagonal included) of the block indexed by the
/// neighbours of r. For nonsingular M with m_rr = 0 the result is
/// nonsingular and its inverse differs from M^{-1} only at (r,r).
SymMatrix toggle_neighbourhood_block(const SymMatrix& m, std::size_t r);

/// Two modified inversions S -> middle -> S^i realising a simple local
/// complement, via a nonsingular completion and the neighbourhood block
/// toggle. When row i is zero, S^i = S and no moves are needed.
struct ComplementByInversions {
  bool trivial = false;     // row i is zero
  SymMatrix middle;         // modified inverse of S
  DiagonalMask first_mask;  // diagonal toggles on S
  DiagonalMask second_mask; // diagonal toggles on middle
};

ComplementByInversions local_complement_by_inversions(const SymMatrix& s, std::size_t i);

}  // namespace lcgf2
