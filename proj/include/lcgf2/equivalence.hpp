#pragma once

// Breadth-first closures of the relations generated by simple local
// complementation (LC), modified inversion (MI), and looped local
// complements plus edge pivots (PIV).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lcgf2/sym_matrix.hpp"

namespace lcgf2 {

enum class Relation { LC, MI, PIV };

const char* relation_name(Relation r);
/// "lc", "mi", "piv" (case-insensitive). Throws InvalidInput.
Relation parse_relation(std::string_view name);

/// LC and MI need zero-diagonal input; PIV takes any symmetric matrix.
bool admissible(const SymMatrix& s, Relation r);

struct Move {
  enum class Kind { LocalComplement, ModifiedInverse, LoopedComplement, Pivot };
  Kind kind = Kind::LocalComplement;
  /// LocalComplement / LoopedComplement: {i}; Pivot: {i, j};
  /// ModifiedInverse: the toggled diagonal (possibly empty).
  std::vector<std::string> vertices;

  std::string to_string() const;
  friend bool operator==(const Move&, const Move&) = default;
};

struct Neighbour {
  Move move;
  SymMatrix matrix;
};

/// One-move neighbours, deduplicated by matrix, first move kept. Order:
/// LC by label; MI by mask value; PIV looped complements (by label) before
/// pivots (lexicographic pairs). Throws ZeroDiagonalViolation.
std::vector<Neighbour> neighbour_moves(const SymMatrix& s, Relation r);
std::vector<SymMatrix> neighbors(const SymMatrix& s, Relation r);

/// Applies one move; the inverse of neighbour_moves.
SymMatrix apply_move(const SymMatrix& s, const Move& move);

inline constexpr std::size_t kDefaultClassCap = 1'000'000;

/// An equivalence class discovered by BFS from a seed (members[0]).
class EquivClass {
 public:
  struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    Move move;
  };

  Relation relation() const { return relation_; }
  const SymMatrix& seed() const { return members_.front(); }
  /// Lexicographically least row-major bit string among the members.
  const SymMatrix& representative() const { return members_[representative_]; }
  const std::vector<SymMatrix>& members() const { return members_; }
  /// edges()[k] discovered members()[k + 1].
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return members_.size(); }

  std::optional<std::size_t> find(const SymMatrix& m) const;
  bool contains(const SymMatrix& m) const { return find(m).has_value(); }
  /// Shortest move sequence seed -> members()[index].
  std::vector<Move> path_to(std::size_t index) const;

 private:
  friend EquivClass class_closure(const SymMatrix&, Relation, std::size_t);

  Relation relation_ = Relation::LC;
  std::vector<SymMatrix> members_;
  std::vector<Edge> edges_;
  std::unordered_map<SymMatrix, std::size_t, SymMatrixHash> index_;
  std::size_t representative_ = 0;
};

/// FIFO closure seeded at s. Throws SizeCapExceeded past `cap` members.
EquivClass class_closure(const SymMatrix& s, Relation r, std::size_t cap = kDefaultClassCap);

struct Equivalence {
  bool equivalent = false;
  std::vector<Move> certificate;  // s -> t when equivalent
};

/// Throws LabelMismatch when the label sequences differ.
Equivalence equivalent(const SymMatrix& s, const SymMatrix& t, Relation r,
                       std::size_t cap = kDefaultClassCap);

}  // namespace lcgf2
