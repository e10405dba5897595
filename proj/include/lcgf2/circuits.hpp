#pragma once

// 4-regular multigraphs with explicit half-edges, transitions, circuit
// partitions and Euler systems, and the matrices attached to them:
// interlacement, relative interlacement and relative core vectors.
//
// Half-edge slots are numbered vertex * 4 + k, k in {0,1,2,3}. A transition
// at a vertex pairs its four slots into two pairs.

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcgf2/sym_matrix.hpp"

namespace lcgf2 {

using Slot = std::uint32_t;

constexpr std::size_t vertex_of(Slot s) { return s / 4; }
constexpr unsigned local_slot(Slot s) { return s % 4; }

/// A cyclic sequence of vertex names: a circuit read off in order.
using CyclicWord = std::vector<std::string>;

/// Parses "abcdbcaeed" or "aeed,bc,abcd". Letters are single alphanumeric
/// characters; longer names are written in double or single quotes.
/// Whitespace is ignored. Throws InvalidInput.
std::vector<CyclicWord> parse_words(std::string_view text);
std::string format_word(const CyclicWord& word);
std::string format_words(std::span<const CyclicWord> words);
/// Least rotation or reflection, comparing vertex names lexicographically.
CyclicWord canonical_rotation(const CyclicWord& word);
/// Canonical rotation of every word, then sorted.
std::vector<CyclicWord> canonical_multiset(std::span<const CyclicWord> words);

class HalfEdgeGraph {
 public:
  /// mate[s] is the other end of the edge at slot s. Throws InvalidGraph
  /// unless mate is a fixed-point-free involution on 4 * |V| slots.
  HalfEdgeGraph(Labels vertices, std::vector<Slot> mate);

  const Labels& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t slot_count() const { return mate_.size(); }
  std::size_t edge_count() const { return mate_.size() / 2; }
  Slot mate(Slot s) const { return mate_[s]; }
  const std::vector<Slot>& mates() const { return mate_; }
  /// Each edge once as (low slot, high slot), ordered by low slot.
  std::vector<std::pair<Slot, Slot>> edges() const;

  std::size_t component_count() const { return components_; }
  std::size_t component_of(std::size_t vertex) const { return component_[vertex]; }

  friend bool operator==(const HalfEdgeGraph& a, const HalfEdgeGraph& b) {
    return a.vertices_ == b.vertices_ && a.mate_ == b.mate_;
  }

 private:
  Labels vertices_;
  std::vector<Slot> mate_;
  std::vector<std::size_t> component_;
  std::size_t components_ = 0;
};

using GraphPtr = std::shared_ptr<const HalfEdgeGraph>;

/// One of the three pairings of a vertex's local slots {0,1,2,3}, stored as
/// the partner of local slot 0.
class Transition {
 public:
  constexpr Transition() = default;
  /// The transition pairing local slots a and b (a != b).
  static constexpr Transition pairing(unsigned a, unsigned b) {
    if (a == 0) return Transition(b);
    if (b == 0) return Transition(a);
    return Transition(6 - a - b);
  }
  static constexpr Transition from_index(unsigned index) { return Transition(index + 1); }
  static constexpr std::array<Transition, 3> all() {
    return {Transition(1), Transition(2), Transition(3)};
  }
  /// The transition that is neither a nor b (a != b).
  static constexpr Transition third(Transition a, Transition b) {
    return Transition(6 - a.partner0_ - b.partner0_);
  }

  constexpr unsigned index() const { return partner0_ - 1u; }
  constexpr unsigned partner(unsigned local) const {
    if (local == 0) return partner0_;
    if (local == partner0_) return 0;
    return 6 - partner0_ - local;
  }
  Slot partner_slot(Slot s) const { return (s & ~Slot{3}) | partner(local_slot(s)); }

  friend constexpr bool operator==(Transition, Transition) = default;

 private:
  constexpr explicit Transition(unsigned partner0) : partner0_(static_cast<std::uint8_t>(partner0)) {}
  std::uint8_t partner0_ = 1;
};

using TransitionSystem = std::vector<Transition>;

enum class TransitionLabel { Phi, Chi, Psi };
const char* label_name(TransitionLabel label);  // "phi", "chi", "psi"

/// One traversal of a vertex: entered through `in`, left through `out`.
struct Pass {
  std::size_t vertex = 0;
  Slot in = 0;
  Slot out = 0;
};

struct Circuit {
  std::vector<Pass> passes;  // cyclic; passes[k].out is mated to passes[k+1].in
  std::size_t component = 0;
};

class CircuitPartition {
 public:
  /// Traces the circuits of `transitions`; circuits are ordered by least
  /// slot, each started at that slot. Throws InvalidInput on a size mismatch.
  CircuitPartition(GraphPtr graph, TransitionSystem transitions);

  const GraphPtr& graph_ptr() const { return graph_; }
  const HalfEdgeGraph& graph() const { return *graph_; }
  const TransitionSystem& transitions() const { return transitions_; }
  Transition transition(std::size_t v) const { return transitions_[v]; }
  const std::vector<Circuit>& circuits() const { return circuits_; }
  std::size_t size() const { return circuits_.size(); }

  /// Number of passes (0, 1 or 2) of circuit `c` through vertex `v`.
  std::size_t incidence(std::size_t c, std::size_t v) const;
  CyclicWord word(std::size_t c) const;
  /// Canonical word multiset.
  std::vector<CyclicWord> words() const;

  bool same_graph(const CircuitPartition& other) const {
    return graph_ == other.graph_ || *graph_ == *other.graph_;
  }
  friend bool operator==(const CircuitPartition& a, const CircuitPartition& b) {
    return a.same_graph(b) && a.transitions_ == b.transitions_;
  }

 private:
  GraphPtr graph_;
  TransitionSystem transitions_;
  std::vector<Circuit> circuits_;
};

/// A circuit partition with one circuit per connected component. The traced
/// circuits fix an orientation, which classifies slots as in or out.
class EulerSystem {
 public:
  /// Throws SingularityError(NotAnEulerSystem) with nullity |P| - c(F).
  explicit EulerSystem(CircuitPartition partition);

  const CircuitPartition& partition() const { return partition_; }
  const GraphPtr& graph_ptr() const { return partition_.graph_ptr(); }
  const HalfEdgeGraph& graph() const { return partition_.graph(); }
  const TransitionSystem& transitions() const { return partition_.transitions(); }
  const std::vector<Circuit>& circuits() const { return partition_.circuits(); }
  std::vector<CyclicWord> words() const { return partition_.words(); }

  bool is_in_slot(Slot s) const { return in_slot_[s]; }
  Transition transition_with_label(std::size_t v, TransitionLabel label) const;
  TransitionLabel label_of(std::size_t v, Transition t) const;

  friend bool operator==(const EulerSystem& a, const EulerSystem& b) {
    return a.partition_ == b.partition_;
  }

 private:
  CircuitPartition partition_;
  std::vector<bool> in_slot_;
  // Per vertex: the two in-slots and two out-slots, pass-aligned.
  std::vector<std::array<Slot, 4>> passes_at_;
};

struct WordGraph {
  GraphPtr graph;
  EulerSystem system;
};

/// Graph with one component per double occurrence word; consecutive letters
/// (cyclically) are joined by an edge and the Euler system follows each word.
/// Vertices are ordered by first appearance. Throws EmptyWord,
/// NotDoubleOccurrence.
WordGraph from_words(std::span<const CyclicWord> words);
WordGraph from_words(std::string_view text);
std::vector<CyclicWord> to_words(const CircuitPartition& p);

CircuitPartition trace_partition(const GraphPtr& graph, TransitionSystem transitions);

/// Every transition system of `graph` whose circuits read as `words` (up
/// to rotation and reflection), in transition-system index order.
std::vector<CircuitPartition> partitions_matching_words(const GraphPtr& graph,
                                                        std::span<const CyclicWord> words);
/// First match. Throws NoMatchingPartition.
CircuitPartition partition_from_words(const GraphPtr& graph, std::span<const CyclicWord> words);
CircuitPartition partition_from_words(const GraphPtr& graph, std::string_view text);
/// Throws NoMatchingPartition, NotAnEulerSystem.
EulerSystem euler_system_from_words(const GraphPtr& graph, std::string_view text);

inline constexpr std::size_t kDefaultEulerEnumerationCap = 12;

/// All transition systems (index order: vertex 0 is the least significant
/// base-3 digit) that trace to one circuit per component. Throws
/// SizeCapExceeded above `cap` vertices.
std::vector<EulerSystem> enumerate_euler_systems(const GraphPtr& graph,
                                                 std::size_t cap = kDefaultEulerEnumerationCap);

/// Zero-diagonal; vw = 1 iff v and w alternate v..w..v..w on a circuit.
SymMatrix interlacement(const EulerSystem& c);

/// C * v: reverse one of the two v-to-v trails of the circuit through v.
EulerSystem kappa_transform(const EulerSystem& c, std::size_t v);
EulerSystem kappa_transform(const EulerSystem& c, std::string_view v);

/// Label of each of P's transitions relative to C. Throws GraphMismatch.
std::vector<TransitionLabel> transition_labels(const EulerSystem& c, const CircuitPartition& p);

/// I_P(C). Throws GraphMismatch.
SymMatrix relative_interlacement(const CircuitPartition& p, const EulerSystem& c);

/// rho(gamma, C) for circuit index `gamma` of P. Throws CircuitNotInPartition,
/// GraphMismatch.
Gf2Vector relative_core_vector(std::size_t gamma, const CircuitPartition& p, const EulerSystem& c);
/// Looks gamma up by its word. Throws CircuitNotInPartition.
Gf2Vector relative_core_vector(const CyclicWord& gamma, const CircuitPartition& p,
                               const EulerSystem& c);
std::vector<Gf2Vector> relative_core_vectors(const CircuitPartition& p, const EulerSystem& c);

/// C # W: psi on W, chi elsewhere. Throws SingularityError(NotAnEulerSystem)
/// with the nullity of I(C) + diag(W).
EulerSystem iota_transform(const EulerSystem& c, const VertexSet& w);

/// Per-vertex configuration of C # W: first the label of C#W's transition
/// relative to C, then the label of C's transition relative to C#W.
enum class IotaCase { ChiChi, ChiPsi, PsiChi, PsiPsi };
const char* iota_case_name(IotaCase c);  // "chi chi'", ...

struct IotaCaseReport {
  EulerSystem transformed;
  VertexSet x;  // nonzero diagonal of (I(C) + diag(W))^{-1}
  std::vector<IotaCase> cases;
};
IotaCaseReport iota_case_analysis(const EulerSystem& c, const VertexSet& w);

/// Agrees with both where they agree, the third transition elsewhere.
CircuitPartition third_partition(const EulerSystem& c, const EulerSystem& c2);

/// True iff the two systems share no transition.
bool compatible(const EulerSystem& a, const EulerSystem& b);

/// P(C, v): C's transitions except chi at v; it splits C's circuit at v into
/// the two v-to-v trails.
CircuitPartition short_circuit_partition(const EulerSystem& c, std::size_t v);

struct CircuitNullity {
  std::size_t nullity = 0;
  std::size_t circuits = 0;
  std::size_t components = 0;
  friend bool operator==(const CircuitNullity&, const CircuitNullity&) = default;
};
/// nullity(I_P(C)) + c(F) = |P|, asserted. Throws GraphMismatch.
CircuitNullity circuit_nullity_check(const CircuitPartition& p, const EulerSystem& c);

}  // namespace lcgf2
