#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "lcgf2/circuits.hpp"
#include "lcgf2/corpus.hpp"
#include "lcgf2/error.hpp"
#include "lcgf2/gf2core.hpp"
#include "oracles.hpp"

using namespace lcgf2;

namespace {

const Labels kFive{"a", "b", "c", "d", "e"};

// Interlacement read directly off single-character words.
SymMatrix alternance(const std::vector<std::string>& words, const Labels& labels) {
  const std::size_t n = labels.size();
  std::vector<std::string> rows(n, std::string(n, '0'));
  for (const auto& w : words)
    for (std::size_t i = 0; i < n; ++i) {
      const char v = labels[i][0];
      const auto p = w.find(v);
      if (p == std::string::npos) continue;
      const auto q = w.find(v, p + 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const char u = labels[j][0];
        const auto between = std::count(w.begin() + p + 1, w.begin() + q, u);
        if (between == 1) rows[i][j] = '1';
      }
    }
  return SymMatrix::from_rows(labels, rows);
}

// vAvB -> vA'vB with A reversed, on a single-character word.
std::string reverse_trail(std::string w, char v) {
  const auto p = w.find(v);
  std::rotate(w.begin(), w.begin() + p, w.end());
  const auto q = w.find(v, 1);
  std::reverse(w.begin() + 1, w.begin() + q);
  return w;
}

std::vector<CyclicWord> canonical(std::string_view text) {
  const auto ws = parse_words(text);
  return canonical_multiset(ws);
}

std::string plain(const CyclicWord& w) {
  std::string s;
  for (const auto& x : w) s += x;
  return s;
}

// The words of P leave the loop e and the doubled b-c edge ambiguous; the
// published P is the reading whose I_P(C) is the printed diag(0,1,0,1,0).
CircuitPartition published_p(const WordGraph& c) {
  const SymMatrix printed = SymMatrix::from_rows(kFive, {"00000", "01000", "00000", "00010", "00000"});
  std::vector<CircuitPartition> hits;
  for (auto& p : partitions_matching_words(c.graph, parse_words("e,ade,abc,bcd")))
    if (relative_interlacement(p, c.system) == printed) hits.push_back(std::move(p));
  REQUIRE(hits.size() == 1);
  return hits.front();
}

}  // namespace

TEST_CASE("word parsing and formatting") {
  const auto ws = parse_words("ab ba, 'x1'c'x1'c");
  REQUIRE(ws.size() == 2);
  CHECK(ws[0] == CyclicWord{"a", "b", "b", "a"});
  CHECK(ws[1] == CyclicWord{"x1", "c", "x1", "c"});
  CHECK(format_word(ws[1]) == "\"x1\"c\"x1\"c");
  CHECK(format_words(ws) == "abba,\"x1\"c\"x1\"c");
  CHECK(parse_words(format_words(ws)) == ws);
  CHECK_THROWS_AS(parse_words("a-b"), Error);
  CHECK_THROWS_AS(parse_words("'ab"), Error);
}

TEST_CASE("canonical rotation is the least rotation or reflection") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 200; ++t) {
    CyclicWord w;
    const std::size_t len = 1 + rng() % 9;
    for (std::size_t k = 0; k < len; ++k) w.push_back(std::string(1, char('a' + rng() % 4)));
    CyclicWord best = w;
    for (int r = 0; r < 2; ++r) {
      CyclicWord x = r ? CyclicWord(w.rbegin(), w.rend()) : w;
      for (std::size_t k = 0; k < len; ++k) {
        std::rotate(x.begin(), x.begin() + 1, x.end());
        best = std::min(best, x);
      }
    }
    REQUIRE(canonical_rotation(w) == best);
  }
}

TEST_CASE("graphs from words") {
  const WordGraph c = from_words("abcdbcaeed");
  CHECK(c.graph->vertex_count() == 5);
  CHECK(c.graph->edge_count() == 10);
  CHECK(c.graph->component_count() == 1);
  CHECK(c.graph->vertices() == kFive);
  CHECK(c.system.words() == canonical("abcdbcaeed"));

  const WordGraph vv = from_words("vv");
  CHECK(vv.graph->vertex_count() == 1);
  CHECK(vv.graph->edge_count() == 2);
  CHECK(vv.system.circuits().size() == 1);
  CHECK(interlacement(vv.system) == SymMatrix::zero(Labels{"v"}));

  const WordGraph ab = from_words("abab");
  CHECK(ab.graph->edge_count() == 4);
  CHECK(interlacement(ab.system) == SymMatrix::from_rows(Labels{"a", "b"}, {"01", "10"}));

  const WordGraph two = from_words("aa,bccb");
  CHECK(two.graph->component_count() == 2);
  CHECK(two.system.circuits().size() == 2);

  try {
    (void)from_words("aab");
    FAIL("expected NotDoubleOccurrence");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotDoubleOccurrence);
  }
  CHECK_THROWS_AS(from_words("aa,ab,b"), Error);
  try {
    (void)from_words("");
    FAIL("expected EmptyWord");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyWord);
  }
}

TEST_CASE("half-edge graph validation") {
  CHECK_THROWS_AS(HalfEdgeGraph(Labels{"v"}, {1, 0, 3, 3}), Error);
  CHECK_THROWS_AS(HalfEdgeGraph(Labels{"v"}, {1, 0, 3}), Error);
  const HalfEdgeGraph g(Labels{"v"}, {1, 0, 3, 2});
  CHECK(g.edges().size() == 2);
  CHECK(g.component_count() == 1);
}

TEST_CASE("tracing the published partitions") {
  const WordGraph c = from_words("abcdbcaeed");
  const CircuitPartition self = trace_partition(c.graph, c.system.transitions());
  CHECK(self.size() == 1);
  const CircuitPartition p = partition_from_words(c.graph, "e,ade,abc,bcd");
  CHECK(p.size() == 4);
  CHECK(p.words() == canonical("e,ade,abc,bcd"));
  const CircuitPartition pp = partition_from_words(c.graph, "aeed,bc,abdc");
  CHECK(pp.size() == 3);
  // As printed, the last circuit of P' would need a second d-a edge.
  CHECK(partitions_matching_words(c.graph, parse_words("aeed,bc,abcd")).empty());
  try {
    (void)partition_from_words(c.graph, "aeed,bc,abcd");
    FAIL("expected NoMatchingPartition");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoMatchingPartition);
  }
}

TEST_CASE("every transition system traces to an edge partition") {
  const WordGraph c = from_words("abcdbcaeed");
  std::size_t euler = 0;
  for (std::uint64_t idx = 0; idx < 243; ++idx) {
    TransitionSystem t;
    for (std::uint64_t k = idx, v = 0; v < 5; ++v, k /= 3) t.push_back(Transition::from_index(k % 3));
    const CircuitPartition p = trace_partition(c.graph, t);
    std::size_t passes = 0;
    for (const auto& circ : p.circuits()) passes += circ.passes.size();
    REQUIRE(passes == c.graph->edge_count());
    REQUIRE(p.size() >= 1);
    euler += p.size() == 1;
  }
  CHECK(enumerate_euler_systems(c.graph).size() == euler);
}

TEST_CASE("euler system enumeration") {
  CHECK(enumerate_euler_systems(from_words("vv").graph).size() == 2);

  const WordGraph ab = from_words("abab");
  const auto systems = enumerate_euler_systems(ab.graph);
  CHECK(systems.size() >= 2);
  for (const auto& e : systems)
    for (std::size_t v = 0; v < 2; ++v)
      CHECK(std::find(systems.begin(), systems.end(), kappa_transform(e, v)) != systems.end());

  const WordGraph c = from_words("abcdbcaeed");
  const auto all = enumerate_euler_systems(c.graph);
  CHECK(std::find(all.begin(), all.end(), c.system) != all.end());
  const EulerSystem cp = iota_transform(c.system, VertexSet{"c", "e"});
  CHECK(std::find(all.begin(), all.end(), cp) != all.end());
  CHECK(cp.words() == canonical("abcbdeeadc"));

  CHECK_THROWS_AS(enumerate_euler_systems(c.graph, 4), Error);
}

TEST_CASE("interlacement matches an alternance scan") {
  const WordGraph c = from_words("abcdbcaeed");
  CHECK(interlacement(c.system) ==
        SymMatrix::from_rows(kFive, {"00010", "00110", "01010", "11100", "00000"}));
  const WordGraph cp = from_words("abcbdeeadc");
  CHECK(interlacement(cp.system) ==
        alternance({"abcbdeeadc"}, cp.graph->vertices()));
  CHECK(interlacement(cp.system) ==
        SymMatrix::from_rows(Labels{"a", "b", "c", "d", "e"}, {"00110", "00100", "11000", "10000", "00000"}));

  for (const auto& w : corpus::words_up_to(5)) {
    const std::string s = plain(w);
    const WordGraph g = from_words(s);
    REQUIRE(interlacement(g.system) == alternance({s}, g.graph->vertices()));
  }
}

TEST_CASE("kappa reverses a v-to-v trail") {
  const WordGraph g = from_words("abcabc");
  const EulerSystem k = kappa_transform(g.system, "a");
  CHECK(k.words() == canonical("acbabc"));
  const Labels abc{"a", "b", "c"};
  CHECK(interlacement(g.system) == SymMatrix::from_rows(abc, {"011", "101", "110"}));
  CHECK(interlacement(k) == SymMatrix::from_rows(abc, {"011", "100", "100"}));

  const WordGraph loop = from_words("aabccb");
  CHECK(interlacement(kappa_transform(loop.system, "a")) == interlacement(loop.system));

  for (const auto& w : corpus::words_up_to(5)) {
    const std::string s = plain(w);
    const WordGraph wg = from_words(s);
    const SymMatrix i = interlacement(wg.system);
    for (std::size_t v = 0; v < wg.graph->vertex_count(); ++v) {
      const EulerSystem kv = kappa_transform(wg.system, v);
      const char name = wg.graph->vertices()[v][0];
      REQUIRE(kv.words() == canonical(reverse_trail(s, name)));
      REQUIRE(interlacement(kv) == oracle::local_complement(i, v, false));
      REQUIRE(kappa_transform(kv, v) == wg.system);
    }
  }
}

TEST_CASE("transition labels relative to the published circuit") {
  const WordGraph c = from_words("abcdbcaeed");
  using L = TransitionLabel;
  CHECK(transition_labels(c.system, c.system.partition()) == std::vector<L>(5, L::Phi));
  const CircuitPartition p = published_p(c);
  CHECK(transition_labels(c.system, p) == std::vector<L>{L::Chi, L::Phi, L::Chi, L::Phi, L::Chi});
  const EulerSystem cp = iota_transform(c.system, VertexSet{"c", "e"});
  CHECK(transition_labels(c.system, cp.partition()) ==
        std::vector<L>{L::Chi, L::Chi, L::Psi, L::Chi, L::Psi});

  const WordGraph other = from_words("abab");
  CHECK_THROWS_AS(transition_labels(c.system, other.system.partition()), Error);
}

TEST_CASE("labels follow the in/out classification of slots") {
  // At each vertex: chi pairs an in-slot with an out-slot, psi pairs in with in.
  for (const auto& w : corpus::words_up_to(4)) {
    const WordGraph g = from_words(plain(w));
    for (std::size_t v = 0; v < g.graph->vertex_count(); ++v)
      for (Transition t : Transition::all()) {
        const Slot s0 = static_cast<Slot>(v * 4);
        const bool same = g.system.is_in_slot(s0) == g.system.is_in_slot(t.partner_slot(s0));
        const TransitionLabel l = g.system.label_of(v, t);
        if (t == g.system.transitions()[v]) {
          REQUIRE(l == TransitionLabel::Phi);
        } else {
          REQUIRE(l == (same ? TransitionLabel::Psi : TransitionLabel::Chi));
        }
        REQUIRE(g.system.transition_with_label(v, l) == t);
      }
  }
}

TEST_CASE("relative interlacement and core vectors of the published partitions") {
  const WordGraph c = from_words("abcdbcaeed");
  CHECK(relative_interlacement(c.system.partition(), c.system) == SymMatrix::identity(kFive));

  CHECK(partitions_matching_words(c.graph, parse_words("e,ade,abc,bcd")).size() == 2);
  const CircuitPartition p = published_p(c);
  CHECK(relative_interlacement(p, c.system) ==
        SymMatrix::from_rows(kFive, {"00000", "01000", "00000", "00010", "00000"}));
  CHECK(relative_core_vector(CyclicWord{"e"}, p, c.system).to_string() == "00001");
  CHECK(relative_core_vector(CyclicWord{"a", "d", "e"}, p, c.system).to_string() == "10001");
  CHECK_THROWS_AS(relative_core_vector(CyclicWord{"a", "b"}, p, c.system), Error);
  CHECK_THROWS_AS(relative_core_vector(9, p, c.system), Error);

  for (const auto& v : relative_core_vectors(c.system.partition(), c.system)) CHECK(v.is_zero());

  const EulerSystem cp = iota_transform(c.system, VertexSet{"c", "e"});
  const CircuitPartition pp = partition_from_words(c.graph, "aeed,bc,abdc");
  CHECK(relative_interlacement(pp, cp) ==
        SymMatrix::from_rows(kFive, {"10000", "00000", "00100", "00000", "00001"}));
}

TEST_CASE("circuit-nullity formula") {
  const WordGraph c = from_words("abcdbcaeed");
  const CircuitPartition p = partition_from_words(c.graph, "e,ade,abc,bcd");
  CHECK(circuit_nullity_check(p, c.system) == CircuitNullity{3, 4, 1});
  const EulerSystem cp = iota_transform(c.system, VertexSet{"c", "e"});
  const CircuitPartition pp = partition_from_words(c.graph, "aeed,bc,abdc");
  CHECK(circuit_nullity_check(pp, cp) == CircuitNullity{2, 3, 1});
  CHECK(circuit_nullity_check(c.system.partition(), c.system) == CircuitNullity{0, 1, 1});

  // Independent nullity count on every partition of a disconnected graph.
  const WordGraph g = from_words("abab,cc");
  for (std::uint64_t idx = 0; idx < 27; ++idx) {
    TransitionSystem t;
    for (std::uint64_t k = idx, v = 0; v < 3; ++v, k /= 3) t.push_back(Transition::from_index(k % 3));
    const CircuitPartition q = trace_partition(g.graph, t);
    REQUIRE(oracle::nullity(relative_interlacement(q, g.system)) + 2 == q.size());
  }
}

TEST_CASE("iota transform of the published circuit") {
  const WordGraph c = from_words("abcdbcaeed");
  const EulerSystem cp = iota_transform(c.system, VertexSet{"c", "e"});
  CHECK(cp.words() == canonical("abcbdeeadc"));
  CHECK(relative_interlacement(cp.partition(), c.system) ==
        toggle_diagonal(interlacement(c.system), VertexSet{"c", "e"}));

  try {
    (void)iota_transform(c.system, VertexSet{});
    FAIL("expected NotAnEulerSystem");
  } catch (const SingularityError& e) {
    CHECK(e.code() == Errc::NotAnEulerSystem);
    CHECK(e.nullity() == 1);
  }

  const IotaCaseReport r = iota_case_analysis(c.system, VertexSet{"c", "e"});
  CHECK(r.x == VertexSet{"a", "b", "e"});
  using K = IotaCase;
  CHECK(r.cases == std::vector<K>{K::ChiPsi, K::ChiPsi, K::PsiChi, K::ChiChi, K::PsiPsi});
  CHECK(r.transformed == cp);
}

TEST_CASE("iota succeeds exactly on nonsingular diagonal completions") {
  for (const auto& w : corpus::words_up_to(4)) {
    const WordGraph g = from_words(plain(w));
    const std::size_t n = g.graph->vertex_count();
    const SymMatrix i = interlacement(g.system);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1u) idx.push_back(v);
      const VertexSet ws = VertexSet::from_indices(g.graph->vertices(), idx);
      SymMatrix m = i;
      for (std::size_t v : idx) m.toggle(v, v);
      if (oracle::nonsingular(m)) {
        const EulerSystem e = iota_transform(g.system, ws);
        REQUIRE(e.circuits().size() == 1);
      } else {
        REQUIRE_THROWS_AS(iota_transform(g.system, ws), SingularityError);
      }
    }
  }
}

TEST_CASE("third partition and compatibility") {
  const WordGraph c = from_words("abcdbcaeed");
  CHECK(third_partition(c.system, c.system) == c.system.partition());
  const EulerSystem cp = iota_transform(c.system, VertexSet{"c", "e"});
  CHECK(compatible(c.system, cp));
  CHECK_FALSE(compatible(c.system, c.system));
  const CircuitPartition t = third_partition(c.system, cp);
  for (std::size_t v = 0; v < 5; ++v) {
    CHECK(t.transition(v) != c.system.transitions()[v]);
    CHECK(t.transition(v) != cp.transitions()[v]);
  }
  // I_P(C) = I_{C'}(C) * I_P(C') for the third partition P.
  const SymMatrix lhs = relative_interlacement(t, c.system);
  const SymMatrix rhs(kFive, relative_interlacement(cp.partition(), c.system).bits() *
                                 relative_interlacement(t, cp).bits());
  CHECK(lhs == rhs);
}

TEST_CASE("short-circuit partition splits at v") {
  const WordGraph c = from_words("abcdbcaeed");
  for (std::size_t v = 0; v < 5; ++v) {
    const CircuitPartition p = short_circuit_partition(c.system, v);
    CHECK(p.size() == 2);
    CHECK(transition_labels(c.system, p)[v] == TransitionLabel::Chi);
  }
}

TEST_CASE("corpus sizes") {
  // Chord diagrams up to rotation and reflection.
  const std::size_t expected[] = {1, 2, 5, 17, 79, 554};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(corpus::canonical_words(n).size() == expected[n - 1]);
  CHECK(corpus::normalized_word_count(4) == 105);
  std::mt19937_64 rng(67);
  const GraphPtr g = corpus::random_graph(4, rng);
  CHECK(g->vertex_count() == 4);
  CHECK(g->edge_count() == 8);
}
