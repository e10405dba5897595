#include "lcgf2/circuits.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "lcgf2/error.hpp"
#include "lcgf2/gf2core.hpp"

namespace lcgf2 {

// ---------------------------------------------------------------- words

std::vector<CyclicWord> parse_words(std::string_view text) {
  std::vector<CyclicWord> words(1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == ',') {
      words.emplace_back();
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      continue;
    } else if (ch == '"' || ch == '\'') {
      const std::size_t close = text.find(ch, i + 1);
      if (close == std::string_view::npos || close == i + 1)
        throw Error(Errc::InvalidInput, "unterminated or empty quoted vertex name");
      words.back().emplace_back(text.substr(i + 1, close - i - 1));
      i = close;
    } else if (std::isalnum(static_cast<unsigned char>(ch))) {
      words.back().emplace_back(1, ch);
    } else {
      throw Error(Errc::InvalidInput, std::string("unexpected character '") + ch + "' in word");
    }
  }
  return words;
}

std::string format_word(const CyclicWord& word) {
  std::string s;
  for (const auto& name : word) {
    if (name.size() == 1 && std::isalnum(static_cast<unsigned char>(name[0]))) {
      s += name;
    } else {
      s += '"' + name + '"';
    }
  }
  return s;
}

std::string format_words(std::span<const CyclicWord> words) {
  std::string s;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) s += ',';
    s += format_word(words[i]);
  }
  return s;
}

CyclicWord canonical_rotation(const CyclicWord& word) {
  CyclicWord best = word;
  const std::size_t n = word.size();
  CyclicWord candidate(n);
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k)
        candidate[k] = reflect ? word[(r + n - k) % n] : word[(r + k) % n];
      if (candidate < best) best = candidate;
    }
  }
  return best;
}

std::vector<CyclicWord> canonical_multiset(std::span<const CyclicWord> words) {
  std::vector<CyclicWord> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(canonical_rotation(w));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- graph

HalfEdgeGraph::HalfEdgeGraph(Labels vertices, std::vector<Slot> mate)
    : vertices_(std::move(vertices)), mate_(std::move(mate)) {
  const std::size_t slots = 4 * vertices_.size();
  if (mate_.size() != slots)
    throw Error(Errc::InvalidGraph, "a 4-regular graph needs exactly four slots per vertex");
  for (Slot s = 0; s < slots; ++s) {
    const Slot m = mate_[s];
    if (m >= slots || m == s || mate_[m] != s)
      throw Error(Errc::InvalidGraph, "slot " + std::to_string(s) + " is not matched to a partner");
  }
  // Union-find over vertices.
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Slot s = 0; s < slots; ++s) {
    const std::size_t a = find(vertex_of(s));
    const std::size_t b = find(vertex_of(mate_[s]));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  component_.assign(vertices_.size(), 0);
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    auto [it, inserted] = ids.emplace(find(v), ids.size());
    component_[v] = it->second;
  }
  components_ = ids.size();
}

std::vector<std::pair<Slot, Slot>> HalfEdgeGraph::edges() const {
  std::vector<std::pair<Slot, Slot>> out;
  for (Slot s = 0; s < mate_.size(); ++s)
    if (s < mate_[s]) out.emplace_back(s, mate_[s]);
  return out;
}

const char* label_name(TransitionLabel label) {
  switch (label) {
    case TransitionLabel::Phi: return "phi";
    case TransitionLabel::Chi: return "chi";
    case TransitionLabel::Psi: return "psi";
  }
  return "?";
}

// ---------------------------------------------------------------- partitions

namespace {

std::vector<Circuit> trace(const HalfEdgeGraph& g, const TransitionSystem& t) {
  std::vector<Circuit> circuits;
  std::vector<bool> used(g.slot_count(), false);
  for (Slot start = 0; start < g.slot_count(); ++start) {
    if (used[start]) continue;
    Circuit c;
    c.component = g.component_of(vertex_of(start));
    Slot in = start;
    do {
      const Slot out = t[vertex_of(in)].partner_slot(in);
      ensure(!used[in] && !used[out], "trace: a slot was traversed twice");
      used[in] = used[out] = true;
      c.passes.push_back({vertex_of(in), in, out});
      in = g.mate(out);
    } while (in != start);
    circuits.push_back(std::move(c));
  }
  return circuits;
}

// Circuit count without materialising passes; `used` is caller scratch.
std::size_t count_circuits(const HalfEdgeGraph& g, const TransitionSystem& t,
                           std::vector<char>& used) {
  std::fill(used.begin(), used.end(), 0);
  std::size_t count = 0;
  const auto& mate = g.mates();
  for (Slot start = 0; start < used.size(); ++start) {
    if (used[start]) continue;
    ++count;
    Slot in = start;
    do {
      const Slot out = t[vertex_of(in)].partner_slot(in);
      used[in] = used[out] = 1;
      in = mate[out];
    } while (in != start);
  }
  return count;
}

void require_same_graph(const CircuitPartition& a, const CircuitPartition& b) {
  if (!a.same_graph(b))
    throw Error(Errc::GraphMismatch, "partitions belong to different graphs");
}

TransitionSystem transitions_from_passes(std::size_t n, std::span<const Circuit> circuits) {
  TransitionSystem t(n);
  std::vector<bool> seen(n, false);
  for (const auto& c : circuits) {
    for (const auto& p : c.passes) {
      const Transition tr = Transition::pairing(local_slot(p.in), local_slot(p.out));
      if (seen[p.vertex]) ensure(t[p.vertex] == tr, "passes disagree on a transition");
      t[p.vertex] = tr;
      seen[p.vertex] = true;
    }
  }
  return t;
}

}  // namespace

CircuitPartition::CircuitPartition(GraphPtr graph, TransitionSystem transitions)
    : graph_(std::move(graph)), transitions_(std::move(transitions)) {
  if (!graph_) throw Error(Errc::InvalidInput, "circuit partition needs a graph");
  if (transitions_.size() != graph_->vertex_count())
    throw Error(Errc::InvalidInput, "one transition per vertex is required");
  circuits_ = trace(*graph_, transitions_);
}

std::size_t CircuitPartition::incidence(std::size_t c, std::size_t v) const {
  std::size_t k = 0;
  for (const auto& p : circuits_.at(c).passes)
    if (p.vertex == v) ++k;
  return k;
}

CyclicWord CircuitPartition::word(std::size_t c) const {
  CyclicWord w;
  for (const auto& p : circuits_.at(c).passes) w.push_back(graph_->vertices()[p.vertex]);
  return w;
}

std::vector<CyclicWord> CircuitPartition::words() const {
  std::vector<CyclicWord> ws;
  for (std::size_t c = 0; c < circuits_.size(); ++c) ws.push_back(word(c));
  return canonical_multiset(ws);
}

EulerSystem::EulerSystem(CircuitPartition partition) : partition_(std::move(partition)) {
  const std::size_t comps = partition_.graph().component_count();
  if (partition_.size() != comps) {
    const std::size_t nullity = partition_.size() - comps;
    throw SingularityError(Errc::NotAnEulerSystem,
                           "not an Euler system: " + std::to_string(partition_.size()) +
                               " circuits on " + std::to_string(comps) +
                               " components (nullity " + std::to_string(nullity) + ")",
                           nullity);
  }
  const auto& g = partition_.graph();
  in_slot_.assign(g.slot_count(), false);
  passes_at_.assign(g.vertex_count(), {0, 0, 0, 0});
  std::vector<int> seen(g.vertex_count(), 0);
  for (const auto& c : partition_.circuits()) {
    for (const auto& p : c.passes) {
      in_slot_[p.in] = true;
      auto& at = passes_at_[p.vertex];
      const int k = seen[p.vertex]++;
      at[k] = p.in;
      at[2 + k] = p.out;
    }
  }
}

Transition EulerSystem::transition_with_label(std::size_t v, TransitionLabel label) const {
  const auto& s = passes_at_.at(v);  // in1, in2, out1, out2
  switch (label) {
    case TransitionLabel::Phi: return transitions()[v];
    case TransitionLabel::Psi: return Transition::pairing(local_slot(s[0]), local_slot(s[1]));
    case TransitionLabel::Chi: return Transition::pairing(local_slot(s[0]), local_slot(s[3]));
  }
  return transitions()[v];
}

TransitionLabel EulerSystem::label_of(std::size_t v, Transition t) const {
  if (t == transitions()[v]) return TransitionLabel::Phi;
  const Slot in_slot = passes_at_.at(v)[0];
  const Slot partner = t.partner_slot(in_slot);
  return in_slot_[partner] ? TransitionLabel::Psi : TransitionLabel::Chi;
}

WordGraph from_words(std::span<const CyclicWord> words) {
  if (words.empty()) throw Error(Errc::EmptyWord, "no words given");
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::size_t, std::size_t>> seen;  // count, word
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (words[w].empty()) throw Error(Errc::EmptyWord, "empty word in input");
    for (const auto& name : words[w]) {
      auto [it, inserted] = seen.emplace(name, std::make_pair(std::size_t{0}, w));
      if (inserted) order.push_back(name);
      if (it->second.second != w)
        throw Error(Errc::NotDoubleOccurrence,
                    "vertex " + name + " occurs in more than one word");
      if (++it->second.first > 2)
        throw Error(Errc::NotDoubleOccurrence, "vertex " + name + " occurs more than twice");
    }
  }
  for (const auto& [name, info] : seen)
    if (info.first != 2)
      throw Error(Errc::NotDoubleOccurrence, "vertex " + name + " occurs only once");

  Labels labels(order);
  std::vector<Slot> mate(4 * labels.size());
  std::vector<int> occurrence(labels.size(), 0);
  for (const auto& word : words) {
    std::vector<std::pair<Slot, Slot>> passes;  // in, out
    for (const auto& name : word) {
      const std::size_t v = labels.index_of(name);
      const Slot base = static_cast<Slot>(4 * v + 2 * occurrence[v]++);
      passes.emplace_back(base, base + 1);
    }
    for (std::size_t k = 0; k < passes.size(); ++k) {
      const Slot out = passes[k].second;
      const Slot in = passes[(k + 1) % passes.size()].first;
      mate[out] = in;
      mate[in] = out;
    }
  }
  auto graph = std::make_shared<const HalfEdgeGraph>(labels, std::move(mate));
  TransitionSystem phi(labels.size(), Transition::pairing(0, 1));
  EulerSystem system(CircuitPartition(graph, std::move(phi)));
  return {graph, std::move(system)};
}

WordGraph from_words(std::string_view text) {
  const auto words = parse_words(text);
  return from_words(words);
}

std::vector<CyclicWord> to_words(const CircuitPartition& p) {
  std::vector<CyclicWord> out;
  for (std::size_t c = 0; c < p.size(); ++c) out.push_back(p.word(c));
  return out;
}

CircuitPartition trace_partition(const GraphPtr& graph, TransitionSystem transitions) {
  return CircuitPartition(graph, std::move(transitions));
}

namespace {

template <class F>
void for_each_transition_system(std::size_t n, F&& f) {
  TransitionSystem t(n, Transition::from_index(0));
  std::vector<unsigned> digits(n, 0);
  while (true) {
    f(static_cast<const TransitionSystem&>(t));
    std::size_t k = 0;
    while (k < n && digits[k] == 2) {
      digits[k] = 0;
      t[k] = Transition::from_index(0);
      ++k;
    }
    if (k == n) return;
    t[k] = Transition::from_index(++digits[k]);
  }
}

void check_enumeration_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw Error(Errc::SizeCapExceeded, "enumerating 3^" + std::to_string(n) +
                                           " transition systems exceeds the cap of " +
                                           std::to_string(cap) + " vertices");
}

}  // namespace

std::vector<CircuitPartition> partitions_matching_words(const GraphPtr& graph,
                                                        std::span<const CyclicWord> words) {
  check_enumeration_cap(graph->vertex_count(), kDefaultEulerEnumerationCap);
  const auto target = canonical_multiset(words);
  std::vector<CircuitPartition> out;
  std::vector<char> scratch(graph->slot_count());
  for_each_transition_system(graph->vertex_count(), [&](const TransitionSystem& t) {
    if (count_circuits(*graph, t, scratch) != target.size()) return;
    CircuitPartition p(graph, t);
    if (p.words() == target) out.push_back(std::move(p));
  });
  return out;
}

CircuitPartition partition_from_words(const GraphPtr& graph, std::span<const CyclicWord> words) {
  auto matches = partitions_matching_words(graph, words);
  if (matches.empty())
    throw Error(Errc::NoMatchingPartition,
                "no circuit partition of the graph reads as " + format_words(words));
  return std::move(matches.front());
}

CircuitPartition partition_from_words(const GraphPtr& graph, std::string_view text) {
  const auto words = parse_words(text);
  return partition_from_words(graph, words);
}

EulerSystem euler_system_from_words(const GraphPtr& graph, std::string_view text) {
  return EulerSystem(partition_from_words(graph, text));
}

std::vector<EulerSystem> enumerate_euler_systems(const GraphPtr& graph, std::size_t cap) {
  check_enumeration_cap(graph->vertex_count(), cap);
  std::vector<EulerSystem> out;
  std::vector<char> scratch(graph->slot_count());
  const std::size_t comps = graph->component_count();
  for_each_transition_system(graph->vertex_count(), [&](const TransitionSystem& t) {
    if (count_circuits(*graph, t, scratch) == comps)
      out.emplace_back(CircuitPartition(graph, t));
  });
  return out;
}

SymMatrix interlacement(const EulerSystem& c) {
  const std::size_t n = c.graph().vertex_count();
  SymMatrix m = SymMatrix::zero(c.graph().vertices());
  for (const auto& circuit : c.circuits()) {
    std::vector<std::array<std::size_t, 2>> pos(n, {0, 0});
    std::vector<int> count(n, 0);
    std::vector<std::size_t> here;
    for (std::size_t k = 0; k < circuit.passes.size(); ++k) {
      const std::size_t v = circuit.passes[k].vertex;
      if (count[v] == 0) here.push_back(v);
      pos[v][count[v]++] = k;
    }
    for (std::size_t a = 0; a < here.size(); ++a) {
      for (std::size_t b = a + 1; b < here.size(); ++b) {
        const auto& pv = pos[here[a]];
        const auto& pw = pos[here[b]];
        const bool first = pv[0] < pw[0] && pw[0] < pv[1];
        const bool second = pv[0] < pw[1] && pw[1] < pv[1];
        if (first != second) m.set(here[a], here[b], true);
      }
    }
  }
  return m;
}

EulerSystem kappa_transform(const EulerSystem& c, std::size_t v) {
  const std::size_t n = c.graph().vertex_count();
  if (v >= n) throw Error(Errc::UnknownLabel, "vertex index out of range");

  auto reversed_trail = [&](bool reverse_first) {
    std::vector<Circuit> circuits = c.circuits();
    for (auto& circuit : circuits) {
      auto& ps = circuit.passes;
      std::vector<std::size_t> at;
      for (std::size_t k = 0; k < ps.size(); ++k)
        if (ps[k].vertex == v) at.push_back(k);
      if (at.empty()) continue;
      // Rotate so the circuit reads v A v B; reverse A or B.
      std::size_t p = at[0], q = at[1];
      if (!reverse_first) {
        std::rotate(ps.begin(), ps.begin() + static_cast<std::ptrdiff_t>(q), ps.end());
        q = ps.size() - (at[1] - at[0]);
        p = 0;
      }
      const Pass first = ps[p];
      const Pass second = ps[q];
      std::reverse(ps.begin() + static_cast<std::ptrdiff_t>(p + 1),
                   ps.begin() + static_cast<std::ptrdiff_t>(q));
      for (std::size_t k = p + 1; k < q; ++k) std::swap(ps[k].in, ps[k].out);
      ps[p] = {v, first.in, second.in};
      ps[q] = {v, first.out, second.out};
    }
    return transitions_from_passes(n, circuits);
  };

  const TransitionSystem t = reversed_trail(true);
  ensure(t == reversed_trail(false), "kappa_transform: the two trail reversals disagree");
  ensure(t[v] == c.transition_with_label(v, TransitionLabel::Psi),
         "kappa_transform: new transition is not psi");
  CircuitPartition p(c.graph_ptr(), t);
  ensure(p.size() == c.partition().size(), "kappa_transform: result is not an Euler system");
  EulerSystem out(std::move(p));
  ensure(interlacement(out) == simple_local_complement(interlacement(c), v),
         "kappa_transform: interlacement is not the local complement");
  return out;
}

EulerSystem kappa_transform(const EulerSystem& c, std::string_view v) {
  return kappa_transform(c, c.graph().vertices().index_of(v));
}

std::vector<TransitionLabel> transition_labels(const EulerSystem& c, const CircuitPartition& p) {
  require_same_graph(c.partition(), p);
  const std::size_t n = c.graph().vertex_count();
  std::vector<TransitionLabel> labels(n);
  for (std::size_t v = 0; v < n; ++v) {
    labels[v] = c.label_of(v, p.transition(v));
    // The classification must not depend on the direction of C's circuit.
    const Transition t = p.transition(v);
    const Transition phi = c.transitions()[v];
    Slot out_slot = 0;
    for (unsigned k = 0; k < 4; ++k) {
      const Slot s = static_cast<Slot>(4 * v + k);
      if (!c.is_in_slot(s)) {
        out_slot = s;
        break;
      }
    }
    const bool reversed_psi = !c.is_in_slot(t.partner_slot(out_slot));
    const TransitionLabel reversed =
        t == phi ? TransitionLabel::Phi
                 : (reversed_psi ? TransitionLabel::Psi : TransitionLabel::Chi);
    ensure(reversed == labels[v], "transition_labels: label depends on orientation");
  }
  return labels;
}

SymMatrix relative_interlacement(const CircuitPartition& p, const EulerSystem& c) {
  const auto labels = transition_labels(c, p);
  SymMatrix m = interlacement(c);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] == TransitionLabel::Phi) {
      for (std::size_t w = 0; w < labels.size(); ++w) m.set(v, w, false);
      m.set(v, v, true);
    } else if (labels[v] == TransitionLabel::Psi) {
      m.set(v, v, true);
    }
  }
  return m;
}

namespace {

Gf2Vector core_vector(std::size_t gamma, const CircuitPartition& p,
                      const std::vector<TransitionLabel>& labels) {
  BitVector bits(labels.size());
  std::vector<int> passes(labels.size(), 0);
  for (const auto& pass : p.circuits()[gamma].passes) ++passes[pass.vertex];
  for (std::size_t v = 0; v < labels.size(); ++v)
    if (labels[v] != TransitionLabel::Phi && passes[v] == 1) bits.flip(v);
  return Gf2Vector(p.graph().vertices(), std::move(bits));
}

}  // namespace

Gf2Vector relative_core_vector(std::size_t gamma, const CircuitPartition& p, const EulerSystem& c) {
  if (gamma >= p.size())
    throw Error(Errc::CircuitNotInPartition, "circuit index " + std::to_string(gamma) +
                                                 " is not in the partition");
  return core_vector(gamma, p, transition_labels(c, p));
}

Gf2Vector relative_core_vector(const CyclicWord& gamma, const CircuitPartition& p,
                               const EulerSystem& c) {
  const CyclicWord target = canonical_rotation(gamma);
  for (std::size_t k = 0; k < p.size(); ++k)
    if (canonical_rotation(p.word(k)) == target) return relative_core_vector(k, p, c);
  throw Error(Errc::CircuitNotInPartition,
              "no circuit of the partition reads as " + format_word(gamma));
}

std::vector<Gf2Vector> relative_core_vectors(const CircuitPartition& p, const EulerSystem& c) {
  const auto labels = transition_labels(c, p);
  std::vector<Gf2Vector> out;
  for (std::size_t k = 0; k < p.size(); ++k) out.push_back(core_vector(k, p, labels));
  return out;
}

EulerSystem iota_transform(const EulerSystem& c, const VertexSet& w) {
  const SymMatrix m = toggle_diagonal(interlacement(c), w);
  const auto rn = rank_nullity(m);
  if (rn.nullity != 0)
    throw SingularityError(Errc::NotAnEulerSystem,
                           "C#" + w.to_string() + " is not an Euler system: nullity " +
                               std::to_string(rn.nullity),
                           rn.nullity);
  const auto idx = w.resolve(c.graph().vertices());
  std::vector<bool> in_w(c.graph().vertex_count(), false);
  for (std::size_t i : idx) in_w[i] = true;
  TransitionSystem t(c.graph().vertex_count());
  for (std::size_t v = 0; v < t.size(); ++v)
    t[v] = c.transition_with_label(v, in_w[v] ? TransitionLabel::Psi : TransitionLabel::Chi);
  CircuitPartition p(c.graph_ptr(), std::move(t));
  ensure(p.size() == c.graph().component_count(),
         "iota_transform: nonsingular matrix but not an Euler system");
  return EulerSystem(std::move(p));
}

const char* iota_case_name(IotaCase c) {
  switch (c) {
    case IotaCase::ChiChi: return "chi chi'";
    case IotaCase::ChiPsi: return "chi psi'";
    case IotaCase::PsiChi: return "psi chi'";
    case IotaCase::PsiPsi: return "psi psi'";
  }
  return "?";
}

IotaCaseReport iota_case_analysis(const EulerSystem& c, const VertexSet& w) {
  EulerSystem transformed = iota_transform(c, w);
  const SymMatrix m_inv = inverse(toggle_diagonal(interlacement(c), w));
  const Labels& labels = c.graph().vertices();
  const std::size_t n = labels.size();
  std::vector<std::size_t> x_idx;
  for (std::size_t v = 0; v < n; ++v)
    if (m_inv.get(v, v)) x_idx.push_back(v);
  VertexSet x = VertexSet::from_indices(labels, x_idx);

  using L = TransitionLabel;
  std::vector<IotaCase> cases(n);
  for (std::size_t v = 0; v < n; ++v) {
    const bool in_w = w.contains(labels[v]);
    const bool in_x = x.contains(labels[v]);
    cases[v] = in_w ? (in_x ? IotaCase::PsiPsi : IotaCase::PsiChi)
                    : (in_x ? IotaCase::ChiPsi : IotaCase::ChiChi);
    // For each of C's labels, the label the same transition carries under C#W.
    std::array<L, 3> expected{};  // indexed by phi, chi, psi of C
    switch (cases[v]) {
      case IotaCase::PsiPsi: expected = {L::Psi, L::Chi, L::Phi}; break;
      case IotaCase::PsiChi: expected = {L::Chi, L::Psi, L::Phi}; break;
      case IotaCase::ChiPsi: expected = {L::Psi, L::Phi, L::Chi}; break;
      case IotaCase::ChiChi: expected = {L::Chi, L::Phi, L::Psi}; break;
    }
    constexpr std::array<L, 3> kOwn{L::Phi, L::Chi, L::Psi};
    for (std::size_t k = 0; k < 3; ++k) {
      const Transition t = c.transition_with_label(v, kOwn[k]);
      ensure(transformed.label_of(v, t) == expected[k],
             "iota_case_analysis: slot-level labels disagree with the W/X case");
    }
  }
  return {std::move(transformed), std::move(x), std::move(cases)};
}

CircuitPartition third_partition(const EulerSystem& c, const EulerSystem& c2) {
  require_same_graph(c.partition(), c2.partition());
  TransitionSystem t(c.graph().vertex_count());
  for (std::size_t v = 0; v < t.size(); ++v) {
    const Transition a = c.transitions()[v];
    const Transition b = c2.transitions()[v];
    t[v] = a == b ? a : Transition::third(a, b);
  }
  return CircuitPartition(c.graph_ptr(), std::move(t));
}

bool compatible(const EulerSystem& a, const EulerSystem& b) {
  require_same_graph(a.partition(), b.partition());
  for (std::size_t v = 0; v < a.transitions().size(); ++v)
    if (a.transitions()[v] == b.transitions()[v]) return false;
  return true;
}

CircuitPartition short_circuit_partition(const EulerSystem& c, std::size_t v) {
  TransitionSystem t = c.transitions();
  t.at(v) = c.transition_with_label(v, TransitionLabel::Chi);
  return CircuitPartition(c.graph_ptr(), std::move(t));
}

CircuitNullity circuit_nullity_check(const CircuitPartition& p, const EulerSystem& c) {
  const auto rn = rank_nullity(relative_interlacement(p, c));
  CircuitNullity out{rn.nullity, p.size(), p.graph().component_count()};
  ensure(out.nullity + out.components == out.circuits,
         "circuit-nullity formula violated");
  return out;
}

}  // namespace lcgf2
