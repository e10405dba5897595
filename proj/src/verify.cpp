#include "lcgf2/verify.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "lcgf2/circuits.hpp"
#include "lcgf2/corpus.hpp"
#include "lcgf2/equivalence.hpp"
#include "lcgf2/error.hpp"
#include "lcgf2/fixtures.hpp"
#include "lcgf2/gf2core.hpp"

namespace lcgf2::verify {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

class Recorder {
 public:
  explicit Recorder(std::string suite) : start_(std::chrono::steady_clock::now()) {
    result_.suite = std::move(suite);
  }

  bool check(const std::string& name, bool ok, const std::function<std::string()>& witness = {}) {
    Check& c = entry(name);
    ++c.checked;
    if (ok) {
      ++c.passed;
    } else if (result_.witnesses.size() < kMaxWitnesses) {
      result_.witnesses.push_back(name + ": " + (witness ? witness() : std::string("failed")));
    }
    return ok;
  }

  /// Runs body; a thrown exception counts as one failed check under `name`.
  template <class F>
  void guarded(const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      const std::string what = e.what();
      check(name, false, [&what] { return std::string("exception: ") + what; });
    }
  }

  void note(std::string line) { result_.notes.push_back(std::move(line)); }

  SuiteResult finish() {
    result_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(result_);
  }

 private:
  Check& entry(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return result_.checks[it->second];
    index_.emplace(name, result_.checks.size());
    result_.checks.push_back({name, 0, 0});
    return result_.checks.back();
  }

  SuiteResult result_;
  std::map<std::string, std::size_t> index_;
  std::chrono::steady_clock::time_point start_;
};

std::string show(const SymMatrix& m) {
  std::string s;
  for (const auto& row : m.rows_as_strings()) s += (s.empty() ? "" : "/") + row;
  return s.empty() ? "()" : s;
}

std::string show(const EulerSystem& c) { return format_words(c.words()); }

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Zero-diagonal matrix whose upper-triangle entries (row-major) are the
/// bits of `mask`.
SymMatrix zero_diagonal_from_mask(const Labels& labels, std::uint64_t mask) {
  SymMatrix m = SymMatrix::zero(labels);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j, ++bit)
      if (mask >> bit & 1u) m.set(i, j, true);
  return m;
}

std::uint64_t mask_of(const SymMatrix& m) {
  std::uint64_t mask = 0;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j, ++bit)
      if (m.get(i, j)) mask |= std::uint64_t{1} << bit;
  return mask;
}

/// Symmetric matrix with upper triangle including the diagonal from `mask`.
SymMatrix symmetric_from_mask(const Labels& labels, std::uint64_t mask) {
  SymMatrix m = SymMatrix::zero(labels);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i; j < labels.size(); ++j, ++bit)
      if (mask >> bit & 1u) m.set(i, j, true);
  return m;
}

SymMatrix random_symmetric(std::size_t n, std::mt19937_64& rng, bool zero_diag) {
  SymMatrix m = SymMatrix::zero(Labels::numbered(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = zero_diag ? i + 1 : i; j < n; ++j)
      if (rng() & 1u) m.set(i, j, true);
  return m;
}

SymMatrix random_nonsingular(std::size_t n, std::mt19937_64& rng) {
  while (true) {
    SymMatrix m = random_symmetric(n, rng, false);
    if (is_nonsingular(m)) return m;
  }
}

std::vector<std::size_t> random_subset(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> x;
  for (std::size_t i = 0; i < n; ++i)
    if (rng() & 1u) x.push_back(i);
  return x;
}

std::optional<SymMatrix> try_ppt(const SymMatrix& m, std::span<const std::size_t> x) {
  try {
    return principal_pivot_transform(m, x);
  } catch (const Error& e) {
    if (e.code() != Errc::SingularPrincipalSubmatrix) throw;
    return std::nullopt;
  }
}

std::vector<std::size_t> symmetric_difference(const std::vector<std::size_t>& a,
                                              const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::uint64_t system_key(const TransitionSystem& t) {
  std::uint64_t key = 0;
  for (std::size_t v = t.size(); v-- > 0;) key = key * 3 + t[v].index();
  return key;
}

std::size_t option_or(const std::optional<std::size_t>& v, std::size_t fallback) {
  return v ? *v : fallback;
}

struct CorpusGraph {
  std::string name;
  GraphPtr graph;
  std::optional<EulerSystem> seed;  // the word's own Euler system, when from a word
};

/// Every corpus word on at most max_n letters, the worked-example graph when
/// it fits, and `random` random multigraphs on 1..max_n vertices.
std::vector<CorpusGraph> corpus_graphs(std::size_t max_n, std::size_t random, std::uint64_t seed) {
  std::vector<CorpusGraph> out;
  for (const auto& w : corpus::words_up_to(max_n)) {
    auto wg = from_words(std::span<const CyclicWord>(&w, 1));
    out.push_back({format_word(w), wg.graph, std::move(wg.system)});
  }
  if (max_n >= 5) {
    auto wg = from_words(fixtures::kWordC);
    out.push_back({std::string(fixtures::kWordC), wg.graph, std::move(wg.system)});
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < random && max_n > 0; ++k) {
    const std::size_t n = 1 + rng() % max_n;
    out.push_back({"random#" + std::to_string(k) + " (n=" + std::to_string(n) + ")",
                   corpus::random_graph(n, rng), std::nullopt});
  }
  return out;
}

// ---------------------------------------------------------------- lcinv

SymMatrix mi_apply(const SymMatrix& s, const DiagonalMask& mask) {
  return zero_diagonal(inverse(toggle_diagonal(s, mask)));
}

}  // namespace

std::size_t SuiteResult::checked() const {
  std::size_t k = 0;
  for (const auto& c : checks) k += c.checked;
  return k;
}

std::size_t SuiteResult::passed() const {
  std::size_t k = 0;
  for (const auto& c : checks) k += c.passed;
  return k;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lcinv",     "intinv",     "nullspaces",
                                              "nu-lemma",  "ppt-props",  "kotzig-tau",
                                              "paper-fixtures"};
  return names;
}

SuiteResult run_suite(std::string_view name, const Options& options) {
  if (name == "lcinv") return lcinv(options);
  if (name == "intinv") return intinv(options);
  if (name == "nullspaces") return nullspaces(options);
  if (name == "nu-lemma") return nu_lemma(options);
  if (name == "ppt-props") return ppt_props(options);
  if (name == "kotzig-tau") return kotzig_tau(options);
  if (name == "paper-fixtures") return paper_fixtures(options);
  throw Error(Errc::InvalidInput, "unknown suite '" + std::string(name) + "'");
}

SuiteResult lcinv(const Options& options) {
  Recorder rec("lcinv");
  const std::size_t max_n = option_or(options.max_n, 5);
  if (max_n > 7) throw Error(Errc::SizeCapExceeded, "lcinv sweeps at most n = 7");
  for (std::size_t n = 1; n <= max_n; ++n) {
    const Labels labels = Labels::numbered(n);
    const std::uint64_t count = std::uint64_t{1} << pair_count(n);
    const std::string tag = " n=" + std::to_string(n);

    // One-move MI neighbourhoods, by mask.
    std::vector<std::vector<std::uint64_t>> mi(count);
    for (std::uint64_t k = 0; k < count; ++k) {
      const SymMatrix s = zero_diagonal_from_mask(labels, k);
      for (const auto& t : modified_inverses(s)) mi[k].push_back(mask_of(t));
      std::sort(mi[k].begin(), mi[k].end());
      rec.check("mi-nonempty" + tag, !mi[k].empty(), [&] { return show(s); });
    }
    for (std::uint64_t k = 0; k < count; ++k)
      for (std::uint64_t t : mi[k])
        rec.check("mi-symmetric" + tag, std::binary_search(mi[t].begin(), mi[t].end(), k), [&] {
          return show(zero_diagonal_from_mask(labels, k)) + " -> " +
                 show(zero_diagonal_from_mask(labels, t));
        });

    // Class partitions.
    std::vector<int> lc_class(count, -1);
    std::size_t classes = 0;
    bool all_equal = true;
    for (std::uint64_t k = 0; k < count; ++k) {
      if (lc_class[k] >= 0) continue;
      const SymMatrix s = zero_diagonal_from_mask(labels, k);
      rec.guarded("lc-classes-equal-mi" + tag, [&] {
        const EquivClass lc = class_closure(s, Relation::LC);
        const EquivClass mic = class_closure(s, Relation::MI);
        bool same = lc.size() == mic.size();
        for (const auto& m : lc.members()) same = same && mic.contains(m);
        all_equal = all_equal && same;
        for (const auto& m : lc.members()) {
          const std::uint64_t id = mask_of(m);
          rec.check("classes-partition" + tag, lc_class[id] < 0, [&] { return show(m); });
          lc_class[id] = static_cast<int>(classes);
        }
        rec.check("lc-classes-equal-mi" + tag, same, [&] {
          return "seed " + show(s) + ": |lc| = " + std::to_string(lc.size()) +
                 ", |mi| = " + std::to_string(mic.size());
        });
        ++classes;
      });
    }
    for (std::uint64_t k = 0; k < count; ++k)
      rec.check("classes-partition" + tag, lc_class[k] >= 0,
                [&] { return "unassigned " + show(zero_diagonal_from_mask(labels, k)); });
    rec.note(std::to_string(count) + " matrices (n=" + std::to_string(n) + "), classes under lc " +
             (all_equal ? "==" : "!=") + " classes under mi (" + std::to_string(classes) +
             " classes)");

    // S^i within two MI moves: bounded search, and the explicit construction.
    for (std::uint64_t k = 0; k < count; ++k) {
      const SymMatrix s = zero_diagonal_from_mask(labels, k);
      std::unordered_set<std::uint64_t> reach{k};
      for (std::uint64_t t : mi[k]) {
        reach.insert(t);
        reach.insert(mi[t].begin(), mi[t].end());
      }
      for (std::size_t i = 0; i < n; ++i) {
        const SymMatrix target = simple_local_complement(s, i);
        rec.check("lc-within-two-mi" + tag, reach.contains(mask_of(target)),
                  [&] { return show(s) + " at " + labels[i]; });
        rec.guarded("lc-by-two-inversions" + tag, [&] {
          const auto path = local_complement_by_inversions(s, i);
          const SymMatrix end = path.trivial ? s : mi_apply(mi_apply(s, path.first_mask),
                                                            path.second_mask);
          rec.check("lc-by-two-inversions" + tag, end == target,
                    [&] { return show(s) + " at " + labels[i]; });
        });
      }
    }
  }

  // PIV coarsening spot checks.
  std::mt19937_64 rng(options.seed);
  const std::size_t trials = option_or(options.trials, 20);
  for (std::size_t k = 0; k < trials; ++k) {
    const std::size_t n = 1 + rng() % std::min<std::size_t>(max_n, 5);
    const SymMatrix s = random_symmetric(n, rng, true);
    SymMatrix s_looped = s;
    for (std::size_t i = 0; i < n; ++i)
      if (rng() & 1u) s_looped.toggle(i, i);
    rec.guarded("piv-coarsens-lc", [&] {
      const EquivClass lc = class_closure(s, Relation::LC);
      const EquivClass piv = class_closure(s_looped, Relation::PIV);
      for (const auto& t : piv.members())
        rec.check("piv-coarsens-lc", lc.contains(zero_diagonal(t)),
                  [&] { return show(s_looped) + " ~piv " + show(t); });
    });
  }
  return rec.finish();
}

// ---------------------------------------------------------------- intinv

SuiteResult intinv(const Options& options) {
  Recorder rec("intinv");
  const std::size_t max_n = option_or(options.max_n, 6);
  const auto graphs = corpus_graphs(max_n, option_or(options.trials, 40), options.seed);
  std::size_t pairs = 0, triples = 0;
  for (const auto& cg : graphs) {
    rec.guarded("graph", [&] {
      const auto systems = enumerate_euler_systems(cg.graph);
      const std::size_t m = systems.size();
      std::unordered_map<std::uint64_t, std::size_t> id;
      for (std::size_t k = 0; k < m; ++k) id.emplace(system_key(systems[k].transitions()), k);
      // rel[a * m + b] = I_{systems[b]}(systems[a])
      std::vector<SymMatrix> rel(m * m);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          rel[a * m + b] = relative_interlacement(systems[b].partition(), systems[a]);
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          ++pairs;
          const SymMatrix& fwd = rel[a * m + b];
          const SymMatrix& back = rel[b * m + a];
          auto witness = [&] {
            return cg.name + ": C = " + show(systems[a]) + ", C'' = " + show(systems[b]);
          };
          if (!rec.check("relative-nonsingular", is_nonsingular(fwd), witness)) continue;
          rec.check("inverse-identity", inverse(fwd) == back, witness);
          const CircuitPartition p = third_partition(systems[a], systems[b]);
          const SymMatrix lhs = relative_interlacement(p, systems[a]);
          const BitMatrix rhs = fwd.bits() * relative_interlacement(p, systems[b]).bits();
          rec.check("product-identity", lhs.bits() == rhs, witness);
          if (!compatible(systems[a], systems[b])) continue;
          TransitionSystem t(systems[a].transitions().size());
          for (std::size_t v = 0; v < t.size(); ++v)
            t[v] = Transition::third(systems[a].transitions()[v], systems[b].transitions()[v]);
          const auto third = id.find(system_key(t));
          if (third == id.end()) continue;
          const std::size_t c = third->second;
          ++triples;
          // I_C(C') . I_{C''}(C) . I_{C'}(C'') with C = a, C' = b, C'' = c.
          const BitMatrix prod = rel[b * m + a].bits() * rel[a * m + c].bits() *
                                 rel[c * m + b].bits();
          rec.check("triple-product-identity", prod == BitMatrix::identity(t.size()), witness);
        }
      }
    });
  }
  rec.note(std::to_string(graphs.size()) + " graphs (|V| <= " + std::to_string(max_n) + "), " +
           std::to_string(pairs) + " ordered Euler-system pairs, " + std::to_string(triples) +
           " ordered pairwise-compatible triples");
  return rec.finish();
}

// ---------------------------------------------------------------- nullspaces

namespace {

void check_partition(Recorder& rec, const std::string& name, const CircuitPartition& p,
                     const EulerSystem& c) {
  auto witness = [&] { return name + ": C = " + show(c) + ", P = " + format_words(p.words()); };
  const SymMatrix m = relative_interlacement(p, c);
  const auto rn = rank_nullity(m);
  const std::size_t comps = p.graph().component_count();
  rec.check("circuit-nullity", rn.nullity + comps == p.size(), witness);
  const auto cores = relative_core_vectors(p, c);
  std::vector<BitVector> core_bits, basis_bits;
  for (const auto& v : cores) {
    core_bits.push_back(v.bits());
    rec.check("core-in-kernel", (v.bits() * m.bits()).is_zero(), witness);
  }
  for (const auto& v : nullspace_basis(m)) basis_bits.push_back(v.bits());
  rec.check("cores-span-nullspace", same_span(core_bits, basis_bits, m.size()), witness);

  // Per component, the core vectors of incident circuits sum to zero.
  std::vector<BitVector> sums(comps, BitVector(m.size()));
  std::vector<std::uint64_t> component_mask(comps, 0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    const std::size_t comp = p.circuits()[k].component;
    sums[comp] ^= core_bits[k];
    component_mask[comp] |= std::uint64_t{1} << k;
  }
  for (const auto& s : sums) rec.check("component-sum-zero", s.is_zero(), witness);

  // Every nonempty subset avoiding a full component has a nonzero sum, so
  // such subsets are independent. Gray-code walk over subsets.
  ensure(p.size() < 63, "too many circuits for a subset walk");
  bool independent = true;
  BitVector acc(m.size());
  std::uint64_t subset = 0;
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t g = 1; g < total; ++g) {
    const unsigned flip = static_cast<unsigned>(std::countr_zero(g));
    subset ^= std::uint64_t{1} << flip;
    acc ^= core_bits[flip];
    bool admissible = true;
    for (std::uint64_t cm : component_mask) admissible = admissible && (subset & cm) != cm;
    if (admissible && acc.is_zero()) independent = false;
  }
  rec.check("proper-subfamily-independent", independent, witness);
}

}  // namespace

SuiteResult nullspaces(const Options& options) {
  Recorder rec("nullspaces");
  const std::size_t max_n = option_or(options.max_n, 6);
  const auto graphs = corpus_graphs(max_n, option_or(options.trials, 40), options.seed);
  std::size_t partitions = 0;
  for (const auto& cg : graphs) {
    rec.guarded("graph", [&] {
      std::vector<EulerSystem> refs;
      if (cg.seed && cg.graph->vertex_count() > 4) {
        refs.push_back(*cg.seed);
      } else {
        refs = enumerate_euler_systems(cg.graph);
      }
      const std::size_t n = cg.graph->vertex_count();
      for (const auto& c : refs) {
        TransitionSystem t(n, Transition::from_index(0));
        std::vector<unsigned> digits(n, 0);
        while (true) {
          const CircuitPartition p(cg.graph, t);
          ++partitions;
          rec.guarded("partition", [&] { check_partition(rec, cg.name, p, c); });
          std::size_t k = 0;
          while (k < n && digits[k] == 2) {
            digits[k] = 0;
            t[k] = Transition::from_index(0);
            ++k;
          }
          if (k == n) break;
          t[k] = Transition::from_index(++digits[k]);
        }
      }
    });
  }
  rec.note(std::to_string(graphs.size()) + " graphs (|V| <= " + std::to_string(max_n) + "), " +
           std::to_string(partitions) + " (Euler system, partition) pairs");
  return rec.finish();
}

// ---------------------------------------------------------------- nu-lemma

SuiteResult nu_lemma(const Options& options) {
  Recorder rec("nu-lemma");
  const std::size_t max_n = option_or(options.max_n, 4);
  if (max_n > 6) throw Error(Errc::SizeCapExceeded, "nu-lemma sweeps at most n = 6");
  std::size_t cases = 0;
  for (std::size_t n = 0; n <= max_n; ++n) {
    const Labels labels = Labels::numbered(n);
    const std::uint64_t matrices = std::uint64_t{1} << (n * (n + 1) / 2);
    const std::string tag = " n=" + std::to_string(n);
    for (std::uint64_t k = 0; k < matrices; ++k) {
      const SymMatrix m = symmetric_from_mask(labels, k);
      for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r) {
        BitVector bits(n);
        for (std::size_t i = 0; i < n; ++i)
          if (r >> i & 1u) bits.set(i, true);
        const Gf2Vector rho(labels, bits);
        ++cases;
        rec.guarded("two-share-one-contains" + tag, [&] {
          const auto report = nu_triple(m, rho);
          // Re-derive the conclusion from the three nullspaces.
          std::array<std::vector<BitVector>, 3> ker;
          for (std::size_t a = 0; a < 3; ++a)
            for (const auto& v : nullspace_basis(report.matrices[a])) ker[a].push_back(v.bits());
          bool found = false;
          for (std::size_t odd = 0; odd < 3 && !found; ++odd) {
            const std::size_t x = (odd + 1) % 3, y = (odd + 2) % 3;
            found = same_span(ker[x], ker[y], n + 1) && ker[odd].size() == ker[x].size() + 1 &&
                    span_contains(ker[odd], ker[x], n + 1);
          }
          rec.check("two-share-one-contains" + tag, found,
                    [&] { return "M = " + show(m) + ", rho = " + rho.to_string(); });
        });
      }
    }
  }
  rec.note(std::to_string(cases) + " (M, rho) cases, n <= " + std::to_string(max_n));
  return rec.finish();
}

// ---------------------------------------------------------------- ppt-props

SuiteResult ppt_props(const Options& options) {
  Recorder rec("ppt-props");
  const std::size_t max_n = option_or(options.max_n, 8);
  const std::size_t trials = option_or(options.trials, 1000);
  if (max_n == 0) throw Error(Errc::InvalidInput, "ppt-props needs max-n >= 1");
  std::mt19937_64 rng(options.seed);
  auto pick_n = [&] { return 1 + rng() % max_n; };

  std::size_t composed = 0, attempts = 0;
  while (composed < trials && attempts < 200 * trials) {
    ++attempts;
    const SymMatrix m = random_symmetric(pick_n(), rng, false);
    const auto x1 = random_subset(m.size(), rng);
    const auto x2 = random_subset(m.size(), rng);
    const auto a = try_ppt(m, x1);
    if (!a) continue;
    const auto b = try_ppt(*a, x2);
    if (!b) continue;
    ++composed;
    const auto c = try_ppt(m, symmetric_difference(x1, x2));
    rec.check("composition", c && *c == *b, [&] { return show(m); });
    rec.check("symmetric", b->bits().is_symmetric(), [&] { return show(m); });
  }
  rec.check("composition-instances", composed == trials, [&] {
    return "only " + std::to_string(composed) + " defined instances";
  });

  for (std::size_t k = 0; k < trials; ++k) {
    const SymMatrix m = random_nonsingular(pick_n(), rng);
    std::vector<std::size_t> x;
    std::optional<SymMatrix> mx;
    do {
      x = random_subset(m.size(), rng);
      mx = try_ppt(m, x);
    } while (!mx);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (!std::binary_search(x.begin(), x.end(), i)) rest.push_back(i);
    const BitMatrix block = mx->bits().submatrix(rest, rest);
    rec.check("complement-nonsingular", block.rank() == rest.size(), [&] { return show(m); });
  }

  for (std::size_t k = 0; k < trials; ++k) {
    const SymMatrix m = random_nonsingular(pick_n(), rng);
    rec.guarded("inverse-walk", [&] {
      const auto steps = ppt_inverse_walk(m);
      std::vector<int> uses(m.size(), 0);
      for (const auto& s : steps) {
        ++uses[s.first];
        if (s.kind == WalkStep::Kind::Pair) ++uses[s.second];
      }
      const bool once = std::all_of(uses.begin(), uses.end(), [](int u) { return u == 1; });
      rec.check("inverse-walk", once && apply_walk(m, steps) == inverse(m),
                [&] { return show(m); });
    });
  }

  for (std::size_t k = 0; k < trials; ++k) {
    const SymMatrix m = random_nonsingular(pick_n(), rng);
    std::vector<std::size_t> zeros;
    for (std::size_t r = 0; r < m.size(); ++r)
      if (!m.get(r, r)) zeros.push_back(r);
    if (zeros.empty()) continue;
    const std::size_t r = zeros[rng() % zeros.size()];
    const SymMatrix toggled = toggle_neighbourhood_block(m, r);
    const bool ok = is_nonsingular(toggled) &&
                    inverse(toggled) == toggle_diagonal(inverse(m), VertexSet{m.labels()[r]});
    rec.check("block-toggle-inverse", ok, [&] { return show(m) + " at " + m.labels()[r]; });
  }
  rec.note(std::to_string(trials) + " instances per property, n <= " + std::to_string(max_n) +
           ", seed " + std::to_string(options.seed));
  return rec.finish();
}

// ---------------------------------------------------------------- kotzig-tau

SuiteResult kotzig_tau(const Options& options) {
  Recorder rec("kotzig-tau");
  const std::size_t max_n = option_or(options.max_n, 6);
  const auto graphs = corpus_graphs(max_n, option_or(options.trials, 40), options.seed);
  std::size_t total_systems = 0;
  std::size_t iota_failures = 0, iota_failures_obstructed = 0;
  for (const auto& cg : graphs) {
    rec.guarded("graph", [&] {
      const auto systems = enumerate_euler_systems(cg.graph);
      const std::size_t m = systems.size();
      const std::size_t n = cg.graph->vertex_count();
      total_systems += m;
      std::unordered_map<std::uint64_t, std::size_t> id;
      for (std::size_t k = 0; k < m; ++k) id.emplace(system_key(systems[k].transitions()), k);
      std::vector<std::vector<std::size_t>> kappa(m), iota(m);
      auto lookup = [&](const EulerSystem& e) {
        const auto it = id.find(system_key(e.transitions()));
        rec.check("move-stays-in-enumeration", it != id.end(),
                  [&] { return cg.name + ": " + show(e); });
        return it == id.end() ? m : it->second;
      };
      for (std::size_t k = 0; k < m; ++k) {
        const EulerSystem& c = systems[k];
        for (std::size_t v = 0; v < n; ++v) {
          const EulerSystem d = kappa_transform(c, v);
          rec.check("kappa-involution", kappa_transform(d, v) == c,
                    [&] { return cg.name + ": " + show(c); });
          if (const std::size_t j = lookup(d); j < m) kappa[k].push_back(j);
        }
        const SymMatrix ic = interlacement(c);
        const Labels& labels = cg.graph->vertices();
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
          std::vector<std::size_t> idx;
          for (std::size_t v = 0; v < n; ++v)
            if (w >> v & 1u) idx.push_back(v);
          if (!is_nonsingular(toggle_diagonal(ic, VertexSet::from_indices(labels, idx)))) continue;
          const auto report = iota_case_analysis(c, VertexSet::from_indices(labels, idx));
          if (const std::size_t j = lookup(report.transformed); j < m) iota[k].push_back(j);
        }
      }
      auto closure = [&](const std::vector<std::vector<std::size_t>>& adj, const char* name) {
        // Moves are reversible, so reaching everything from one seed means
        // everything is reachable from every seed.
        for (std::size_t k = 0; k < m; ++k)
          for (std::size_t j : adj[k])
            rec.check(std::string(name) + "-reversible",
                      std::find(adj[j].begin(), adj[j].end(), k) != adj[j].end(),
                      [&] { return cg.name + ": " + show(systems[k]); });
        std::vector<bool> seen(m, false);
        std::deque<std::size_t> queue{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!queue.empty()) {
          const std::size_t k = queue.front();
          queue.pop_front();
          for (std::size_t j : adj[k])
            if (!seen[j]) {
              seen[j] = true;
              ++reached;
              queue.push_back(j);
            }
        }
        return rec.check(std::string(name) + "-reaches-all", reached == m, [&] {
          return cg.name + ": reached " + std::to_string(reached) + " of " + std::to_string(m);
        });
      };
      if (!rec.check("euler-systems-exist", m > 0, [&] { return cg.name; })) return;
      // At a loop or cut vertex one of the three transitions disconnects the
      // circuit, so Euler systems use only two there. Every iota-move leaves
      // phi at every vertex, hence flips all such vertices at once: with two
      // or more, the xor of their states is invariant.
      std::vector<bool> looped(n, false);
      for (const auto& [s, t] : cg.graph->edges())
        if (s / 4 == t / 4) looped[s / 4] = true;
      std::size_t constrained = 0;
      for (std::size_t v = 0; v < n; ++v) {
        std::vector<Transition> seen_at_v;
        for (const auto& e : systems)
          if (std::find(seen_at_v.begin(), seen_at_v.end(), e.transitions()[v]) == seen_at_v.end())
            seen_at_v.push_back(e.transitions()[v]);
        if (seen_at_v.size() == 2) ++constrained;
        if (looped[v])
          rec.check("looped-vertex-two-transitions", seen_at_v.size() == 2,
                    [&] { return cg.name + ": vertex " + cg.graph->vertices()[v]; });
      }
      closure(kappa, "kappa");
      if (!closure(iota, "iota")) {
        ++iota_failures;
        if (constrained >= 2) ++iota_failures_obstructed;
      }
    });
  }
  rec.note("iota-move graph disconnected on " + std::to_string(iota_failures) + " graphs, " +
           std::to_string(iota_failures_obstructed) +
           " of them with two or more loop or cut vertices (parity obstruction)");
  rec.note(std::to_string(graphs.size()) + " graphs (|V| <= " + std::to_string(max_n) + "), " +
           std::to_string(total_systems) + " Euler systems");
  return rec.finish();
}

// ---------------------------------------------------------------- paper-fixtures

namespace {

std::vector<std::string> sorted_strings(const std::vector<Gf2Vector>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted_strings(std::vector<std::string_view> vs) {
  std::vector<std::string> out(vs.begin(), vs.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool same_matrix_set(std::vector<SymMatrix> a, std::vector<SymMatrix> b) {
  auto less = [](const SymMatrix& x, const SymMatrix& y) { return x.lex_less(y); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

bool contains(const std::vector<SymMatrix>& set, const SymMatrix& m) {
  return std::find(set.begin(), set.end(), m) != set.end();
}

}  // namespace

SuiteResult paper_fixtures(const Options&) {
  Recorder rec("paper-fixtures");

  rec.guarded("triangle-family", [&] {
    const auto fam = fixtures::triangle_family();
    for (std::size_t k = 0; k < fam.size(); ++k) {
      std::vector<SymMatrix> others;
      for (std::size_t j = 0; j < fam.size(); ++j)
        if (j != k) others.push_back(fam[j]);
      rec.check("triangle-mi-is-other-three", same_matrix_set(modified_inverses(fam[k]), others),
                [&] { return show(fam[k]); });
    }
    rec.check("triangle-lc-neighbours",
              same_matrix_set(neighbors(fam[0], Relation::LC), {fam[1], fam[2], fam[3]}));
    for (std::size_t k = 1; k < fam.size(); ++k)
      rec.check("triangle-lc-neighbours", same_matrix_set(neighbors(fam[k], Relation::LC),
                                                          {fam[k], fam[0]}),
                [&] { return show(fam[k]); });
    const auto lc = class_closure(fam[0], Relation::LC);
    const auto mi = class_closure(fam[0], Relation::MI);
    rec.check("triangle-classes", same_matrix_set(lc.members(), std::vector<SymMatrix>(
                                                                    fam.begin(), fam.end())) &&
                                      same_matrix_set(mi.members(), lc.members()));
  });

  rec.guarded("four-vertex-family", [&] {
    const auto fam = fixtures::four_vertex_family();
    for (std::size_t i = 0; i < 3; ++i) {
      const auto mis = modified_inverses(fam[i]);
      for (std::size_t j = 0; j < 3; ++j)
        rec.check("four-vertex-pattern", contains(mis, fam[j]) == fixtures::kFourVertexPattern[i][j],
                  [&] { return "matrix " + std::to_string(i + 1) + " vs " + std::to_string(j + 1); });
    }
  });

  rec.guarded("worked-examples", [&] {
    const auto wg = from_words(fixtures::kWordC);
    const GraphPtr& g = wg.graph;
    const EulerSystem& c = wg.system;
    rec.check("graph-shape", g->vertex_count() == 5 && g->edge_count() == 10 &&
                                 g->component_count() == 1);
    // Words do not fix a transition at a loop or between parallel edges, so
    // C' is taken as C # {c,e} and checked against its word.
    const EulerSystem cp = iota_transform(c, VertexSet{"c", "e"});
    const auto cprime_words = parse_words(fixtures::kWordCPrime);
    rec.check("cprime-word", cp.words() == canonical_multiset(cprime_words),
              [&] { return show(cp); });

    rec.check("interlacement-c", interlacement(c) == zero_diagonal(fixtures::rel_cprime_c()));
    rec.check("interlacement-cprime",
              interlacement(cp) == zero_diagonal(fixtures::rel_c_cprime()));
    rec.check("rel-cprime-c", relative_interlacement(cp.partition(), c) == fixtures::rel_cprime_c());
    rec.check("rel-c-cprime", relative_interlacement(c.partition(), cp) == fixtures::rel_c_cprime());
    rec.check("inverse-relation", inverse(fixtures::rel_cprime_c()) == fixtures::rel_c_cprime());
    rec.check("inverse-walk", apply_walk(fixtures::rel_cprime_c(),
                                         ppt_inverse_walk(fixtures::rel_cprime_c())) ==
                                  fixtures::rel_c_cprime());
    rec.check("toggle-ce", toggle_diagonal(interlacement(c), VertexSet{"c", "e"}) ==
                               fixtures::rel_cprime_c());

    // Among the partitions reading as P's words, exactly one has the
    // published I_P(C); every partition reading as P''s words has I_{P'}(C).
    const auto p_matches = partitions_matching_words(g, parse_words(fixtures::kPartitionP));
    std::vector<CircuitPartition> p_fit;
    for (const auto& x : p_matches)
      if (relative_interlacement(x, c) == fixtures::rel_p_c()) p_fit.push_back(x);
    rec.check("p-determined-by-matrix", p_fit.size() == 1,
              [&] { return std::to_string(p_fit.size()) + " of " + std::to_string(p_matches.size()); });
    rec.check("pprime-published-unrealisable",
              partitions_matching_words(g, parse_words(fixtures::kPartitionPPrimePublished)).empty());
    const auto pp_matches = partitions_matching_words(g, parse_words(fixtures::kPartitionPPrime));
    rec.check("pprime-realisable", !pp_matches.empty());
    const CircuitPartition& p = p_fit.at(0);
    const CircuitPartition& pp = pp_matches.at(0);
    for (const auto& x : pp_matches)
      rec.check("pprime-readings-agree", relative_interlacement(x, c) == fixtures::rel_pp_c() &&
                                             relative_interlacement(x, cp) ==
                                                 fixtures::rel_pp_cprime());
    rec.check("partition-sizes", p.size() == 4 && pp.size() == 3);

    struct Case {
      const char* name;
      const CircuitPartition& p;
      const EulerSystem& c;
      SymMatrix expected;
      std::size_t nullity;
      std::vector<std::string_view> cores;
    };
    const Case cases[] = {
        {"P,C", p, c, fixtures::rel_p_c(), 3, fixtures::core_p_c()},
        {"P,C'", p, cp, fixtures::rel_p_cprime(), 3, fixtures::core_p_cprime()},
        {"P',C", pp, c, fixtures::rel_pp_c(), 2, fixtures::core_pp_c()},
        {"P',C'", pp, cp, fixtures::rel_pp_cprime(), 2, fixtures::core_pp_cprime()},
    };
    for (const auto& k : cases) {
      const SymMatrix m = relative_interlacement(k.p, k.c);
      rec.check(std::string("relative-matrix ") + k.name, m == k.expected,
                [&] { return show(m); });
      const auto cn = circuit_nullity_check(k.p, k.c);
      rec.check(std::string("nullity ") + k.name,
                cn.nullity == k.nullity && rank_nullity(k.expected).nullity == k.nullity);
      const auto cores = relative_core_vectors(k.p, k.c);
      rec.check(std::string("core-vectors ") + k.name,
                sorted_strings(cores) == sorted_strings(k.cores), [&] {
                  std::string s;
                  for (const auto& v : sorted_strings(cores)) s += v + " ";
                  return s;
                });
      std::vector<BitVector> printed, basis;
      for (auto bits : k.cores) printed.push_back(BitVector::from_string(bits));
      for (const auto& v : nullspace_basis(k.expected)) basis.push_back(v.bits());
      rec.check(std::string("core-span ") + k.name, same_span(printed, basis, 5));
    }

    auto label_string = [](const std::vector<TransitionLabel>& ls) {
      std::string s;
      for (auto l : ls) s += std::string(label_name(l)) + " ";
      return s;
    };
    using L = TransitionLabel;
    rec.check("labels P vs C",
              transition_labels(c, p) == std::vector<L>{L::Chi, L::Phi, L::Chi, L::Phi, L::Chi},
              [&] { return label_string(transition_labels(c, p)); });
    rec.check("labels C' vs C",
              transition_labels(c, cp.partition()) ==
                  std::vector<L>{L::Chi, L::Chi, L::Psi, L::Chi, L::Psi},
              [&] { return label_string(transition_labels(c, cp.partition())); });

    const auto report = iota_case_analysis(c, VertexSet{"c", "e"});
    rec.check("iota-ce-is-cprime", report.transformed == cp);
    rec.check("iota-ce-X", report.x == VertexSet{"a", "b", "e"}, [&] { return report.x.to_string(); });
    using I = IotaCase;
    rec.check("iota-ce-cases",
              report.cases == std::vector<I>{I::ChiPsi, I::ChiPsi, I::PsiChi, I::ChiChi, I::PsiPsi});
    std::size_t nullity = 0;
    try {
      iota_transform(c, VertexSet{});
    } catch (const SingularityError& e) {
      nullity = e.nullity();
    }
    rec.check("iota-empty-singular", nullity == 1);

    // Row v of I_{C''}(C) is the core vector of either short-circuit trail.
    const auto systems = enumerate_euler_systems(g);
    for (const auto& c1 : systems)
      for (const auto& c2 : systems)
        for (std::size_t v = 0; v < 5; ++v) {
          if (c1.transitions()[v] == c2.transitions()[v]) continue;
          const CircuitPartition sc = short_circuit_partition(c1, v);
          const SymMatrix rel = relative_interlacement(c2.partition(), c1);
          const auto cores = relative_core_vectors(sc, c2);
          for (std::size_t k = 0; k < sc.size(); ++k) {
            if (sc.incidence(k, v) == 0) continue;
            rec.check("short-circuit-row", cores[k].bits() == rel.bits().row(v),
                      [&] { return show(c1) + " / " + show(c2) + " at " + g->vertices()[v]; });
          }
        }
  });

  rec.guarded("looped-complement", [&] {
    const auto fam = fixtures::triangle_family();
    SymMatrix expected = fam[1];
    expected.toggle(1, 1);
    expected.toggle(2, 2);
    rec.check("nslc-triangle", nonsimple_local_complement(fam[0], 0) == expected);
  });
  return rec.finish();
}

// ---------------------------------------------------------------- output

std::string format_text(const SuiteResult& r) {
  std::ostringstream out;
  std::size_t width = 5;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  out << "suite " << r.suite << '\n';
  out << "  " << std::string("check") << std::string(width - 5, ' ') << "  checked   passed\n";
  for (const auto& c : r.checks) {
    out << "  " << c.name << std::string(width - c.name.size(), ' ');
    const std::string a = std::to_string(c.checked), b = std::to_string(c.passed);
    out << "  " << std::string(a.size() < 7 ? 7 - a.size() : 0, ' ') << a << "  "
        << std::string(b.size() < 7 ? 7 - b.size() : 0, ' ') << b << '\n';
  }
  for (const auto& n : r.notes) out << n << '\n';
  for (const auto& w : r.witnesses) out << "counterexample: " << w << '\n';
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  out << "result: " << (r.ok() ? "PASS" : "FAIL") << " (" << r.passed() << "/" << r.checked()
      << " checks, " << secs << " s)\n";
  return out.str();
}

nlohmann::json to_json(const SuiteResult& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"checked", c.checked}, {"passed", c.passed}});
  return {{"suite", r.suite},       {"ok", r.ok()},
          {"checked", r.checked()}, {"passed", r.passed()},
          {"checks", checks},       {"notes", r.notes},
          {"witnesses", r.witnesses}, {"seconds", r.seconds}};
}

}  // namespace lcgf2::verify
