#pragma once

// Exhaustive and randomized sweeps of the theorems, one suite per name:
//
//   lcinv           LC classes equal MI classes; S^i within two MI moves
//   intinv          I_{C''}(C)^{-1} = I_C(C''), product and triple identities
//   nullspaces      circuit-nullity formula and core-vector nullspaces
//   nu-lemma        two bordered matrices share a nullspace, the third contains it
//   ppt-props       PPT composition, complement nonsingularity, inverse walk
//   kotzig-tau      kappa- and iota-move graphs reach every Euler system
//   paper-fixtures  the published worked examples, entry for entry
//
// Every suite is deterministic given Options::seed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace lcgf2::verify {

struct Options {
  std::optional<std::size_t> max_n;   // suite default when unset
  std::optional<std::size_t> trials;  // randomized instances; suite default when unset
  std::uint64_t seed = 1;
};

struct Check {
  std::string name;
  std::size_t checked = 0;
  std::size_t passed = 0;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  std::vector<std::string> notes;      // summary lines
  std::vector<std::string> witnesses;  // first counterexamples, capped
  double seconds = 0;

  std::size_t checked() const;
  std::size_t passed() const;
  bool ok() const { return checked() == passed(); }
};

const std::vector<std::string>& suite_names();

/// Throws Error(InvalidInput) for an unknown suite name.
SuiteResult run_suite(std::string_view name, const Options& options = {});

SuiteResult lcinv(const Options& options);
SuiteResult intinv(const Options& options);
SuiteResult nullspaces(const Options& options);
SuiteResult nu_lemma(const Options& options);
SuiteResult ppt_props(const Options& options);
SuiteResult kotzig_tau(const Options& options);
SuiteResult paper_fixtures(const Options& options);

std::string format_text(const SuiteResult& result);
nlohmann::json to_json(const SuiteResult& result);

}  // namespace lcgf2::verify
