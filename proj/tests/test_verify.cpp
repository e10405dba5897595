#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"
#include "lcgf2/circuits.hpp"
#include "lcgf2/error.hpp"
#include "lcgf2/gf2core.hpp"
#include "lcgf2/verify.hpp"

using namespace lcgf2;

namespace {

const verify::Check* find_check(const verify::SuiteResult& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("small suites pass") {
  verify::Options small;
  small.max_n = 3;
  small.trials = 10;
  for (const char* name : {"lcinv", "intinv", "nullspaces", "nu-lemma", "ppt-props"}) {
    CAPTURE(name);
    const auto r = verify::run_suite(name, small);
    CHECK(r.ok());
    CHECK(r.checked() > 0);
  }
  CHECK(verify::run_suite("paper-fixtures").ok());
  CHECK_THROWS_AS(verify::run_suite("unknown"), Error);
}

TEST_CASE("text and json reports") {
  verify::Options small;
  small.max_n = 2;
  const auto r = verify::run_suite("nu-lemma", small);
  CHECK(verify::format_text(r).find("PASS") != std::string::npos);
  CHECK(verify::to_json(r)["suite"] == "nu-lemma");
}

TEST_CASE("kappa moves connect every Euler system of small graphs") {
  verify::Options small;
  small.max_n = 4;
  small.trials = 10;
  const auto r = verify::run_suite("kotzig-tau", small);
  const auto* kappa = find_check(r, "kappa-reaches-all");
  REQUIRE(kappa != nullptr);
  CHECK(kappa->passed == kappa->checked);
  const auto* rev = find_check(r, "iota-reversible");
  REQUIRE(rev != nullptr);
  CHECK(rev->passed == rev->checked);
}

TEST_CASE("iota moves miss loop orientations on aabb") {
  // I(C) = 0, so the only admissible W is {a,b}: every iota move reverses
  // both loops together and the two mixed orientations are never reached.
  const WordGraph g = from_words("aabb");
  const auto systems = enumerate_euler_systems(g.graph);
  REQUIRE(systems.size() == 4);
  std::set<std::size_t> reached{0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t k : std::set<std::size_t>(reached))
      for (const VertexSet& w : {VertexSet{}, VertexSet{"a"}, VertexSet{"b"}, VertexSet{"a", "b"}}) {
        try {
          const EulerSystem e = iota_transform(systems[k], w);
          const auto j = static_cast<std::size_t>(std::find(systems.begin(), systems.end(), e) - systems.begin());
          REQUIRE(j < systems.size());
          grew |= reached.insert(j).second;
        } catch (const SingularityError&) {
        }
      }
  }
  CHECK(reached.size() == 2);
  // kappa reaches all four.
  std::set<std::size_t> kreached{0};
  for (std::size_t v = 0; v < 2; ++v)
    for (std::size_t k : std::set<std::size_t>(kreached))
      kreached.insert(static_cast<std::size_t>(
          std::find(systems.begin(), systems.end(), kappa_transform(systems[k], v)) - systems.begin()));
  CHECK(kreached.size() == 4);
}
