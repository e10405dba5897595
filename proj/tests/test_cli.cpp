#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using lcgf2::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "lcgf2_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"matrix", "rank"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("matrix rank and inverse") {
  const std::string k3 = temp_file("k3.txt", "3\n011\n101\n110\n");
  const std::string sw = temp_file("sw.txt", "2\n01\n10\n");
  const Run r = run({"matrix", "rank", k3});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "rank 2"));
  CHECK(contains(r.out, "nullity 1"));

  const Run inv = run({"matrix", "inverse", k3});
  CHECK(inv.code == 2);
  CHECK(contains(inv.err, "nullity 1"));

  const Run ok = run({"matrix", "inverse", sw, "--format", "json"});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["rows"] == nlohmann::json::array({"01", "10"}));

  const Run dot = run({"matrix", "inverse", sw, "--dot"});
  CHECK(contains(dot.out, "--"));

  CHECK(run({"matrix", "rank", temp_file("bad.txt", "2\n01\n00\n")}).code == 2);
  CHECK(run({"matrix", "rank", "/nonexistent/file"}).code == 2);
}

TEST_CASE("matrix moves and classes") {
  const std::string k3 = temp_file("k3.txt", "3\n011\n101\n110\n");
  const Run lc = run({"matrix", "lc", "1", k3});
  CHECK(lc.code == 0);
  CHECK(contains(lc.out, "011\n100\n100"));
  CHECK(run({"matrix", "pivot", "1", "3", temp_file("p3.txt", "3\n010\n101\n010\n")}).code == 2);
  CHECK(run({"matrix", "pivot", "1", "2", k3}).code == 0);
  CHECK(run({"matrix", "ppt", "1,2", k3}).code == 0);
  CHECK(run({"matrix", "ppt", "1,2,3", k3}).code == 2);

  const Run mi = run({"matrix", "mi", k3});
  CHECK(mi.code == 0);
  CHECK(contains(mi.out, "001\n001\n110"));

  const Run cls = run({"matrix", "class", "--relation", "mi", k3, "--format", "json"});
  CHECK(cls.code == 0);
  CHECK(contains(cls.out, "members"));
}

TEST_CASE("equivalence exit codes") {
  const std::string both = temp_file("both.txt", "3\n011\n101\n110\n\n3\n011\n100\n100\n");
  CHECK(run({"matrix", "equiv", both}).code == 0);
  const std::string k3 = temp_file("k3.txt", "3\n011\n101\n110\n");
  const std::string z3 = temp_file("z3.txt", "3\n000\n000\n000\n");
  CHECK(run({"matrix", "equiv", k3, z3}).code == 1);
  CHECK(run({"matrix", "equiv", k3, temp_file("sw.txt", "2\n01\n10\n")}).code == 2);
}

TEST_CASE("graph commands") {
  const Run inter = run({"graph", "interlace", "abcabc"});
  CHECK(inter.code == 0);
  CHECK(contains(inter.out, "011\n101\n110"));

  const Run iota = run({"graph", "iota", "abcdbcaeed", "c,e"});
  CHECK(iota.code == 0);
  CHECK(contains(iota.out, "abcbdeeadc"));
  CHECK(contains(iota.out, "X {a,b,e}"));

  const Run singular = run({"graph", "iota", "abcdbcaeed", "--W", ""});
  CHECK(singular.code == 1);
  CHECK(contains(singular.err, "nullity 1"));

  const Run kappa = run({"graph", "kappa", "abcabc", "a"});
  CHECK(kappa.code == 0);
  CHECK(contains(kappa.out, "abcacb"));

  CHECK(run({"graph", "parse", "aab"}).code == 2);
  CHECK(run({"graph", "kappa", "abab", "z"}).code == 2);

  const Run rel = run({"graph", "relmatrix", "abcdbcaeed", "e,ade,abc,bcd", "--match", "1"});
  CHECK(rel.code == 0);
  CHECK(contains(rel.err, "2 partitions read as"));
  CHECK(contains(rel.out, "00000\n01000\n00000\n00010\n00000"));
  CHECK(run({"graph", "relmatrix", "abcdbcaeed", "aeed,bc,abcd"}).code == 2);
  CHECK(run({"graph", "relmatrix", "abcdbcaeed", "e,ade,abc,bcd", "--match", "2"}).code == 2);

  const Run cores = run({"graph", "corevectors", "abcdbcaeed", "e,ade,abc,bcd"});
  CHECK(cores.code == 0);
  CHECK(contains(cores.out, "10001"));

  const Run euler = run({"graph", "euler", "abab", "--enumerate"});
  CHECK(euler.code == 0);

  const Run parsed = run({"graph", "parse", "abab", "--format", "json"});
  REQUIRE(parsed.code == 0);
  const std::string file = temp_file("g.json", parsed.out);
  CHECK(run({"graph", "interlace", "@" + file}).code == 0);
}

TEST_CASE("verify subcommand") {
  const Run ok = run({"verify", "nu-lemma", "--max-n", "2"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "PASS"));
  const Run j = run({"verify", "ppt-props", "--max-n", "4", "--trials", "20", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["ok"] == true);
  CHECK(run({"verify", "nope"}).code == 2);
}
