#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "lcgf2/circuits.hpp"
#include "lcgf2/equivalence.hpp"
#include "lcgf2/error.hpp"
#include "lcgf2/gf2core.hpp"
#include "lcgf2/io.hpp"
#include "lcgf2/verify.hpp"

namespace lcgf2::cli {

namespace {

using nlohmann::json;

/// Semantic failure carrying a message for stderr; maps to exit 1.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string format = "text";
  bool dot = false;
  std::string relation = "lc";
  std::size_t cap = 0;
  std::size_t max_n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  bool enumerate = false;
  std::string w;
  std::string file, file2, vi, vj, xset;
  std::string words, pwords, vname, wpos, euler_words;
  std::size_t match = 0, euler_match = 0;
  std::string suite;

  bool json_out() const { return format == "json"; }
};

void add_format(CLI::App* app, Flags& f) {
  app->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

// ---------------------------------------------------------------- matrix output

void print_matrix(std::ostream& out, const SymMatrix& m, const Flags& f) {
  if (f.dot) {
    out << io::to_dot(m);
  } else if (f.json_out()) {
    out << io::matrix_to_json(m).dump() << '\n';
  } else {
    out << io::format_matrix_text(m);
  }
}

void print_matrices(std::ostream& out, const std::vector<SymMatrix>& ms, const Flags& f,
                    json extra = json::object()) {
  if (f.json_out()) {
    json arr = json::array();
    for (const auto& m : ms) arr.push_back(io::matrix_to_json(m));
    extra["matrices"] = arr;
    out << extra.dump() << '\n';
    return;
  }
  for (std::size_t k = 0; k < ms.size(); ++k) {
    if (k) out << '\n';
    out << io::format_matrix_text(ms[k]);
  }
}

SymMatrix load_matrix(const std::string& path) { return io::parse_matrix(io::read_source(path)); }

std::string join_moves(const std::vector<Move>& moves) {
  std::string s;
  for (const auto& m : moves) s += m.to_string() + '\n';
  return s;
}

json moves_json(const std::vector<Move>& moves) {
  json arr = json::array();
  for (const auto& m : moves) arr.push_back(m.to_string());
  return arr;
}

// ---------------------------------------------------------------- graph input

/// A graph argument: words ("abcdbcaeed"), inline JSON ("{...}") or a JSON
/// file ("@path"). The Euler system is the word's own, or the JSON's
/// transitions.
WordGraph load_graph(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '@')) {
    const std::string text = arg.front() == '@' ? io::read_source(arg.substr(1)) : arg;
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw Error(Errc::InvalidInput, std::string("malformed graph JSON: ") + e.what());
    }
    CircuitPartition p = io::partition_from_json(j);
    GraphPtr g = p.graph_ptr();
    return {g, EulerSystem(std::move(p))};
  }
  return from_words(arg);
}

void print_system(std::ostream& out, const CircuitPartition& p, const Flags& f) {
  if (f.json_out()) {
    out << io::partition_to_json(p).dump() << '\n';
  } else {
    out << format_words(p.words()) << '\n';
  }
}

/// Reference Euler system: the graph's own, or one read off --euler words.
// Words do not determine transitions at loops or parallel edges, so several
// partitions may read the same; `index` picks one in enumeration order.
CircuitPartition matching_partition(const WordGraph& wg, const std::string& text, std::size_t index,
                                    const char* option, std::ostream& err) {
  auto matches = partitions_matching_words(wg.graph, parse_words(text));
  if (matches.empty())
    throw Error(Errc::NoMatchingPartition, "no circuit partition of the graph reads as " + text);
  if (index >= matches.size())
    throw Error(Errc::InvalidInput, std::string(option) + " " + std::to_string(index) + " out of range: " +
                                        std::to_string(matches.size()) + " partitions read as " + text);
  if (matches.size() > 1)
    err << "note: " << matches.size() << " partitions read as " << text << "; using " << option << ' '
        << index << '\n';
  return std::move(matches[index]);
}

EulerSystem reference_system(const WordGraph& wg, const Flags& f, std::ostream& err) {
  if (f.euler_words.empty()) return wg.system;
  return EulerSystem(matching_partition(wg, f.euler_words, f.euler_match, "--euler-match", err));
}

// ---------------------------------------------------------------- commands

void setup_matrix(CLI::App& app, Flags& f, std::function<void()>& action, std::ostream& out) {
  auto* matrix = app.add_subcommand("matrix", "Symmetric GF(2) matrix operations");
  matrix->require_subcommand(1);
  std::string& file = f.file;
  std::string& file2 = f.file2;
  std::string& vi = f.vi;
  std::string& vj = f.vj;
  std::string& xset = f.xset;

  auto leaf = [&](const char* name, const char* help) {
    auto* sub = matrix->add_subcommand(name, help);
    add_format(sub, f);
    return sub;
  };
  auto add_file = [&file](CLI::App* sub) {
    sub->add_option("file", file, "Matrix file, or - for stdin")->required();
  };

  auto* rank = leaf("rank", "Rank and nullity");
  add_file(rank);
  rank->callback([&] {
    action = [&] {
      const SymMatrix m = load_matrix(file);
      const auto rn = rank_nullity(m);
      if (f.json_out()) {
        out << json{{"rank", rn.rank}, {"nullity", rn.nullity}}.dump() << '\n';
      } else {
        out << "rank " << rn.rank << "\nnullity " << rn.nullity << '\n';
      }
    };
  });

  auto* inv = leaf("inverse", "Inverse of a nonsingular matrix");
  add_file(inv);
  inv->add_flag("--dot", f.dot, "Emit DOT");
  inv->callback([&] { action = [&] { print_matrix(out, inverse(load_matrix(file)), f); }; });

  for (const char* name : {"lc", "nslc"}) {
    auto* sub = leaf(name, name[0] == 'l' ? "Simple local complement at a vertex"
                                          : "Non-simple local complement at a vertex");
    sub->add_option("vertex", vi, "Vertex label")->required();
    add_file(sub);
    sub->add_flag("--dot", f.dot, "Emit DOT");
    const bool simple = name[0] == 'l';
    sub->callback([&, simple] {
      action = [&, simple] {
        const SymMatrix m = load_matrix(file);
        print_matrix(out, simple ? simple_local_complement(m, vi) : nonsimple_local_complement(m, vi),
                     f);
      };
    });
  }

  auto* piv = leaf("pivot", "Edge pivot ((S^i)^j)^i");
  piv->add_option("i", vi, "First vertex")->required();
  piv->add_option("j", vj, "Second vertex")->required();
  add_file(piv);
  piv->add_flag("--dot", f.dot, "Emit DOT");
  piv->callback([&] { action = [&] { print_matrix(out, pivot(load_matrix(file), vi, vj), f); }; });

  auto* ppt = leaf("ppt", "Principal pivot transform M*X");
  ppt->add_option("X", xset, "Index set, e.g. a,b (empty string for none)")->required();
  add_file(ppt);
  ppt->add_flag("--dot", f.dot, "Emit DOT");
  ppt->callback([&] {
    action = [&] {
      print_matrix(out, principal_pivot_transform(load_matrix(file), VertexSet::parse(xset)), f);
    };
  });

  auto* mi = leaf("mi", "All modified inverses");
  add_file(mi);
  auto* mi_cap = mi->add_option("--cap", f.cap, "Largest n to enumerate (default 20)");
  mi->callback([&, mi_cap] {
    action = [&, mi_cap] {
      const SymMatrix m = load_matrix(file);
      const auto moves = mi_cap->count() ? modified_inverse_moves(m, f.cap) : modified_inverse_moves(m);
      std::vector<SymMatrix> ms;
      json masks = json::array();
      for (const auto& mv : moves) {
        ms.push_back(mv.result);
        masks.push_back(mv.mask.to_string());
      }
      print_matrices(out, ms, f, json{{"masks", masks}});
    };
  });

  auto* cls = leaf("class", "Equivalence class by breadth-first closure");
  add_file(cls);
  cls->add_option("--relation", f.relation, "lc, mi or piv");
  auto* cls_cap = cls->add_option("--cap", f.cap, "Member cap (default 1000000)");
  cls->callback([&, cls_cap] {
    action = [&, cls_cap] {
      const SymMatrix m = load_matrix(file);
      const Relation r = parse_relation(f.relation);
      const EquivClass c = cls_cap->count() ? class_closure(m, r, f.cap) : class_closure(m, r);
      if (f.json_out()) {
        json members = json::array(), edges = json::array();
        for (const auto& x : c.members()) members.push_back(io::matrix_to_json(x));
        for (const auto& e : c.edges())
          edges.push_back({{"from", e.from}, {"to", e.to}, {"move", e.move.to_string()}});
        out << json{{"relation", relation_name(r)},
                    {"size", c.size()},
                    {"representative", io::matrix_to_json(c.representative())},
                    {"members", members},
                    {"edges", edges}}
                   .dump()
            << '\n';
        return;
      }
      out << "relation " << relation_name(r) << "\nsize " << c.size() << "\nrepresentative\n"
          << io::format_matrix_text(c.representative()) << "members\n";
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) out << '\n';
        out << io::format_matrix_text(c.members()[k]);
      }
    };
  });

  auto* eq = leaf("equiv", "Decide equivalence and print a shortest certificate");
  eq->add_option("file", file, "File with one matrix, or with both")->required();
  eq->add_option("file2", file2, "Second matrix file");
  eq->add_option("--relation", f.relation, "lc, mi or piv");
  auto* eq_cap = eq->add_option("--cap", f.cap, "Member cap (default 1000000)");
  eq->callback([&, eq_cap] {
    action = [&, eq_cap] {
      std::vector<SymMatrix> ms = io::parse_matrices(io::read_source(file));
      if (!file2.empty()) {
        auto more = io::parse_matrices(io::read_source(file2));
        ms.insert(ms.end(), more.begin(), more.end());
      }
      if (ms.size() != 2) throw Error(Errc::InvalidInput, "equiv needs exactly two matrices");
      const Relation r = parse_relation(f.relation);
      const Equivalence e = eq_cap->count() ? equivalent(ms[0], ms[1], r, f.cap)
                                            : equivalent(ms[0], ms[1], r);
      if (f.json_out()) {
        out << json{{"relation", relation_name(r)},
                    {"equivalent", e.equivalent},
                    {"certificate", moves_json(e.certificate)}}
                   .dump()
            << '\n';
      } else {
        out << (e.equivalent ? "equivalent" : "not equivalent") << '\n' << join_moves(e.certificate);
      }
      if (!e.equivalent) throw Failure("");
    };
  });
}

void setup_graph(CLI::App& app, Flags& f, std::function<void()>& action, std::ostream& out,
                 std::ostream& err) {
  auto* graph = app.add_subcommand("graph", "4-regular multigraphs and Euler systems");
  graph->require_subcommand(1);
  std::string& words = f.words;
  std::string& pwords = f.pwords;
  std::string& vname = f.vname;
  std::string& wpos = f.wpos;
  std::string& euler_words = f.euler_words;

  auto leaf = [&](const char* name, const char* help) {
    auto* sub = graph->add_subcommand(name, help);
    add_format(sub, f);
    sub->add_option("graph", words, "Double occurrence words, {json} or @file.json")->required();
    return sub;
  };
  auto add_euler = [&](CLI::App* sub) {
    sub->add_option("--euler", euler_words, "Reference Euler system as words on the same graph");
    sub->add_option("--euler-match", f.euler_match, "Which partition reading as --euler to use (default 0)");
  };
  auto add_match = [&](CLI::App* sub) {
    sub->add_option("--match", f.match, "Which partition reading as the words to use (default 0)");
  };

  auto* parse = leaf("parse", "Parse and summarise a graph");
  parse->callback([&] {
    action = [&] {
      const WordGraph wg = load_graph(words);
      if (f.json_out()) {
        out << io::partition_to_json(wg.system.partition()).dump() << '\n';
        return;
      }
      const auto& g = *wg.graph;
      out << "vertices";
      for (const auto& v : g.vertices()) out << ' ' << v;
      out << "\nedges " << g.edge_count() << "\ncomponents " << g.component_count()
          << "\neuler " << format_words(wg.system.words()) << '\n';
    };
  });

  auto* inter = leaf("interlace", "Interlacement matrix I(C)");
  inter->add_flag("--dot", f.dot, "Emit DOT");
  add_euler(inter);
  inter->callback([&] {
    action = [&] {
      const WordGraph wg = load_graph(words);
      print_matrix(out, interlacement(reference_system(wg, f, err)), f);
    };
  });

  auto* euler = leaf("euler", "The Euler system, or all of them with --enumerate");
  euler->add_flag("--enumerate", f.enumerate, "List every Euler system");
  auto* euler_cap = euler->add_option("--cap", f.cap, "Largest |V| to enumerate (default 12)");
  euler->callback([&, euler_cap] {
    action = [&, euler_cap] {
      const WordGraph wg = load_graph(words);
      if (!f.enumerate) {
        print_system(out, wg.system.partition(), f);
        return;
      }
      const auto systems = euler_cap->count() ? enumerate_euler_systems(wg.graph, f.cap)
                                              : enumerate_euler_systems(wg.graph);
      if (f.json_out()) {
        json arr = json::array();
        for (const auto& s : systems) arr.push_back(io::partition_to_json(s.partition()));
        out << json{{"count", systems.size()}, {"systems", arr}}.dump() << '\n';
        return;
      }
      for (const auto& s : systems) out << format_words(s.words()) << '\n';
      out << "count " << systems.size() << '\n';
    };
  });

  auto* kappa = leaf("kappa", "kappa-transform C*v");
  kappa->add_option("vertex", vname, "Vertex label")->required();
  kappa->callback([&] {
    action = [&] {
      const WordGraph wg = load_graph(words);
      print_system(out, kappa_transform(wg.system, vname).partition(), f);
    };
  });

  auto* iota = leaf("iota", "iota-transform C#W with the per-vertex case analysis");
  iota->add_option("set", wpos, "Vertex set W, e.g. c,e");
  auto* w_opt = iota->add_option("--W", f.w, "Vertex set, e.g. c,e (\"\" for the empty set)");
  iota->callback([&, w_opt] {
    action = [&, w_opt] {
      const WordGraph wg = load_graph(words);
      const VertexSet w = VertexSet::parse(w_opt->count() ? f.w : wpos);
      IotaCaseReport report = [&] {
        try {
          return iota_case_analysis(wg.system, w);
        } catch (const SingularityError& e) {
          if (e.code() != Errc::NotAnEulerSystem) throw;
          throw Failure(e.what());
        }
      }();
      const Labels& labels = wg.graph->vertices();
      if (f.json_out()) {
        json cases = json::object();
        for (std::size_t v = 0; v < labels.size(); ++v)
          cases[labels[v]] = iota_case_name(report.cases[v]);
        json j = io::partition_to_json(report.transformed.partition());
        j["X"] = report.x.names();
        j["cases"] = cases;
        out << j.dump() << '\n';
        return;
      }
      out << format_words(report.transformed.words()) << '\n' << "X " << report.x.to_string() << '\n';
      for (std::size_t v = 0; v < labels.size(); ++v)
        out << labels[v] << ' ' << iota_case_name(report.cases[v]) << '\n';
    };
  });

  auto* part = leaf("partition", "Trace the circuit partition read off words");
  part->add_option("partition", pwords, "Circuit words, e.g. e,ade,abc,bcd")->required();
  add_euler(part);
  add_match(part);
  part->callback([&] {
    action = [&] {
      const WordGraph wg = load_graph(words);
      const EulerSystem c = reference_system(wg, f, err);
      const CircuitPartition p = matching_partition(wg, pwords, f.match, "--match", err);
      const auto labels = transition_labels(c, p);
      const auto cn = circuit_nullity_check(p, c);
      const Labels& names = wg.graph->vertices();
      if (f.json_out()) {
        json j = io::partition_to_json(p);
        json lj = json::object();
        for (std::size_t v = 0; v < names.size(); ++v) lj[names[v]] = label_name(labels[v]);
        j["labels"] = lj;
        j["nullity"] = cn.nullity;
        out << j.dump() << '\n';
        return;
      }
      out << "circuits " << format_words(p.words()) << "\nsize " << cn.circuits << "\ncomponents "
          << cn.components << "\nnullity " << cn.nullity << "\nlabels";
      for (std::size_t v = 0; v < names.size(); ++v) out << ' ' << names[v] << '=' << label_name(labels[v]);
      out << '\n';
    };
  });

  auto* rel = leaf("relmatrix", "Relative interlacement matrix I_P(C)");
  rel->add_option("partition", pwords, "Circuit words of P")->required();
  rel->add_flag("--dot", f.dot, "Emit DOT");
  add_euler(rel);
  add_match(rel);
  rel->callback([&] {
    action = [&] {
      const WordGraph wg = load_graph(words);
      const CircuitPartition p = matching_partition(wg, pwords, f.match, "--match", err);
      print_matrix(out, relative_interlacement(p, reference_system(wg, f, err)), f);
    };
  });

  auto* cores = leaf("corevectors", "Relative core vectors of the circuits of P");
  cores->add_option("partition", pwords, "Circuit words of P")->required();
  add_euler(cores);
  add_match(cores);
  cores->callback([&] {
    action = [&] {
      const WordGraph wg = load_graph(words);
      const CircuitPartition p = matching_partition(wg, pwords, f.match, "--match", err);
      const auto vs = relative_core_vectors(p, reference_system(wg, f, err));
      if (f.json_out()) {
        json arr = json::array();
        for (std::size_t k = 0; k < vs.size(); ++k) {
          json v = io::vector_to_json(vs[k]);
          v["circuit"] = format_word(canonical_rotation(p.word(k)));
          arr.push_back(v);
        }
        out << json{{"vectors", arr}}.dump() << '\n';
        return;
      }
      for (std::size_t k = 0; k < vs.size(); ++k)
        out << format_word(canonical_rotation(p.word(k))) << ' ' << vs[k].to_string() << '\n';
    };
  });
}

void setup_verify(CLI::App& app, Flags& f, std::function<void()>& action, std::ostream& out) {
  auto* verify = app.add_subcommand("verify", "Run a theorem-verification suite");
  std::string& suite = f.suite;
  std::vector<std::string> choices = verify::suite_names();
  choices.push_back("all");
  verify->add_option("suite", suite, "Suite name, or all")->required()->check(CLI::IsMember(choices));
  add_format(verify, f);
  auto* max_n = verify->add_option("--max-n", f.max_n, "Largest matrix or graph size");
  auto* trials = verify->add_option("--trials", f.trials, "Randomized instances");
  verify->add_option("--seed", f.seed, "Random seed");
  verify->callback([&, max_n, trials] {
    action = [&, max_n, trials] {
      verify::Options opt;
      if (max_n->count()) opt.max_n = f.max_n;
      if (trials->count()) opt.trials = f.trials;
      opt.seed = f.seed;
      std::vector<std::string> names = suite == "all" ? verify::suite_names()
                                                        : std::vector<std::string>{suite};
      bool ok = true;
      json results = json::array();
      for (const auto& name : names) {
        const auto r = verify::run_suite(name, opt);
        ok = ok && r.ok();
        if (f.json_out()) {
          results.push_back(verify::to_json(r));
        } else {
          out << verify::format_text(r);
        }
      }
      if (f.json_out()) out << (names.size() == 1 ? results[0] : results).dump() << '\n';
      if (!ok) throw Failure("verification failed");
    };
  });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local complementation, modified inverses and Euler systems over GF(2)", "lcgf2"};
  app.require_subcommand(1);
  Flags flags;
  std::function<void()> action;
  setup_matrix(app, flags, action, out);
  setup_graph(app, flags, action, out, err);
  setup_verify(app, flags, action, out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (!action) return kInputError;
  try {
    action();
    return kOk;
  } catch (const Failure& e) {
    if (*e.what()) err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const Error& e) {
    err << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace lcgf2::cli
