#include "lcgf2/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "lcgf2/error.hpp"

namespace lcgf2::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::vector<std::string_view> nonblank_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = trim(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
    if (!line.empty()) out.push_back(line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

SymMatrix parse_matrix_text(std::string_view text) {
  auto lines = nonblank_lines(text);
  std::size_t at = 0;
  std::optional<Labels> labels;
  if (at < lines.size() && lines[at].substr(0, 7) == "labels:") {
    labels = Labels(split_ws(lines[at].substr(7)));
    ++at;
  }
  if (at >= lines.size()) throw Error(Errc::InvalidInput, "missing matrix size line");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    const std::string size_line(lines[at]);
    const long long parsed = std::stoll(size_line, &used);
    if (used != size_line.size() || parsed < 0) throw std::invalid_argument("size");
    n = static_cast<std::size_t>(parsed);
  } catch (const std::exception&) {
    throw Error(Errc::InvalidInput, "matrix size line is not a nonnegative integer");
  }
  ++at;
  if (lines.size() - at != n)
    throw Error(Errc::InvalidInput, "expected " + std::to_string(n) + " matrix rows, found " +
                                        std::to_string(lines.size() - at));
  std::vector<std::string> rows;
  for (; at < lines.size(); ++at) rows.emplace_back(lines[at]);
  if (!labels) labels = Labels::numbered(n);
  if (labels->size() != n)
    throw Error(Errc::InvalidInput, "labels header names " + std::to_string(labels->size()) +
                                        " vertices for a " + std::to_string(n) + "x" +
                                        std::to_string(n) + " matrix");
  return SymMatrix::from_rows(*labels, rows);
}

std::string format_matrix_text(const SymMatrix& m) {
  std::string s;
  if (!m.labels().is_numbered()) {
    s += "labels:";
    for (const auto& name : m.labels()) s += ' ' + name;
    s += '\n';
  }
  s += std::to_string(m.size()) + '\n';
  for (const auto& row : m.rows_as_strings()) s += row + '\n';
  return s;
}

json matrix_to_json(const SymMatrix& m) {
  return {{"labels", m.labels().names()}, {"rows", m.rows_as_strings()}};
}

SymMatrix matrix_from_json(const json& j) {
  try {
    const auto rows = j.at("rows").get<std::vector<std::string>>();
    Labels labels = j.contains("labels") ? Labels(j.at("labels").get<std::vector<std::string>>())
                                         : Labels::numbered(rows.size());
    return SymMatrix::from_rows(labels, rows);
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, std::string("bad matrix JSON: ") + e.what());
  }
}

json vector_to_json(const Gf2Vector& v) {
  return {{"labels", v.labels().names()}, {"bits", v.to_string()}};
}

Gf2Vector vector_from_json(const json& j) {
  try {
    return Gf2Vector::parse(Labels(j.at("labels").get<std::vector<std::string>>()),
                            j.at("bits").get<std::string>());
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, std::string("bad vector JSON: ") + e.what());
  }
}

SymMatrix parse_matrix(std::string_view text) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') return matrix_from_json(parse_json(body));
  return parse_matrix_text(body);
}

std::vector<SymMatrix> parse_matrices(std::string_view text) {
  const auto body = trim(text);
  std::vector<SymMatrix> out;
  if (!body.empty() && body.front() == '{') {
    const json j = parse_json(body);
    if (!j.contains("matrices")) return {matrix_from_json(j)};
    if (!j.at("matrices").is_array())
      throw Error(Errc::InvalidInput, "\"matrices\" must be an array");
    for (const auto& m : j.at("matrices")) out.push_back(matrix_from_json(m));
    return out;
  }
  // Blocks separated by blank lines.
  std::string block;
  std::istringstream in{std::string(body)};
  for (std::string line; std::getline(in, line);) {
    if (trim(line).empty()) {
      if (!trim(block).empty()) out.push_back(parse_matrix_text(block));
      block.clear();
    } else {
      block += line + '\n';
    }
  }
  if (!trim(block).empty()) out.push_back(parse_matrix_text(block));
  return out;
}

json partition_to_json(const CircuitPartition& p) {
  const auto& g = p.graph();
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  json transitions = json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Slot base = static_cast<Slot>(4 * v);
    const Slot partner = p.transition(v).partner_slot(base);
    std::vector<Slot> rest;
    for (Slot k = 1; k < 4; ++k)
      if (base + k != partner) rest.push_back(base + k);
    transitions.push_back({{base, partner}, {rest[0], rest[1]}});
  }
  json words = json::array();
  for (const auto& w : p.words()) words.push_back(format_word(w));
  return {{"vertices", g.vertices().names()},
          {"edges", edges},
          {"transitions", transitions},
          {"circuits", words},
          {"components", g.component_count()}};
}

CircuitPartition partition_from_json(const json& j) {
  try {
    Labels labels(j.at("vertices").get<std::vector<std::string>>());
    const std::size_t slots = 4 * labels.size();
    std::vector<Slot> mate(slots, 0);
    std::vector<bool> seen(slots, false);
    for (const auto& e : j.at("edges")) {
      const auto pair = e.get<std::array<Slot, 2>>();
      for (Slot s : pair) {
        if (s >= slots || seen[s])
          throw Error(Errc::InvalidGraph, "slot " + std::to_string(s) + " used by two edges");
        seen[s] = true;
      }
      mate[pair[0]] = pair[1];
      mate[pair[1]] = pair[0];
    }
    for (Slot s = 0; s < slots; ++s)
      if (!seen[s]) throw Error(Errc::InvalidGraph, "slot " + std::to_string(s) + " has no edge");
    auto graph = std::make_shared<const HalfEdgeGraph>(labels, std::move(mate));

    const auto& tj = j.at("transitions");
    if (!tj.is_array() || tj.size() != labels.size())
      throw Error(Errc::InvalidInput, "one transition per vertex is required");
    TransitionSystem t(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) {
      const auto pairs = tj[v].get<std::array<std::array<Slot, 2>, 2>>();
      unsigned used = 0;
      for (const auto& pr : pairs)
        for (Slot s : pr) {
          if (vertex_of(s) != v || (used >> local_slot(s) & 1u))
            throw Error(Errc::InvalidInput, "transition at vertex " + labels[v] +
                                                " is not a pairing of its four slots");
          used |= 1u << local_slot(s);
        }
      t[v] = Transition::pairing(local_slot(pairs[0][0]), local_slot(pairs[0][1]));
    }
    return CircuitPartition(graph, std::move(t));
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, std::string("bad graph JSON: ") + e.what());
  }
}

std::string to_dot(const SymMatrix& m, std::string_view name) {
  auto quote = [](const std::string& s) { return '"' + s + '"'; };
  std::string s = "graph " + std::string(name) + " {\n";
  for (const auto& v : m.labels()) s += "  " + quote(v) + ";\n";
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j)
      if (m.get(i, j)) s += "  " + quote(m.labels()[i]) + " -- " + quote(m.labels()[j]) + ";\n";
  s += "}\n";
  return s;
}

std::string read_source(const std::string& path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidInput, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace lcgf2::io
