#include "lcgf2/equivalence.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_set>

#include "lcgf2/error.hpp"
#include "lcgf2/gf2core.hpp"

namespace lcgf2 {

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::LC: return "lc";
    case Relation::MI: return "mi";
    case Relation::PIV: return "piv";
  }
  return "?";
}

Relation parse_relation(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "lc") return Relation::LC;
  if (lower == "mi") return Relation::MI;
  if (lower == "piv") return Relation::PIV;
  throw Error(Errc::InvalidInput, "unknown relation '" + std::string(name) + "'");
}

bool admissible(const SymMatrix& s, Relation r) {
  return r == Relation::PIV || s.is_zero_diagonal();
}

std::string Move::to_string() const {
  auto join = [this](char sep) {
    std::string s;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (i) s += sep;
      s += vertices[i];
    }
    return s;
  };
  switch (kind) {
    case Kind::LocalComplement: return "lc " + join(' ');
    case Kind::LoopedComplement: return "nslc " + join(' ');
    case Kind::Pivot: return "pivot " + join(' ');
    case Kind::ModifiedInverse: return "mi {" + join(',') + "}";
  }
  return "?";
}

std::vector<Neighbour> neighbour_moves(const SymMatrix& s, Relation r) {
  if (!admissible(s, r))
    throw Error(Errc::ZeroDiagonalViolation,
                std::string("relation ") + relation_name(r) + " needs a zero-diagonal matrix");
  std::vector<Neighbour> out;
  std::unordered_set<SymMatrix, SymMatrixHash> seen;
  auto add = [&](Move mv, SymMatrix m) {
    if (seen.insert(m).second) out.push_back({std::move(mv), std::move(m)});
  };
  const Labels& labels = s.labels();
  switch (r) {
    case Relation::LC:
      for (std::size_t i = 0; i < s.size(); ++i)
        add({Move::Kind::LocalComplement, {labels[i]}}, simple_local_complement(s, i));
      break;
    case Relation::MI:
      for (auto& mv : modified_inverse_moves(s))
        add({Move::Kind::ModifiedInverse, mv.mask.names()}, std::move(mv.result));
      break;
    case Relation::PIV:
      for (std::size_t i = 0; i < s.size(); ++i)
        if (s.get(i, i))
          add({Move::Kind::LoopedComplement, {labels[i]}}, nonsimple_local_complement(s, i));
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
          if (!s.get(i, i) && !s.get(j, j) && s.get(i, j))
            add({Move::Kind::Pivot, {labels[i], labels[j]}}, pivot(s, i, j));
      break;
  }
  return out;
}

std::vector<SymMatrix> neighbors(const SymMatrix& s, Relation r) {
  std::vector<SymMatrix> out;
  for (auto& nb : neighbour_moves(s, r)) out.push_back(std::move(nb.matrix));
  return out;
}

SymMatrix apply_move(const SymMatrix& s, const Move& move) {
  switch (move.kind) {
    case Move::Kind::LocalComplement:
      return simple_local_complement(s, move.vertices.at(0));
    case Move::Kind::LoopedComplement:
      return nonsimple_local_complement(s, move.vertices.at(0));
    case Move::Kind::Pivot:
      return pivot(s, move.vertices.at(0), move.vertices.at(1));
    case Move::Kind::ModifiedInverse:
      if (!s.is_zero_diagonal())
        throw Error(Errc::ZeroDiagonalViolation, "modified inversion of a looped matrix");
      return zero_diagonal(inverse(toggle_diagonal(s, VertexSet(move.vertices))));
  }
  throw Error(Errc::InvalidInput, "unknown move");
}

std::optional<std::size_t> EquivClass::find(const SymMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Move> EquivClass::path_to(std::size_t index) const {
  std::vector<Move> path;
  while (index != 0) {
    const Edge& e = edges_[index - 1];
    path.push_back(e.move);
    index = e.from;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

EquivClass class_closure(const SymMatrix& s, Relation r, std::size_t cap) {
  if (!admissible(s, r))
    throw Error(Errc::ZeroDiagonalViolation,
                std::string("relation ") + relation_name(r) + " needs a zero-diagonal matrix");
  EquivClass cls;
  cls.relation_ = r;
  cls.members_.push_back(s);
  cls.index_.emplace(s, 0);
  for (std::size_t head = 0; head < cls.members_.size(); ++head) {
    // Copy: members_ may reallocate while we append.
    const SymMatrix current = cls.members_[head];
    for (auto& nb : neighbour_moves(current, r)) {
      if (cls.index_.contains(nb.matrix)) continue;
      if (cls.members_.size() >= cap)
        throw Error(Errc::SizeCapExceeded,
                    "equivalence class exceeds the cap of " + std::to_string(cap) + " members");
      const std::size_t id = cls.members_.size();
      cls.index_.emplace(nb.matrix, id);
      cls.edges_.push_back({head, id, std::move(nb.move)});
      cls.members_.push_back(std::move(nb.matrix));
      if (cls.members_[id].lex_less(cls.members_[cls.representative_])) cls.representative_ = id;
    }
  }
  return cls;
}

Equivalence equivalent(const SymMatrix& s, const SymMatrix& t, Relation r, std::size_t cap) {
  if (!(s.labels() == t.labels()))
    throw Error(Errc::LabelMismatch, "matrices have different label sequences");
  if (!admissible(t, r))
    throw Error(Errc::ZeroDiagonalViolation,
                std::string("relation ") + relation_name(r) + " needs a zero-diagonal matrix");
  const EquivClass cls = class_closure(s, r, cap);
  const auto idx = cls.find(t);
  if (!idx) return {false, {}};
  return {true, cls.path_to(*idx)};
}

}  // namespace lcgf2
