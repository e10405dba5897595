#include "lcgf2/gf2core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "lcgf2/error.hpp"

namespace lcgf2 {

namespace {

std::vector<std::size_t> complement_of(std::span<const std::size_t> x, std::size_t n) {
  std::vector<bool> in(n, false);
  for (std::size_t i : x) in[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

void check_index(const SymMatrix& s, std::size_t i) {
  if (i >= s.size())
    throw Error(Errc::UnknownLabel, "index " + std::to_string(i) + " out of range");
}

void require_zero_diagonal(const SymMatrix& s) {
  if (!s.is_zero_diagonal())
    throw Error(Errc::ZeroDiagonalViolation, "matrix must be zero-diagonal");
}

std::string border_label(const Labels& labels) {
  std::string name = "#";
  while (labels.contains(name)) name += '#';
  return name;
}

// Neighbourhood of i as a word mask, i itself excluded.
std::vector<Word> neighbourhood(const BitMatrix& m, std::size_t i) {
  auto row = m.row_words(i);
  std::vector<Word> nb(row.begin(), row.end());
  nb[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  return nb;
}

template <class F>
void for_each_bit(std::span<const Word> words, F&& f) {
  for (std::size_t k = 0; k < words.size(); ++k) {
    Word w = words[k];
    while (w) {
      f(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
}

SymMatrix local_complement_impl(const SymMatrix& s, std::size_t i, bool toggle_diag) {
  check_index(s, i);
  BitMatrix bits = s.bits();
  const std::vector<Word> nb = neighbourhood(bits, i);
  for_each_bit(nb, [&](std::size_t j) {
    bits.xor_into_row(j, nb);
    if (!toggle_diag) bits.flip(j, j);
  });
  return SymMatrix(s.labels(), std::move(bits));
}

}  // namespace

RankNullity rank_nullity(const SymMatrix& m) {
  const std::size_t r = m.bits().rank();
  return {r, m.size() - r};
}

bool is_nonsingular(const SymMatrix& m) { return m.bits().rank() == m.size(); }

std::vector<Gf2Vector> nullspace_basis(const SymMatrix& m) {
  std::vector<Gf2Vector> out;
  for (auto& v : m.bits().left_nullspace()) out.emplace_back(m.labels(), std::move(v));
  return out;
}

SymMatrix inverse(const SymMatrix& m) {
  auto inv = m.bits().inverse();
  if (!inv) {
    const auto rn = rank_nullity(m);
    throw SingularityError(Errc::SingularMatrix,
                           "matrix is singular (nullity " + std::to_string(rn.nullity) + ")",
                           rn.nullity);
  }
  return SymMatrix(m.labels(), std::move(*inv));
}

SymMatrix principal_pivot_transform(const SymMatrix& m, const VertexSet& x) {
  const auto idx = x.resolve(m.labels());
  return principal_pivot_transform(m, idx);
}

SymMatrix principal_pivot_transform(const SymMatrix& m, std::span<const std::size_t> x_in) {
  std::vector<std::size_t> x(x_in.begin(), x_in.end());
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  for (std::size_t i : x) check_index(m, i);
  const std::vector<std::size_t> rest = complement_of(x, m.size());

  const BitMatrix& a = m.bits();
  const BitMatrix p = a.submatrix(x, x);
  auto p_inv = p.inverse();
  if (!p_inv) {
    const std::size_t nullity = p.rows() - p.rank();
    throw SingularityError(Errc::SingularPrincipalSubmatrix,
                           "principal submatrix is singular (nullity " +
                               std::to_string(nullity) + ")",
                           nullity);
  }
  const BitMatrix q = a.submatrix(x, rest);
  const BitMatrix r = a.submatrix(rest, x);
  const BitMatrix s = a.submatrix(rest, rest);
  const BitMatrix top_right = *p_inv * q;    // -P^{-1}Q, signs vanish
  const BitMatrix bottom_left = r * *p_inv;  // R P^{-1}
  const BitMatrix bottom_right = s + bottom_left * q;

  BitMatrix out(m.size(), m.size());
  auto place = [&out](const BitMatrix& block, std::span<const std::size_t> rows,
                      std::span<const std::size_t> cols) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (block.get(i, j)) out.flip(rows[i], cols[j]);
  };
  place(*p_inv, x, x);
  place(top_right, x, rest);
  place(bottom_left, rest, x);
  place(bottom_right, rest, rest);
  return SymMatrix(m.labels(), std::move(out));
}

SymMatrix simple_local_complement(const SymMatrix& s, std::size_t i) {
  return local_complement_impl(s, i, false);
}

SymMatrix simple_local_complement(const SymMatrix& s, std::string_view i) {
  return simple_local_complement(s, s.index_of(i));
}

SymMatrix nonsimple_local_complement(const SymMatrix& s, std::size_t i) {
  return local_complement_impl(s, i, true);
}

SymMatrix nonsimple_local_complement(const SymMatrix& s, std::string_view i) {
  return nonsimple_local_complement(s, s.index_of(i));
}

SymMatrix pivot(const SymMatrix& s, std::size_t i, std::size_t j) {
  check_index(s, i);
  check_index(s, j);
  if (i == j) throw Error(Errc::InvalidInput, "pivot needs two distinct vertices");
  if (!s.get(i, j))
    throw Error(Errc::NotAnEdge, "pivot on " + s.labels()[i] + s.labels()[j] +
                                     ": the off-diagonal entry is 0");
  SymMatrix a = simple_local_complement(
      simple_local_complement(simple_local_complement(s, i), j), i);
  const SymMatrix b = simple_local_complement(
      simple_local_complement(simple_local_complement(s, j), i), j);
  ensure(a == b, "pivot: ((S^i)^j)^i != ((S^j)^i)^j");
  return a;
}

SymMatrix pivot(const SymMatrix& s, std::string_view i, std::string_view j) {
  return pivot(s, s.index_of(i), s.index_of(j));
}

SymMatrix toggle_diagonal(const SymMatrix& m, const DiagonalMask& w) {
  SymMatrix out = m;
  for (std::size_t i : w.resolve(m.labels())) out.toggle(i, i);
  return out;
}

SymMatrix toggle_diagonal(const SymMatrix& m, const BitVector& mask) {
  if (mask.size() != m.size()) throw Error(Errc::LabelMismatch, "mask length mismatch");
  SymMatrix out = m;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (mask.get(i)) out.toggle(i, i);
  return out;
}

SymMatrix zero_diagonal(const SymMatrix& m) { return toggle_diagonal(m, m.diagonal()); }

std::vector<ModifiedInverseMove> modified_inverse_moves(const SymMatrix& s, std::size_t cap) {
  require_zero_diagonal(s);
  const std::size_t n = s.size();
  if (n > cap || n >= 63)
    throw Error(Errc::SizeCapExceeded, "modified inverses enumerate 2^n masks; n = " +
                                           std::to_string(n) + " exceeds the cap " +
                                           std::to_string(cap));
  std::vector<ModifiedInverseMove> out;
  std::unordered_set<SymMatrix, SymMatrixHash> seen;
  BitMatrix work = s.bits();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t k = 0; k < n; ++k) work.set(k, k, (mask >> k) & 1u);
    auto inv = work.inverse();
    if (!inv) continue;
    for (std::size_t k = 0; k < n; ++k) inv->set(k, k, false);
    SymMatrix result(s.labels(), std::move(*inv));
    if (!seen.insert(result).second) continue;
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      if ((mask >> k) & 1u) idx.push_back(k);
    out.push_back({VertexSet::from_indices(s.labels(), idx), std::move(result)});
  }
  return out;
}

std::vector<SymMatrix> modified_inverses(const SymMatrix& s, std::size_t cap) {
  std::vector<SymMatrix> out;
  for (auto& mv : modified_inverse_moves(s, cap)) out.push_back(std::move(mv.result));
  return out;
}

Completion nonsingular_completion(const SymMatrix& s, std::size_t i) {
  check_index(s, i);
  require_zero_diagonal(s);
  const std::size_t n = s.size();
  std::size_t neighbour = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (j != i && s.get(i, j)) {
      neighbour = j;
      break;
    }
  }
  if (neighbour == n)
    throw Error(Errc::ZeroRow, "row " + s.labels()[i] + " has no nonzero entry");

  std::vector<std::size_t> order{i, neighbour};
  for (std::size_t j = 0; j < n; ++j)
    if (j != i && j != neighbour) order.push_back(j);

  BitMatrix permuted = s.bits().submatrix(order, order);
  std::vector<std::size_t> toggled;  // positions in `order`
  for (std::size_t k = 3; k <= n; ++k) {
    std::vector<std::size_t> lead(k);
    std::iota(lead.begin(), lead.end(), std::size_t{0});
    BitMatrix leading = permuted.submatrix(lead, lead);
    if (leading.rank() == k) continue;
    permuted.flip(k - 1, k - 1);
    leading.flip(k - 1, k - 1);
    ensure(leading.rank() == k, "nonsingular_completion: bordered step stayed singular");
    toggled.push_back(k - 1);
  }

  std::vector<std::size_t> original;
  for (std::size_t pos : toggled) original.push_back(order[pos]);
  Completion c{toggle_diagonal(s, VertexSet::from_indices(s.labels(), original)),
               VertexSet::from_indices(s.labels(), original)};
  ensure(is_nonsingular(c.matrix), "nonsingular_completion: result is singular");
  return c;
}

Completion nonsingular_completion(const SymMatrix& s, std::string_view i) {
  return nonsingular_completion(s, s.index_of(i));
}

BorderedNullityReport nu_triple(const SymMatrix& m, const Gf2Vector& rho) {
  if (!(rho.labels() == m.labels()))
    throw Error(Errc::LabelMismatch, "border vector labels differ from the matrix labels");
  const std::size_t n = m.size();
  std::vector<std::string> names = m.labels().names();
  names.push_back(border_label(m.labels()));
  const Labels labels(std::move(names));

  auto bordered = [&](bool with_rho, bool corner) {
    BitMatrix b(n + 1, n + 1);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (m.get(r, c)) b.flip(r, c);
    if (with_rho) {
      for (std::size_t k = 0; k < n; ++k) {
        if (rho.get(k)) {
          b.flip(n, k);
          b.flip(k, n);
        }
      }
    }
    if (corner) b.flip(n, n);
    return SymMatrix(labels, std::move(b));
  };

  BorderedNullityReport rep{
      {bordered(true, true), bordered(true, false), bordered(false, true)}, {}, {0, 0}, 0, 0};
  std::array<std::vector<BitVector>, 3> raw;
  for (std::size_t k = 0; k < 3; ++k) {
    rep.nullspaces[k] = nullspace_basis(rep.matrices[k]);
    for (const auto& v : rep.nullspaces[k]) raw[k].push_back(v.bits());
  }

  bool found = false;
  constexpr std::array<std::array<std::size_t, 3>, 3> kPairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (const auto& [a, b, odd] : kPairs) {
    if (!same_span(raw[a], raw[b], n + 1)) continue;
    ensure(!found, "nu_triple: more than one pair of equal nullspaces");
    found = true;
    rep.shared = {a, b};
    rep.odd = odd;
    rep.nu = raw[a].size();
  }
  ensure(found, "nu_triple: no two bordered matrices share a nullspace");
  ensure(raw[rep.odd].size() == rep.nu + 1, "nu_triple: odd nullspace is not one larger");
  ensure(span_contains(raw[rep.odd], raw[rep.shared[0]], n + 1),
         "nu_triple: odd nullspace does not contain the shared one");
  return rep;
}

std::string describe(const WalkStep& step, const Labels& labels) {
  if (step.kind == WalkStep::Kind::Single) return "single " + labels[step.first];
  return "pair " + labels[step.first] + " " + labels[step.second];
}

std::vector<WalkStep> ppt_inverse_walk(const SymMatrix& m) {
  const SymMatrix target = inverse(m);
  const std::size_t n = m.size();
  std::vector<bool> used(n, false);
  std::vector<WalkStep> steps;
  SymMatrix current = m;
  for (std::size_t remaining = n; remaining > 0;) {
    std::size_t single = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i] && current.get(i, i)) {
        single = i;
        break;
      }
    }
    if (single != n) {
      const std::array<std::size_t, 1> x{single};
      SymMatrix next = principal_pivot_transform(current, x);
      ensure(next == nonsimple_local_complement(current, single),
             "ppt_inverse_walk: single step differs from the non-simple local complement");
      steps.push_back({WalkStep::Kind::Single, single, 0});
      used[single] = true;
      --remaining;
      current = std::move(next);
      continue;
    }
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i) {
      if (used[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!used[j] && current.get(i, j)) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    ensure(pi != n, "ppt_inverse_walk: unused principal submatrix has a zero row");
    const std::array<std::size_t, 2> x{pi, pj};
    SymMatrix next = principal_pivot_transform(current, x);
    ensure(next == pivot(current, pi, pj), "ppt_inverse_walk: pair step differs from the pivot");
    steps.push_back({WalkStep::Kind::Pair, pi, pj});
    used[pi] = used[pj] = true;
    remaining -= 2;
    current = std::move(next);
  }
  ensure(current == target, "ppt_inverse_walk: composite is not the inverse");
  return steps;
}

SymMatrix apply_walk(const SymMatrix& m, std::span<const WalkStep> steps) {
  SymMatrix current = m;
  for (const auto& step : steps) {
    if (step.kind == WalkStep::Kind::Single) {
      const std::array<std::size_t, 1> x{step.first};
      current = principal_pivot_transform(current, x);
    } else {
      const std::array<std::size_t, 2> x{step.first, step.second};
      current = principal_pivot_transform(current, x);
    }
  }
  return current;
}

SymMatrix toggle_neighbourhood_block(const SymMatrix& m, std::size_t r) {
  check_index(m, r);
  BitMatrix bits = m.bits();
  const std::vector<Word> nb = neighbourhood(bits, r);
  for_each_bit(nb, [&](std::size_t j) { bits.xor_into_row(j, nb); });
  return SymMatrix(m.labels(), std::move(bits));
}

ComplementByInversions local_complement_by_inversions(const SymMatrix& s, std::size_t i) {
  check_index(s, i);
  require_zero_diagonal(s);
  ComplementByInversions out;
  if (s.bits().row_is_zero(i)) {
    out.trivial = true;
    out.middle = s;
    return out;
  }
  const Completion completion = nonsingular_completion(s, i);
  const SymMatrix m_inv = inverse(completion.matrix);
  const SymMatrix toggled = toggle_neighbourhood_block(completion.matrix, i);
  const SymMatrix toggled_inv = inverse(toggled);
  SymMatrix expected = m_inv;
  expected.toggle(i, i);
  ensure(toggled_inv == expected,
         "local_complement_by_inversions: block toggle changed the inverse off (i,i)");
  ensure(zero_diagonal(toggled) == simple_local_complement(s, i),
         "local_complement_by_inversions: block toggle is not S^i off the diagonal");

  out.middle = zero_diagonal(m_inv);
  out.first_mask = completion.toggled;
  std::vector<std::size_t> diag;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (toggled_inv.get(k, k)) diag.push_back(k);
  out.second_mask = VertexSet::from_indices(s.labels(), diag);
  return out;
}

}  // namespace lcgf2
