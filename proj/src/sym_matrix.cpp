#include "lcgf2/sym_matrix.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "lcgf2/error.hpp"

namespace lcgf2 {

Labels::Labels(std::vector<std::string> names) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error(Errc::InvalidInput, "vertex labels must be nonempty");
    if (!seen.insert(n).second) throw Error(Errc::DuplicateLabel, "duplicate label '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Labels::Labels(std::initializer_list<std::string_view> names)
    : Labels(std::vector<std::string>(names.begin(), names.end())) {}

Labels Labels::numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return Labels(std::move(names));
}

std::size_t Labels::index_of(std::string_view name) const {
  const auto& v = *names_;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == name) return i;
  throw Error(Errc::UnknownLabel, "unknown label '" + std::string(name) + "'");
}

bool Labels::contains(std::string_view name) const {
  return std::find(names_->begin(), names_->end(), name) != names_->end();
}

bool Labels::is_numbered() const {
  for (std::size_t i = 0; i < size(); ++i)
    if ((*names_)[i] != std::to_string(i + 1)) return false;
  return true;
}

VertexSet::VertexSet(std::initializer_list<std::string_view> names)
    : VertexSet(std::vector<std::string>(names.begin(), names.end())) {}

VertexSet::VertexSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

VertexSet VertexSet::parse(std::string_view csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : csv) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '{' && ch != '}') {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return VertexSet(std::move(out));
}

bool VertexSet::contains(std::string_view name) const {
  return std::binary_search(names_.begin(), names_.end(), name);
}

std::vector<std::size_t> VertexSet::resolve(const Labels& labels) const {
  std::vector<std::size_t> idx;
  idx.reserve(names_.size());
  for (const auto& n : names_) idx.push_back(labels.index_of(n));
  std::sort(idx.begin(), idx.end());
  return idx;
}

VertexSet VertexSet::from_indices(const Labels& labels, std::span<const std::size_t> idx) {
  std::vector<std::string> names;
  for (std::size_t i : idx) names.push_back(labels[i]);
  return VertexSet(std::move(names));
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) s += ',';
    s += names_[i];
  }
  return s + "}";
}

Gf2Vector::Gf2Vector(Labels labels, BitVector bits)
    : labels_(std::move(labels)), bits_(std::move(bits)) {
  if (labels_.size() != bits_.size())
    throw Error(Errc::LabelMismatch, "vector length does not match its labels");
}

Gf2Vector Gf2Vector::zero(Labels labels) {
  const std::size_t n = labels.size();
  return Gf2Vector(std::move(labels), BitVector(n));
}

Gf2Vector Gf2Vector::parse(Labels labels, std::string_view bits) {
  return Gf2Vector(std::move(labels), BitVector::from_string(bits));
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
  if (!(labels_ == other.labels_)) throw Error(Errc::LabelMismatch, "vector labels differ");
  bits_ ^= other.bits_;
  return *this;
}

SymMatrix::SymMatrix(Labels labels, BitMatrix bits)
    : labels_(std::move(labels)), bits_(std::move(bits)) {
  if (bits_.rows() != labels_.size() || bits_.cols() != labels_.size())
    throw Error(Errc::InvalidInput, "matrix shape does not match its labels");
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (bits_.get(i, j) != bits_.get(j, i))
        throw Error(Errc::AsymmetricMatrix, "matrix is not symmetric at (" + labels_[i] + "," +
                                                labels_[j] + ")");
}

SymMatrix SymMatrix::zero(Labels labels) {
  const std::size_t n = labels.size();
  return SymMatrix(std::move(labels), BitMatrix(n, n));
}

SymMatrix SymMatrix::identity(Labels labels) {
  const std::size_t n = labels.size();
  return SymMatrix(std::move(labels), BitMatrix::identity(n));
}

SymMatrix SymMatrix::from_rows(Labels labels, std::span<const std::string> rows) {
  const std::size_t n = labels.size();
  if (rows.size() != n) throw Error(Errc::InvalidInput, "row count does not match label count");
  BitMatrix bits(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n)
      throw Error(Errc::InvalidInput, "row " + std::to_string(r + 1) + " has wrong length");
    for (std::size_t c = 0; c < n; ++c) {
      const char ch = rows[r][c];
      if (ch == '1') {
        bits.flip(r, c);
      } else if (ch != '0') {
        throw Error(Errc::InvalidInput, "matrix entries must be '0' or '1'");
      }
    }
  }
  return SymMatrix(std::move(labels), std::move(bits));
}

SymMatrix SymMatrix::from_rows(Labels labels, std::initializer_list<std::string_view> rows) {
  std::vector<std::string> r(rows.begin(), rows.end());
  return from_rows(std::move(labels), r);
}

SymMatrix SymMatrix::from_rows(std::initializer_list<std::string_view> rows) {
  return from_rows(Labels::numbered(rows.size()), rows);
}

void SymMatrix::toggle(std::size_t i, std::size_t j) {
  bits_.flip(i, j);
  if (i != j) bits_.flip(j, i);
}

void SymMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (get(i, j) != value) toggle(i, j);
}

bool SymMatrix::is_zero_diagonal() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (get(i, i)) return false;
  return true;
}

BitVector SymMatrix::diagonal() const {
  BitVector d(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (get(i, i)) d.flip(i);
  return d;
}

std::vector<std::string> SymMatrix::rows_as_strings() const {
  std::vector<std::string> rows;
  rows.reserve(size());
  for (std::size_t r = 0; r < size(); ++r) rows.push_back(bits_.row(r).to_string());
  return rows;
}

bool SymMatrix::lex_less(const SymMatrix& other) const {
  if (size() != other.size()) return size() < other.size();
  for (std::size_t r = 0; r < size(); ++r) {
    auto a = bits_.row_words(r);
    auto b = other.bits_.row_words(r);
    for (std::size_t k = 0; k < a.size(); ++k) {
      const Word diff = a[k] ^ b[k];
      if (diff) return ((a[k] >> std::countr_zero(diff)) & 1u) == 0;
    }
  }
  return false;
}

std::size_t SymMatrix::hash() const {
  std::size_t h = std::hash<std::size_t>{}(size());
  for (std::size_t r = 0; r < size(); ++r)
    for (Word w : bits_.row_words(r)) h = (h ^ std::hash<Word>{}(w)) * 0x100000001b3ULL + 0x9e37;
  return h;
}

}  // namespace lcgf2
