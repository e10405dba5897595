#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcgf2/bits.hpp"

namespace lcgf2 {

/// Immutable ordered sequence of pairwise distinct vertex names. Copies share
/// storage, so matrices derived from one another compare labels cheaply.
class Labels {
 public:
  Labels() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Labels(std::vector<std::string> names);
  Labels(std::initializer_list<std::string_view> names);
  /// "1", "2", ..., "n".
  static Labels numbered(std::size_t n);

  std::size_t size() const { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  auto begin() const { return names_->begin(); }
  auto end() const { return names_->end(); }

  /// Throws Error(UnknownLabel).
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const;
  bool is_numbered() const;

  friend bool operator==(const Labels& a, const Labels& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Subset of vertex names. Order-insensitive; stored sorted and unique.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<std::string_view> names);
  explicit VertexSet(std::vector<std::string> names);
  /// Parses "a,b,c" (empty string gives the empty set).
  static VertexSet parse(std::string_view csv);

  bool empty() const { return names_.empty(); }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  bool contains(std::string_view name) const;

  /// Indices of the members in `labels`, ascending. Throws UnknownLabel.
  std::vector<std::size_t> resolve(const Labels& labels) const;
  static VertexSet from_indices(const Labels& labels, std::span<const std::size_t> idx);

  std::string to_string() const;  // "{a,b}"

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<std::string> names_;
};

/// Diagonal entries to toggle, named by vertex.
using DiagonalMask = VertexSet;

/// Labeled row vector over GF(2).
class Gf2Vector {
 public:
  Gf2Vector(Labels labels, BitVector bits);
  static Gf2Vector zero(Labels labels);
  static Gf2Vector parse(Labels labels, std::string_view bits);

  const Labels& labels() const { return labels_; }
  const BitVector& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool get(std::size_t i) const { return bits_.get(i); }
  bool is_zero() const { return bits_.is_zero(); }
  std::string to_string() const { return bits_.to_string(); }

  Gf2Vector& operator^=(const Gf2Vector& other);

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

 private:
  Labels labels_;
  BitVector bits_;
};

/// Symmetric V x V matrix over GF(2). Symmetry (s_ij = s_ji for i != j) is
/// checked at construction and preserved by every mutator.
class SymMatrix {
 public:
  SymMatrix() = default;
  /// Throws AsymmetricMatrix, or InvalidInput on a shape mismatch.
  SymMatrix(Labels labels, BitMatrix bits);

  static SymMatrix zero(Labels labels);
  static SymMatrix identity(Labels labels);
  /// Rows given as '0'/'1' strings.
  static SymMatrix from_rows(Labels labels, std::span<const std::string> rows);
  static SymMatrix from_rows(Labels labels, std::initializer_list<std::string_view> rows);
  /// Default labels 1..n.
  static SymMatrix from_rows(std::initializer_list<std::string_view> rows);

  std::size_t size() const { return labels_.size(); }
  const Labels& labels() const { return labels_; }
  const BitMatrix& bits() const { return bits_; }

  bool get(std::size_t i, std::size_t j) const { return bits_.get(i, j); }
  bool get(std::string_view i, std::string_view j) const {
    return get(index_of(i), index_of(j));
  }
  std::size_t index_of(std::string_view name) const { return labels_.index_of(name); }

  /// Toggles (i,j) and (j,i); toggles the single entry when i == j.
  void toggle(std::size_t i, std::size_t j);
  void set(std::size_t i, std::size_t j, bool value);

  bool is_zero_diagonal() const;
  BitVector diagonal() const;
  std::vector<std::string> rows_as_strings() const;

  /// Lexicographic comparison of the row-major bit strings (labels equal).
  bool lex_less(const SymMatrix& other) const;
  std::size_t hash() const;

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.labels_ == b.labels_ && a.bits_ == b.bits_;
  }

 private:
  Labels labels_;
  BitMatrix bits_;
};

struct SymMatrixHash {
  std::size_t operator()(const SymMatrix& m) const { return m.hash(); }
};

}  // namespace lcgf2
