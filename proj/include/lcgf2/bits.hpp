#pragma once

// Word-packed GF(2) vectors and dense matrices. Bit j of a row lives in word
// j / 64 at position j % 64. Unused high bits of the last word are always 0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lcgf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

class BitMatrix;

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(words_for(size)) {}
  static BitVector from_string(std::string_view bits);  // "0101"

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool is_zero() const;
  std::size_t weight() const;
  bool dot(const BitVector& other) const;
  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  /// Row-vector product x * M.
  BitVector operator*(const BitMatrix& m) const;

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_) {}
  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::span<const BitVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c) {
    data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  std::span<const Word> row_words(std::size_t r) const {
    return {data_.data() + r * stride_, stride_};
  }
  std::span<Word> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  BitVector row(std::size_t r) const;
  void set_row(std::size_t r, const BitVector& v);

  void xor_row_into(std::size_t dst, std::size_t src);
  void xor_into_row(std::size_t dst, std::span<const Word> words);
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t r) const;

  BitMatrix transposed() const;
  BitMatrix submatrix(std::span<const std::size_t> row_idx,
                      std::span<const std::size_t> col_idx) const;

  BitMatrix operator*(const BitMatrix& rhs) const;
  BitMatrix& operator+=(const BitMatrix& rhs);
  friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  std::size_t rank() const;
  /// Basis of {x : x * M = 0}, one vector per free column of the reduced
  /// echelon form of M^T, in increasing free-column order.
  std::vector<BitVector> left_nullspace() const;
  /// Gauss-Jordan inverse; nullopt when singular. Pivots on the first
  /// nonzero entry in row order.
  std::optional<BitMatrix> inverse() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Rank of the span of a family of equal-length vectors.
std::size_t span_rank(std::span<const BitVector> vectors, std::size_t length);

/// True iff span(a) == span(b).
bool same_span(std::span<const BitVector> a, std::span<const BitVector> b, std::size_t length);

/// True iff span(inner) is contained in span(outer).
bool span_contains(std::span<const BitVector> outer, std::span<const BitVector> inner,
                   std::size_t length);

}  // namespace lcgf2
