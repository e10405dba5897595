#include "lcgf2/bits.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

#include "lcgf2/error.hpp"

namespace lcgf2 {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.flip(i);
    } else if (bits[i] != '0') {
      throw Error(Errc::InvalidInput, "bit string may only contain '0' and '1'");
    }
  }
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  if (get(i) != value) flip(i);
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitVector::weight() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::dot(const BitVector& other) const {
  if (size_ != other.size_) throw std::invalid_argument("BitVector::dot: size mismatch");
  Word acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
  return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (size_ != other.size_) throw std::invalid_argument("BitVector::^=: size mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

BitVector BitVector::operator*(const BitMatrix& m) const {
  if (size_ != m.rows()) throw std::invalid_argument("vector * matrix: size mismatch");
  BitVector out(m.cols());
  for (std::size_t r = 0; r < size_; ++r) {
    if (!get(r)) continue;
    auto src = m.row_words(r);
    for (std::size_t k = 0; k < out.words_.size(); ++k) out.words_[k] ^= src[k];
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.flip(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows, std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (get(r, c) != value) flip(r, c);
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  auto src = row_words(r);
  std::copy(src.begin(), src.end(), v.words().begin());
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
  if (v.size() != cols_) throw std::invalid_argument("BitMatrix::set_row: size mismatch");
  auto src = v.words();
  std::copy(src.begin(), src.end(), row_words(r).begin());
}

void BitMatrix::xor_row_into(std::size_t dst, std::size_t src) {
  Word* d = data_.data() + dst * stride_;
  const Word* s = data_.data() + src * stride_;
  for (std::size_t k = 0; k < stride_; ++k) d[k] ^= s[k];
}

void BitMatrix::xor_into_row(std::size_t dst, std::span<const Word> words) {
  Word* d = data_.data() + dst * stride_;
  for (std::size_t k = 0; k < stride_; ++k) d[k] ^= words[k];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

bool BitMatrix::row_is_zero(std::size_t r) const {
  auto w = row_words(r);
  return std::all_of(w.begin(), w.end(), [](Word x) { return x == 0; });
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.flip(c, r);
  return t;
}

BitMatrix BitMatrix::submatrix(std::span<const std::size_t> row_idx,
                               std::span<const std::size_t> col_idx) const {
  BitMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (std::size_t c = 0; c < col_idx.size(); ++c)
      if (get(row_idx[r], col_idx[c])) s.flip(r, c);
  return s;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  BitMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k)
      if (get(r, k)) out.xor_into_row(r, rhs.row_words(k));
  return out;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] ^= rhs.data_[k];
  return *this;
}

bool BitMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (get(r, c) != get(c, r)) return false;
  return true;
}

namespace {

// Reduces m in place to reduced row echelon form; returns the pivot column of
// each pivot row, in order.
std::vector<std::size_t> reduce_echelon(BitMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, lead);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != lead && m.get(r, c)) m.xor_row_into(r, lead);
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

}  // namespace

std::size_t BitMatrix::rank() const {
  BitMatrix work = *this;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t p = lead;
    while (p < rows_ && !work.get(p, c)) ++p;
    if (p == rows_) continue;
    work.swap_rows(p, lead);
    for (std::size_t r = lead + 1; r < rows_; ++r)
      if (work.get(r, c)) work.xor_row_into(r, lead);
    ++lead;
  }
  return lead;
}

std::vector<BitVector> BitMatrix::left_nullspace() const {
  // x * M = 0  <=>  M^T x^T = 0; read the kernel off the RREF of M^T.
  BitMatrix t = transposed();
  const std::vector<std::size_t> pivots = reduce_echelon(t);
  std::vector<bool> is_pivot(t.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < t.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector x(t.cols());
    x.flip(f);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (t.get(r, f)) x.flip(pivots[r]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<BitMatrix> BitMatrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  BitMatrix work = *this;
  BitMatrix inv = identity(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && !work.get(p, c)) ++p;
    if (p == rows_) return std::nullopt;
    work.swap_rows(p, c);
    inv.swap_rows(p, c);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != c && work.get(r, c)) {
        work.xor_row_into(r, c);
        inv.xor_row_into(r, c);
      }
    }
  }
  return inv;
}

std::size_t span_rank(std::span<const BitVector> vectors, std::size_t length) {
  return BitMatrix::from_rows(vectors, length).rank();
}

bool span_contains(std::span<const BitVector> outer, std::span<const BitVector> inner,
                   std::size_t length) {
  std::vector<BitVector> both(outer.begin(), outer.end());
  both.insert(both.end(), inner.begin(), inner.end());
  return span_rank(both, length) == span_rank(outer, length);
}

bool same_span(std::span<const BitVector> a, std::span<const BitVector> b, std::size_t length) {
  return span_contains(a, b, length) && span_contains(b, a, length);
}

}  // namespace lcgf2
