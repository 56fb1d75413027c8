/**
 * \file gf2.hpp
 * \brief Exact linear algebra over GF(2): bit-packed matrices, rank, kernel, image.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "core/errors.hpp"

namespace kf::gf2 {

/// Dense binary matrix with bit-packed rows; word-level XOR drives elimination.
class BitMatrix {
public:
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), width_((cols + 63) / 64), words_(rows * width_, 0) {
    if (rows == 0 || cols == 0) throw Error(errc::invalid_argument, "BitMatrix dimensions must be >= 1");
  }

  static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * width_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = words_[r * width_ + c / 64];
    const std::uint64_t mask = 1ULL << (c % 64);
    w = v ? (w | mask) : (w & ~mask);
  }

  void xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t k = 0; k < width_; ++k) words_[dst * width_ + k] ^= words_[src * width_ + k];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < width_; ++k)
      std::swap(words_[a * width_ + k], words_[b * width_ + k]);
  }

  std::vector<int> row(std::size_t r) const {
    std::vector<int> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = get(r, c) ? 1 : 0;
    return out;
  }

  /// Matrix-vector product over GF(2); v has cols() entries in {0,1}.
  std::vector<int> apply(const std::vector<int>& v) const;

  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && words_ == o.words_;
  }

private:
  std::size_t rows_, cols_, width_;
  std::vector<std::uint64_t> words_;
};

using BitVec = std::vector<int>;  // entries in {0,1}

struct RankKernelImage {
  std::size_t rank = 0;
  std::vector<BitVec> kernel_basis;        // canonical: one vector per free column, ascending
  std::vector<std::size_t> image_basis_columns;  // RREF pivot columns, ascending
};

/// Rank, canonical kernel basis and a maximal independent column set of M over GF(2).
RankKernelImage rank_kernel_image(const BitMatrix& m);

/// XOR of two bit-vectors of equal length.
BitVec bv_xor(const BitVec& a, const BitVec& b);

/// Rank of the span of the given bit-vectors.
std::size_t bv_rank(const std::vector<BitVec>& vecs);

}  // namespace kf::gf2
