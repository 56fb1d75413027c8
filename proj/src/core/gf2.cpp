#include "core/gf2.hpp"

namespace kf::gf2 {

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows[0].empty())
    throw Error(errc::invalid_argument, "BitMatrix dimensions must be >= 1");
  BitMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size())
      throw Error(errc::invalid_argument, "ragged rows");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const int v = rows[r][c];
      if (v != 0 && v != 1) throw Error(errc::invalid_argument, "entries must be 0 or 1");
      m.set(r, c, v == 1);
    }
  }
  return m;
}

std::vector<int> BitMatrix::apply(const std::vector<int>& v) const {
  if (v.size() != cols_) throw Error(errc::invalid_argument, "dimension mismatch");
  std::vector<int> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    int acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc ^= (get(r, c) & (v[c] & 1));
    out[r] = acc;
  }
  return out;
}

RankKernelImage rank_kernel_image(const BitMatrix& m) {
  BitMatrix e = m;  // reduced in place
  const std::size_t rows = e.rows(), cols = e.cols();

  RankKernelImage out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && !e.get(p, c)) ++p;
    if (p == rows) continue;
    e.swap_rows(p, r);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && e.get(i, c)) e.xor_row(i, r);
    out.image_basis_columns.push_back(c);
    ++r;
  }
  out.rank = out.image_basis_columns.size();

  std::vector<long long> pivot_row(cols, -1);
  for (std::size_t i = 0; i < out.image_basis_columns.size(); ++i)
    pivot_row[out.image_basis_columns[i]] = static_cast<long long>(i);

  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_row[c] >= 0) continue;
    BitVec v(cols, 0);
    v[c] = 1;
    for (std::size_t pc = 0; pc < cols; ++pc)
      if (pivot_row[pc] >= 0)
        v[pc] = e.get(static_cast<std::size_t>(pivot_row[pc]), c) ? 1 : 0;
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

BitVec bv_xor(const BitVec& a, const BitVec& b) {
  BitVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

std::size_t bv_rank(const std::vector<BitVec>& vecs) {
  if (vecs.empty()) return 0;
  std::vector<BitVec> rows = vecs;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && rows[i][c]) rows[i] = bv_xor(rows[i], rows[rank]);
    ++rank;
  }
  return rank;
}

}  // namespace kf::gf2
