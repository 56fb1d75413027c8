#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/gf2.hpp"
#include "core/rng.hpp"

using namespace kf;
using gf2::BitMatrix;
using gf2::BitVec;

namespace {

// Independent oracle: enumerate all 2^cols vectors and test M.v == 0.
std::vector<BitVec> kernel_by_enumeration(const BitMatrix& m) {
  std::vector<BitVec> out;
  const std::size_t cols = m.cols();
  for (std::uint64_t bits = 1; bits < (1ULL << cols); ++bits) {
    BitVec v(cols, 0);
    for (std::size_t c = 0; c < cols; ++c) v[c] = (bits >> c) & 1;
    bool zero = true;
    for (int e : m.apply(v)) zero &= e == 0;
    if (zero) out.push_back(std::move(v));
  }
  return out;
}

BitMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.below(2) == 1);
  return m;
}

}  // namespace

TEST_CASE("all-ones 2x2: rank 1, kernel (1,1), image column 0") {
  const auto res = gf2::rank_kernel_image(BitMatrix::from_rows({{1, 1}, {1, 1}}));
  CHECK(res.rank == 1);
  REQUIRE(res.kernel_basis.size() == 1);
  CHECK(res.kernel_basis[0] == BitVec{1, 1});
  CHECK(res.image_basis_columns == std::vector<std::size_t>{0});
}

TEST_CASE("identity 2x2: rank 2, empty kernel") {
  const auto res = gf2::rank_kernel_image(BitMatrix::from_rows({{1, 0}, {0, 1}}));
  CHECK(res.rank == 2);
  CHECK(res.kernel_basis.empty());
  CHECK(res.image_basis_columns == std::vector<std::size_t>{0, 1});
}

TEST_CASE("[[1,0,1],[0,1,1]]: kernel (1,1,1), cross-checked by enumeration") {
  const auto m = BitMatrix::from_rows({{1, 0, 1}, {0, 1, 1}});
  const auto res = gf2::rank_kernel_image(m);
  REQUIRE(res.kernel_basis.size() == 1);
  CHECK(res.kernel_basis[0] == BitVec{1, 1, 1});

  const auto oracle = kernel_by_enumeration(m);
  REQUIRE(oracle.size() == 1);  // 2^dim - 1 nonzero kernel vectors
  CHECK(oracle[0] == res.kernel_basis[0]);
}

TEST_CASE("random matrices: kernel membership, rank-nullity, image independence") {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
    const BitMatrix m = random_matrix(rng, rows, cols);
    const auto res = gf2::rank_kernel_image(m);

    CHECK(res.rank + res.kernel_basis.size() == cols);
    for (const auto& v : res.kernel_basis) {
      for (int e : m.apply(v)) CHECK(e == 0);
    }

    // Image columns are independent; every column lies in their span.
    std::vector<BitVec> img_cols;
    for (std::size_t c : res.image_basis_columns) {
      BitVec col(rows);
      for (std::size_t r = 0; r < rows; ++r) col[r] = m.get(r, c);
      img_cols.push_back(std::move(col));
    }
    CHECK(gf2::bv_rank(img_cols) == res.rank);
    for (std::size_t c = 0; c < cols; ++c) {
      BitVec col(rows);
      for (std::size_t r = 0; r < rows; ++r) col[r] = m.get(r, c);
      auto with = img_cols;
      with.push_back(col);
      CHECK(gf2::bv_rank(with) == res.rank);
    }

    // Kernel size matches brute force for small matrices.
    if (cols <= 5) {
      const auto oracle = kernel_by_enumeration(m);
      CHECK(oracle.size() + 1 == (1ULL << res.kernel_basis.size()));
    }
  }
}

TEST_CASE("row/column permutation preserves rank and kernel dimension") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 2 + rng.below(5), cols = 2 + rng.below(5);
    const BitMatrix m = random_matrix(rng, rows, cols);
    BitMatrix p(rows, cols);
    std::vector<std::size_t> rp(rows), cp(cols);
    for (std::size_t i = 0; i < rows; ++i) rp[i] = i;
    for (std::size_t i = 0; i < cols; ++i) cp[i] = i;
    for (std::size_t i = rows; i > 1; --i) std::swap(rp[i - 1], rp[rng.below(i)]);
    for (std::size_t i = cols; i > 1; --i) std::swap(cp[i - 1], cp[rng.below(i)]);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) p.set(r, c, m.get(rp[r], cp[c]));

    const auto a = gf2::rank_kernel_image(m);
    const auto b = gf2::rank_kernel_image(p);
    CHECK(a.rank == b.rank);
    CHECK(a.kernel_basis.size() == b.kernel_basis.size());
  }
}
