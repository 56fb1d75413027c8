/**
 * \file rational.hpp
 * \brief Exact rational arithmetic and small exact linear algebra.
 *
 * The averaging operators have dyadic entries (sums of +/- 1/2^k2) and their
 * kernels are extracted by Gauss-Jordan elimination over Q. Magnitudes stay
 * tiny, but intermediates go through 128-bit to rule out silent overflow.
 */
#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace kf {

class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(errc::invalid_argument, "rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  bool is_zero() const { return num_ == 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  using i128 = __int128;

  static Rational make(i128 n, i128 d) {
    if (d == 0) throw Error(errc::invalid_argument, "zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw Error(errc::invalid_argument, "rational overflow");
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void normalize() { *this = make(num_, den_); }

  long long num_;
  long long den_;
};

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

/// Reduced row-echelon form in place; returns pivot column indices (ascending).
inline std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = Rational(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Canonical kernel basis of m (RREF construction, one vector per free column).
inline std::vector<RatVec> kernel_basis(RatMat m) {
  std::vector<RatVec> basis;
  if (m.empty()) return basis;
  const std::size_t cols = m[0].size();
  const std::vector<std::size_t> pivots = rref(m);
  std::vector<long long> pivot_row(cols, -1);
  for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = static_cast<long long>(i);
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_row[c] >= 0) continue;
    RatVec v(cols, Rational(0));
    v[c] = Rational(1);
    for (std::size_t pc = 0; pc < cols; ++pc)
      if (pivot_row[pc] >= 0) v[pc] = -m[static_cast<std::size_t>(pivot_row[pc])][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline RatVec mat_vec(const RatMat& m, const RatVec& v) {
  RatVec out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline RatMat mat_mul(const RatMat& a, const RatMat& b) {
  const std::size_t n = a.size(), k = b.size(), mcols = b.empty() ? 0 : b[0].size();
  RatMat out(n, RatVec(mcols, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < mcols; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

/// Rank of the span of the given vectors (exact).
inline std::size_t rat_rank(std::vector<RatVec> vecs) {
  if (vecs.empty()) return 0;
  RatMat m(vecs.begin(), vecs.end());
  return rref(m).size();
}

/// True iff v lies in the span of basis (exact).
inline bool in_span(const std::vector<RatVec>& basis, const RatVec& v) {
  std::vector<RatVec> with(basis);
  with.push_back(v);
  return rat_rank(std::move(with)) == rat_rank(std::vector<RatVec>(basis));
}

}  // namespace kf
