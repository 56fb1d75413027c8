/**
 * \file space.hpp
 * \brief Generalised Klein bottles as computable objects.
 *
 * A space is the quotient of R^{k1+k2} by the semidirect product
 * Z^{k1} x| Z^{k2}, where a unit step in Klein coordinate y_j applies an
 * involutive automorphism to the toroidal coordinates x. Two automorphism
 * modes are supported: diagonal sign flips driven by a binary matrix B
 * (column j of B lists which x_i flip when y_j increments), and general
 * commuting involutive integer matrices M_j.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/gf2.hpp"

namespace kf::space {

/// Dense square integer matrix, sized k1 x k1.
struct IMat {
  std::size_t n = 0;
  std::vector<long long> a;  // row-major

  IMat() = default;
  explicit IMat(std::size_t n_) : n(n_), a(n_ * n_, 0) {}
  static IMat identity(std::size_t n);

  long long& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
  long long at(std::size_t r, std::size_t c) const { return a[r * n + c]; }

  IMat mul(const IMat& o) const;
  std::vector<long long> apply(const std::vector<long long>& v) const;
  std::vector<double> apply(const std::vector<double>& v) const;
  IMat transpose() const;
  bool operator==(const IMat& o) const { return n == o.n && a == o.a; }

  /// Exact determinant (Bareiss fraction-free elimination).
  long long det() const;
};

enum class Mode { diagonal, matrices };

/// Raw, unvalidated space definition (mirrors the JSON spec file).
struct KleinSpec {
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  Mode mode = Mode::diagonal;
  std::vector<std::vector<int>> B;  // k1 x k2, diagonal mode
  std::vector<IMat> M;              // k2 matrices, matrices mode
};

struct GroupElement {
  std::vector<long long> a;  // length k1
  std::vector<long long> b;  // length k2
};

struct Point {
  std::vector<double> x;  // length k1
  std::vector<double> y;  // length k2
};

enum class RelationKind { toroidal, klein_double, kernel_shift, flip };

/// One generating equivalence p ~ act(g, p).
struct Relation {
  RelationKind kind;
  GroupElement g;
  std::string text;
};

struct HiddenToriReport {
  std::vector<std::vector<std::size_t>> duplicate_column_classes;  // classes of size >= 2
  std::size_t gf2_rank_deficiency = 0;                             // k2 - rank(B)
};

/// Validated space; immutable after construction, safe to share across threads.
class Space {
public:
  /// Validates the spec; throws Error on marooned coordinates, disconnected
  /// bipartite structure, or non-commuting / non-involutive matrices.
  explicit Space(KleinSpec spec);

  std::size_t k1() const { return spec_.k1; }
  std::size_t k2() const { return spec_.k2; }
  std::size_t dim() const { return spec_.k1 + spec_.k2; }
  Mode mode() const { return spec_.mode; }
  const KleinSpec& spec() const { return spec_; }

  /// Holonomy matrix H(b): the automorphism x picks up when y translates by b.
  IMat holonomy(const std::vector<long long>& b) const;

  GroupElement identity() const;
  GroupElement compose(const GroupElement& g1, const GroupElement& g2) const;
  GroupElement inverse(const GroupElement& g) const;
  Point act(const GroupElement& g, const Point& p) const;

  /// Unique representative in [0,1)^{k1+k2} plus the g with act(g, canonical) = p.
  std::pair<Point, GroupElement> canonicalize(const Point& p) const;

  bool equivalent(const Point& p, const Point& q, double tol = 1e-9) const;

  /// Generating relations from the GF(2) factorisation of the automorphism
  /// (diagonal mode only): k1 toroidal translations, k2 double Klein
  /// translations, dim ker(B) kernel translations and rank(B) flips.
  std::vector<Relation> reduced_generators() const;

  HiddenToriReport hidden_tori() const;

  /// GF(2) decomposition of B (diagonal mode only).
  const gf2::RankKernelImage& b_decomposition() const;

  /// Holonomy of the j-th unit Klein step (phi(e_j)); valid in both modes.
  const IMat& generator_matrix(std::size_t j) const { return gen_[j]; }

private:
  void validate_diagonal();
  void validate_matrices();

  KleinSpec spec_;
  std::vector<IMat> gen_;  // phi(e_j) per Klein coordinate
  std::optional<gf2::RankKernelImage> bdec_;
};

}  // namespace kf::space
