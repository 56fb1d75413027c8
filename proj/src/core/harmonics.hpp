/**
 * \file harmonics.hpp
 * \brief Equivariant Fourier analysis on generalised Klein bottles.
 *
 * The quotient by Z^{k1} x (2Z)^{k2} is a flat torus (x-periods 1, y-periods
 * 2), on which the residual finite group Z2^{k2} acts. A field descends to the
 * Klein bottle iff it is fixed by the group average P; equivalently iff it is
 * killed by L = I - P. On Fourier coefficients c(lambda, zeta) the dual
 * operator reads
 *
 *   (L* c)(lambda, zeta) =
 *       c(lambda, zeta)
 *       - 2^{-k2} sum_beta (-1)^{zeta.beta} chi(beta) c(phi(beta)^T lambda, zeta)
 *
 * with chi = 1 for scalars and chi = phi for the X components of vector
 * fields. L* is block diagonal over orbits of lambda |-> phi(beta)^T lambda,
 * so kernels are extracted block by block in exact dyadic-rational arithmetic.
 */
#pragma once

#include <vector>

#include "core/fields.hpp"
#include "core/rational.hpp"
#include "core/space.hpp"

namespace kf::harmonics {

using fields::Point;
using space::Space;

struct Mode {
  std::vector<long long> lambda;
  std::vector<long long> zeta;
};

/// One dual-group element (A(g^{-1})^T on toroidal modes, the Klein offset
/// beta giving the phase (-1)^{zeta.beta}, and chi(g^{-1})). This is the
/// general (A, b, chi) parametrisation instantiated for Z2^{k2}.
struct DualAction {
  space::IMat lambda_map;
  std::vector<long long> beta;
  space::IMat chi;  // 1x1 for scalars, k1 x k1 for vector X components
};

std::vector<DualAction> dual_group(const Space& sp, bool vector_x);

struct FourierBlock {
  std::vector<long long> zeta;
  std::vector<std::vector<long long>> orbit;  // lambdas, sorted lexicographically
  bool complete = true;
  bool vector_valued = false;
  RatMat op;                    // filled by *_kernel_basis
  std::vector<RatVec> kernel;  // coefficient vectors; mode-major, then component
};

/// Partitions {|lambda_i| <= lmax} x zeta_list into orbit blocks. Orbits that
/// escape the box are flagged incomplete and carry only their in-box modes.
std::vector<FourierBlock> orbit_blocks(const Space& sp, long long lmax,
                                       const std::vector<std::vector<long long>>& zeta_list);

/// Convenience: all zeta with |zeta_j| <= zmax.
std::vector<std::vector<long long>> zeta_box(const Space& sp, long long zmax);

/// Exact operator matrix of L* restricted to a block (chi = 1).
RatMat scalar_block_operator(const Space& sp, const FourierBlock& block);

/// Exact operator matrix of L_X* restricted to a block (chi = phi), acting on
/// coefficients in C^{k1} per mode; layout is mode-major.
RatMat vector_block_operator(const Space& sp, const FourierBlock& block);

/// Fills block.op and block.kernel; throws on incomplete blocks.
void scalar_kernel_basis(const Space& sp, FourierBlock& block);
void vector_kernel_basis(const Space& sp, FourierBlock& block);

/// Real basis function: sum of coeff * cos|sin(2*pi*lambda.x + pi*zeta.y).
struct RealBasisFunction {
  bool is_sin = false;
  std::vector<std::pair<Mode, Rational>> terms;
  double eval(const Point& p) const;
  std::string trig_string(std::size_t k1, std::size_t k2) const;
};

/// Real vector basis function; per-component wave sums sharing one form.
struct RealBasisVectorFunction {
  bool is_sin = false;
  std::vector<std::vector<std::pair<Mode, Rational>>> components;  // size k1
  void eval(const Point& p, std::vector<double>& X) const;
};

/// Pairs conjugate modes (lambda, zeta) <-> (-lambda, -zeta) across the block
/// family into real cos/sin combinations. Requires every block's conjugate to
/// be present and complete (ConjugateNotInBox otherwise). Deterministic order.
std::vector<RealBasisFunction> realize_scalar(const Space& sp, const std::vector<FourierBlock>& blocks);
std::vector<RealBasisVectorFunction> realize_vector_x(const Space& sp,
                                                      const std::vector<FourierBlock>& blocks);

/// Pointwise group average: the projection onto symmetric fields. Input must
/// be a function on the covering torus (1-periodic in x, 2-periodic in y).
fields::ScalarFn symmetrize_scalar(fields::ScalarFn f, const Space& sp);
fields::VectorFn symmetrize_vector(fields::VectorFn f, const Space& sp);

}  // namespace kf::harmonics
