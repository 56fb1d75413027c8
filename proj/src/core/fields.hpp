/**
 * \file fields.hpp
 * \brief Symmetry-respecting scalar and vector fields via switching-function ansatze.
 *
 * The switching pair (T1, T2) for toroidal coordinate i interpolates between a
 * profile f(x_i) and its reflection f(1-x_i); the pair exchanges values each
 * time a Klein coordinate that flips x_i is incremented, which is exactly how
 * the constructed fields absorb the quotient symmetries.
 */
#pragma once

#include <functional>
#include <vector>

#include "core/space.hpp"

namespace kf::fields {

using space::Point;
using space::Space;

/// Finite trigonometric polynomial; 1-periodicity is structural.
struct TrigTerm {
  long long freq = 0;
  double cos_coeff = 0.0;
  double sin_coeff = 0.0;
};

struct TrigPoly {
  std::vector<TrigTerm> terms;
  double eval(double x) const;
};

struct Switching {
  double t1 = 0.0;
  double t2 = 0.0;
  double s = 0.0;
};

/// T1 = (1+S)/2, T2 = (1-S)/2 with S = prod_k cos(pi y_k)^{B_ik}. Diagonal mode.
Switching switching(const Space& sp, std::size_t i, const std::vector<double>& y);

/// F(x,y) = prod_i ( T_{i,1}(y) f_i(x_i) + T_{i,2}(y) f_i(1-x_i) ).
struct ScalarAnsatz {
  std::vector<TrigPoly> profiles;  // one per toroidal coordinate
  double eval(const Space& sp, const Point& p) const;
};

/// X_i carries the minus-sign pair on its own coordinate factor; Y_i uses
/// plus-sign pairs throughout.
struct VectorAnsatz {
  std::vector<std::vector<TrigPoly>> x_profiles;  // k1 x k1: f_{i,j}
  std::vector<std::vector<TrigPoly>> y_profiles;  // k2 x k1: g_{i,j}
  void eval(const Space& sp, const Point& p, std::vector<double>& X, std::vector<double>& Y) const;
};

using ScalarFn = std::function<double(const Point&)>;

struct VectorValue {
  std::vector<double> X;
  std::vector<double> Y;
};
using VectorFn = std::function<VectorValue(const Point&)>;

ScalarFn make_scalar_field(const Space& sp, ScalarAnsatz ansatz);
VectorFn make_vector_field(const Space& sp, VectorAnsatz ansatz);

/// One real Fourier-style term c_cos*cos(theta) + c_sin*sin(theta) with
/// theta = 2*pi*lambda.x + pi*zeta.y.
struct WaveTerm {
  std::vector<long long> lambda;
  std::vector<long long> zeta;
  double cos_coeff = 0.0;
  double sin_coeff = 0.0;
};

double eval_waves(const std::vector<WaveTerm>& terms, const Point& p);
ScalarFn make_wave_scalar(std::vector<WaveTerm> terms);
VectorFn make_wave_vector(std::vector<std::vector<WaveTerm>> x_terms,
                          std::vector<std::vector<WaveTerm>> y_terms, std::size_t k1,
                          std::size_t k2);

struct SymmetryReport {
  double max_residual = 0.0;
  Point worst_point;
  bool passed = false;
};

/// Samples random points and group elements (reduced generators plus random
/// small (a,b)) and reports the worst symmetry residual |F(p) - F(g.p)|.
SymmetryReport check_scalar_symmetry(const ScalarFn& f, const Space& sp, std::size_t n_samples,
                                     double tol, std::uint64_t seed = 1);

/// Frame-corrected residual |H(b) X(p) - X(g.p)|_inf + |Y(p) - Y(g.p)|_inf.
SymmetryReport check_vector_symmetry(const VectorFn& f, const Space& sp, std::size_t n_samples,
                                     double tol, std::uint64_t seed = 1);

}  // namespace kf::fields
