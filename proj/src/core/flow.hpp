/**
 * \file flow.hpp
 * \brief Streamline integration of symmetry-respecting vector fields.
 *
 * Integration runs in the covering space R^{k1+k2} (the fields are globally
 * defined there), and samples are folded to the fundamental domain only for
 * output. Classical fixed-step RK4; reproducibility over adaptivity.
 */
#pragma once

#include <vector>

#include "core/fields.hpp"

namespace kf::flow {

using fields::Point;
using fields::Space;
using fields::VectorFn;

struct Sample {
  double t = 0.0;
  Point lifted;
  Point folded;
  double speed = 0.0;
};

struct Trajectory {
  std::vector<Sample> samples;
};

/// RK4 with fixed step from seed_point; n_steps + 1 samples. Throws
/// NonFiniteField if the field evaluates to NaN or infinity along the way.
Trajectory integrate(const VectorFn& field, const Space& sp, const Point& seed_point, double step,
                     std::size_t n_steps);

/// Seeds a uniform grid_density^dim lattice over the fundamental domain and
/// integrates every seed. Deterministic ordering by seed index.
std::vector<Trajectory> streamline_grid(const VectorFn& field, const Space& sp,
                                        std::size_t grid_density, double step,
                                        std::size_t n_steps);

}  // namespace kf::flow
