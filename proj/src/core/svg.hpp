/**
 * \file svg.hpp
 * \brief Diverging red-white-blue heatmap rendering for 2D scalar fields.
 */
#pragma once

#include <string>
#include <vector>

namespace kf::svg {

/// values is row-major, rows x cols; positive maps to red, zero to white,
/// negative to blue, scaled by the largest magnitude.
std::string heatmap(const std::vector<std::vector<double>>& values, int cell_px = 4);

}  // namespace kf::svg
