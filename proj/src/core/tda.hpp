/**
 * \file tda.hpp
 * \brief Sliding-window embedding, 2NN intrinsic dimension, Rips persistence.
 */
#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace kf::tda {

struct PointCloud {
  std::vector<std::vector<double>> points;  // common dimension
  std::size_t window = 0;
  double dedup_tol = 0.0;
  std::size_t dim() const { return points.empty() ? 0 : points[0].size(); }
};

/// Sliding windows of length W along seq; points within dedup_tol (Euclidean)
/// of an earlier-kept point are dropped.
PointCloud window_embed(const std::vector<double>& seq, std::size_t W, double dedup_tol);

enum class DimMethod { mle, cdf_fit };

struct DimensionEstimate {
  double d_hat = 0.0;
  std::size_t n_used = 0;
  DimMethod method = DimMethod::mle;
  double discard_fraction = 0.0;
};

/// Two-nearest-neighbour intrinsic dimension from the ratios mu_i = r2/r1.
/// mle: censored maximum likelihood after discarding the largest ratios;
/// cdf_fit: least-squares slope through the origin of the empirical CDF plot.
DimensionEstimate dim_2nn(const PointCloud& cloud, double discard_fraction = 0.1,
                          DimMethod method = DimMethod::mle);

struct PersistencePair {
  double birth = 0.0;
  double death = std::numeric_limits<double>::infinity();
  bool essential() const { return !std::isfinite(death); }
};

struct PersistenceDiagram {
  int degree = 0;
  std::vector<PersistencePair> pairs;
};

/// Vietoris-Rips persistence in degrees 0 and 1. H0 by union-find over edges
/// (elder rule), H1 by GF(2) column reduction of the triangle boundary matrix
/// restricted to filtration values <= r_max. Zero-persistence pairs are
/// dropped; classes alive at r_max get death = infinity.
std::vector<PersistenceDiagram> rips_persistence(const PointCloud& cloud, double r_max,
                                                 int max_degree = 1,
                                                 std::size_t max_points = 400);

struct ProfileRow {
  std::size_t window = 0;
  double d_hat = 0.0;
  std::size_t n_points = 0;
};

/// dim_2nn across a range of window lengths (the plateau-inspection table).
std::vector<ProfileRow> dimension_profile(const std::vector<double>& seq, std::size_t w_min,
                                          std::size_t w_max, double dedup_tol,
                                          double discard_fraction = 0.1,
                                          DimMethod method = DimMethod::mle);

double euclidean(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace kf::tda
