#include "core/tda.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kf::tda {

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

PointCloud window_embed(const std::vector<double>& seq, std::size_t W, double dedup_tol) {
  if (W < 1) throw Error(errc::invalid_argument, "window length must be >= 1");
  if (seq.size() < W)
    throw Error(errc::sequence_too_short, "sequence of length " + std::to_string(seq.size()) +
                                              " cannot host windows of length " + std::to_string(W));
  if (dedup_tol < 0.0) throw Error(errc::invalid_argument, "dedup tolerance must be >= 0");

  PointCloud cloud;
  cloud.window = W;
  cloud.dedup_tol = dedup_tol;
  const std::size_t count = seq.size() - W + 1;
  cloud.points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> p(seq.begin() + static_cast<long>(i),
                          seq.begin() + static_cast<long>(i + W));
    bool dup = false;
    for (const auto& kept : cloud.points)
      if (euclidean(kept, p) <= dedup_tol) {
        dup = true;
        break;
      }
    if (!dup) cloud.points.push_back(std::move(p));
  }
  return cloud;
}

DimensionEstimate dim_2nn(const PointCloud& cloud, double discard_fraction, DimMethod method) {
  const std::size_t n = cloud.points.size();
  if (n < 10) throw Error(errc::degenerate_cloud, "need at least 10 points");
  if (!(discard_fraction >= 0.0 && discard_fraction < 1.0))
    throw Error(errc::invalid_argument, "discard fraction must lie in [0, 1)");

  std::vector<double> mu(n);
  for (std::size_t i = 0; i < n; ++i) {
    // nearest and second nearest by (distance, index)
    double r1 = std::numeric_limits<double>::infinity(), r2 = r1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = euclidean(cloud.points[i], cloud.points[j]);
      if (d < r1) {
        r2 = r1;
        r1 = d;
      } else if (d < r2) {
        r2 = d;
      }
    }
    if (r1 == 0.0)
      throw Error(errc::degenerate_cloud, "duplicate points defeat the 2NN ratio; dedup upstream");
    mu[i] = r2 / r1;
  }
  std::sort(mu.begin(), mu.end());
  const std::size_t keep = n - static_cast<std::size_t>(discard_fraction * static_cast<double>(n));

  DimensionEstimate est;
  est.method = method;
  est.discard_fraction = discard_fraction;
  est.n_used = keep;
  if (method == DimMethod::mle) {
    // Discarded ratios are right-censored at the largest kept ratio; the
    // censored exponential MLE keeps the estimator consistent under trimming.
    double total = 0.0;
    for (std::size_t i = 0; i < keep; ++i) total += std::log(mu[i]);
    if (keep < n) total += static_cast<double>(n - keep) * std::log(mu[keep - 1]);
    if (total <= 0.0) throw Error(errc::degenerate_cloud, "all 2NN ratios are 1");
    est.d_hat = static_cast<double>(keep) / total;
  } else {
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < keep; ++i) {
      const double x = std::log(mu[i]);
      const double f = static_cast<double>(i + 1) / static_cast<double>(n);
      if (f >= 1.0) continue;
      const double y = -std::log(1.0 - f);
      sxy += x * y;
      sxx += x * x;
    }
    if (sxx <= 0.0) throw Error(errc::degenerate_cloud, "all 2NN ratios are 1");
    est.d_hat = sxy / sxx;
  }
  return est;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  // Elder rule: the root with the smaller vertex index survives the merge.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b)
      parent[b] = a;
    else
      parent[a] = b;
    return true;
  }
};

struct EdgeRec {
  double length;
  std::size_t i, j;
  bool operator<(const EdgeRec& o) const {
    if (length != o.length) return length < o.length;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

}  // namespace

std::vector<PersistenceDiagram> rips_persistence(const PointCloud& cloud, double r_max,
                                                 int max_degree, std::size_t max_points) {
  const std::size_t n = cloud.points.size();
  if (n > max_points)
    throw Error(errc::cloud_too_large, std::to_string(n) + " points exceeds the cap of " +
                                           std::to_string(max_points));
  if (!(r_max > 0.0)) throw Error(errc::invalid_argument, "r_max must be positive");
  if (max_degree < 0 || max_degree > 1)
    throw Error(errc::invalid_argument, "only degrees 0 and 1 are supported");

  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) dist[i][j] = dist[j][i] = euclidean(cloud.points[i], cloud.points[j]);

  std::vector<EdgeRec> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dist[i][j] <= r_max) edges.push_back(EdgeRec{dist[i][j], i, j});
  std::sort(edges.begin(), edges.end());

  // H0: union-find over edges in filtration order; every vertex is born at 0.
  PersistenceDiagram h0;
  h0.degree = 0;
  UnionFind uf(n);
  std::vector<char> edge_negative(edges.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (uf.unite(edges[e].i, edges[e].j)) {
      edge_negative[e] = 1;
      if (edges[e].length > 0.0) h0.pairs.push_back({0.0, edges[e].length});
    }
  std::size_t components = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (uf.find(v) == v) ++components;
  for (std::size_t c = 0; c < components; ++c)
    h0.pairs.push_back({0.0, std::numeric_limits<double>::infinity()});
  std::sort(h0.pairs.begin(), h0.pairs.end(), [](const PersistencePair& a, const PersistencePair& b) {
    return a.death < b.death;
  });

  std::vector<PersistenceDiagram> out{h0};
  if (max_degree < 1) return out;

  // H1: reduce the triangle boundary matrix over GF(2). Columns hold sorted
  // edge indices; the low of a reduced column is always a positive edge (the
  // longest edge of a 1-cycle cannot be a merge edge).
  std::vector<std::vector<std::size_t>> edge_index(n, std::vector<std::size_t>(n, 0));
  for (std::size_t e = 0; e < edges.size(); ++e)
    edge_index[edges[e].i][edges[e].j] = edge_index[edges[e].j][edges[e].i] = e;

  struct TriRec {
    double filt;
    std::size_t i, j, k;
    bool operator<(const TriRec& o) const {
      if (filt != o.filt) return filt < o.filt;
      if (i != o.i) return i < o.i;
      if (j != o.j) return j < o.j;
      return k < o.k;
    }
  };
  std::vector<TriRec> triangles;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dist[i][j] > r_max) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        const double f = std::max({dist[i][j], dist[i][k], dist[j][k]});
        if (f <= r_max) triangles.push_back(TriRec{f, i, j, k});
      }
    }
  std::sort(triangles.begin(), triangles.end());

  PersistenceDiagram h1;
  h1.degree = 1;
  std::vector<long long> low_owner(edges.size(), -1);  // edge -> reduced column owning it as low
  std::vector<std::vector<std::size_t>> reduced;       // reduced nonzero columns
  std::vector<double> reduced_filt;
  std::vector<char> edge_paired(edges.size(), 0);

  std::vector<std::size_t> col, tmp;
  for (const auto& t : triangles) {
    col = {edge_index[t.i][t.j], edge_index[t.i][t.k], edge_index[t.j][t.k]};
    std::sort(col.begin(), col.end());
    while (!col.empty()) {
      const std::size_t low = col.back();
      const long long owner = low_owner[low];
      if (owner < 0) break;
      const auto& other = reduced[static_cast<std::size_t>(owner)];
      tmp.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(tmp));
      col.swap(tmp);
    }
    if (col.empty()) continue;  // creates a 2-cycle; irrelevant in degree <= 1
    const std::size_t low = col.back();
    low_owner[low] = static_cast<long long>(reduced.size());
    reduced.push_back(col);
    reduced_filt.push_back(t.filt);
    edge_paired[low] = 1;
    const double birth = edges[low].length;
    if (t.filt > birth) h1.pairs.push_back({birth, t.filt});
  }
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (!edge_negative[e] && !edge_paired[e])
      h1.pairs.push_back({edges[e].length, std::numeric_limits<double>::infinity()});
  std::sort(h1.pairs.begin(), h1.pairs.end(), [](const PersistencePair& a, const PersistencePair& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.death < b.death;
  });
  out.push_back(std::move(h1));
  return out;
}

std::vector<ProfileRow> dimension_profile(const std::vector<double>& seq, std::size_t w_min,
                                          std::size_t w_max, double dedup_tol,
                                          double discard_fraction, DimMethod method) {
  if (w_min < 1 || w_min > w_max) throw Error(errc::invalid_argument, "bad window range");
  std::vector<ProfileRow> rows;
  for (std::size_t w = w_min; w <= w_max; ++w) {
    const PointCloud cloud = window_embed(seq, w, dedup_tol);
    const DimensionEstimate est = dim_2nn(cloud, discard_fraction, method);
    rows.push_back(ProfileRow{w, est.d_hat, cloud.points.size()});
  }
  return rows;
}

}  // namespace kf::tda
