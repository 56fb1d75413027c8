#include "core/space.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace kf::space {

IMat IMat::identity(std::size_t n) {
  IMat m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat IMat::mul(const IMat& o) const {
  IMat out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const long long v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out.at(i, j) += v * o.at(k, j);
    }
  return out;
}

std::vector<long long> IMat::apply(const std::vector<long long>& v) const {
  std::vector<long long> out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += at(i, j) * v[j];
  return out;
}

std::vector<double> IMat::apply(const std::vector<double>& v) const {
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += static_cast<double>(at(i, j)) * v[j];
  return out;
}

IMat IMat::transpose() const {
  IMat out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(j, i) = at(i, j);
  return out;
}

long long IMat::det() const {
  // Bareiss fraction-free elimination; exact for integer matrices.
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = at(i, j);
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * static_cast<long long>(m[n - 1][n - 1]);
}

Space::Space(KleinSpec spec) : spec_(std::move(spec)) {
  if (spec_.k1 < 1) throw Error(errc::invalid_argument, "k1 must be >= 1");
  if (spec_.mode == Mode::diagonal) {
    validate_diagonal();
  } else {
    validate_matrices();
  }
}

void Space::validate_diagonal() {
  const std::size_t k1 = spec_.k1, k2 = spec_.k2;
  if (spec_.B.size() != k1)
    throw Error(errc::invalid_argument, "B must have k1 rows");
  for (const auto& row : spec_.B)
    if (row.size() != k2) throw Error(errc::invalid_argument, "B must have k2 columns");

  if (k2 > 0) {
    for (std::size_t i = 0; i < k1; ++i) {
      bool any = false;
      for (std::size_t j = 0; j < k2; ++j) any |= spec_.B[i][j] != 0;
      if (!any)
        throw Error(errc::zero_row_or_column,
                    "toroidal coordinate " + std::to_string(i) + " is flipped by no Klein coordinate");
    }
    for (std::size_t j = 0; j < k2; ++j) {
      bool any = false;
      for (std::size_t i = 0; i < k1; ++i) any |= spec_.B[i][j] != 0;
      if (!any)
        throw Error(errc::zero_row_or_column,
                    "Klein coordinate " + std::to_string(j) + " flips no toroidal coordinate");
    }
    // Connectivity of the bipartite graph with adjacency blocks B, B^T. The
    // adjacency matrix is symmetric, so plain BFS decides strong connectivity.
    const std::size_t nodes = k1 + k2;
    std::vector<char> seen(nodes, 0);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      auto visit = [&](std::size_t u) {
        if (!seen[u]) { seen[u] = 1; ++count; q.push(u); }
      };
      if (v < k1) {
        for (std::size_t j = 0; j < k2; ++j)
          if (spec_.B[v][j]) visit(k1 + j);
      } else {
        for (std::size_t i = 0; i < k1; ++i)
          if (spec_.B[i][v - k1]) visit(i);
      }
    }
    if (count != nodes)
      throw Error(errc::disconnected_bipartite,
                  "the space factors as a Cartesian product of smaller spaces");

    bdec_ = gf2::rank_kernel_image(gf2::BitMatrix::from_rows(spec_.B));
  } else {
    bdec_ = gf2::RankKernelImage{};  // torus: empty decomposition
  }

  gen_.resize(k2);
  for (std::size_t j = 0; j < k2; ++j) {
    IMat d = IMat::identity(spec_.k1);
    for (std::size_t i = 0; i < k1; ++i)
      if (spec_.B[i][j]) d.at(i, i) = -1;
    gen_[j] = std::move(d);
  }
}

void Space::validate_matrices() {
  const std::size_t k1 = spec_.k1, k2 = spec_.k2;
  if (spec_.M.size() != k2)
    throw Error(errc::invalid_argument, "matrices mode needs k2 matrices");
  const IMat id = IMat::identity(k1);
  for (std::size_t j = 0; j < k2; ++j) {
    const IMat& m = spec_.M[j];
    if (m.n != k1) throw Error(errc::invalid_argument, "M_j must be k1 x k1");
    const long long d = m.det();
    if (d != 1 && d != -1)
      throw Error(errc::invalid_argument, "M_" + std::to_string(j) + " has determinant " + std::to_string(d));
    if (!(m.mul(m) == id))
      throw Error(errc::non_involutive, "M_" + std::to_string(j) + " squared is not the identity");
  }
  for (std::size_t i = 0; i < k2; ++i)
    for (std::size_t j = i + 1; j < k2; ++j)
      if (!(spec_.M[i].mul(spec_.M[j]) == spec_.M[j].mul(spec_.M[i])))
        throw Error(errc::non_commuting,
                    "M_" + std::to_string(i) + " and M_" + std::to_string(j) + " do not commute");
  gen_ = spec_.M;
}

IMat Space::holonomy(const std::vector<long long>& b) const {
  if (b.size() != spec_.k2) throw Error(errc::invalid_argument, "b must have length k2");
  // Generators are involutive, so only parity matters: M^b = M^(b mod 2).
  IMat h = IMat::identity(spec_.k1);
  for (std::size_t j = 0; j < spec_.k2; ++j)
    if (b[j] % 2 != 0) h = h.mul(gen_[j]);
  return h;
}

GroupElement Space::identity() const {
  return GroupElement{std::vector<long long>(spec_.k1, 0), std::vector<long long>(spec_.k2, 0)};
}

GroupElement Space::compose(const GroupElement& g1, const GroupElement& g2) const {
  // (a', b') <> (a, b) = (phi(b') a + a', b + b')
  const IMat h = holonomy(g1.b);
  GroupElement out;
  out.a = h.apply(g2.a);
  for (std::size_t i = 0; i < spec_.k1; ++i) out.a[i] += g1.a[i];
  out.b.resize(spec_.k2);
  for (std::size_t j = 0; j < spec_.k2; ++j) out.b[j] = g1.b[j] + g2.b[j];
  return out;
}

GroupElement Space::inverse(const GroupElement& g) const {
  std::vector<long long> nb(spec_.k2);
  for (std::size_t j = 0; j < spec_.k2; ++j) nb[j] = -g.b[j];
  const IMat h = holonomy(nb);
  GroupElement out;
  out.a = h.apply(g.a);
  for (auto& v : out.a) v = -v;
  out.b = std::move(nb);
  return out;
}

Point Space::act(const GroupElement& g, const Point& p) const {
  const IMat h = holonomy(g.b);
  Point out;
  out.x = h.apply(p.x);
  for (std::size_t i = 0; i < spec_.k1; ++i) out.x[i] += static_cast<double>(g.a[i]);
  out.y.resize(spec_.k2);
  for (std::size_t j = 0; j < spec_.k2; ++j) out.y[j] = p.y[j] + static_cast<double>(g.b[j]);
  return out;
}

std::pair<Point, GroupElement> Space::canonicalize(const Point& p) const {
  // Fold y into [0,1) first; that fixes the flip coset, then fold x.
  GroupElement h;
  h.b.resize(spec_.k2);
  for (std::size_t j = 0; j < spec_.k2; ++j)
    h.b[j] = -static_cast<long long>(std::floor(p.y[j]));
  const IMat hb = holonomy(h.b);
  std::vector<double> x = hb.apply(p.x);
  h.a.resize(spec_.k1);
  for (std::size_t i = 0; i < spec_.k1; ++i)
    h.a[i] = -static_cast<long long>(std::floor(x[i]));

  Point canon = act(h, p);
  // Defend against floor(x) landing exactly on 1.0 after rounding.
  for (auto& v : canon.x)
    if (v >= 1.0) v -= 1.0;
  for (auto& v : canon.y)
    if (v >= 1.0) v -= 1.0;
  return {canon, inverse(h)};
}

bool Space::equivalent(const Point& p, const Point& q, double tol) const {
  if (!(tol >= 0.0 && tol < 0.5))
    throw Error(errc::invalid_argument, "tolerance must lie in [0, 0.5)");
  // q ~ p iff some g = (a,b) maps q onto p; b is pinned by the y offset and a
  // by the x offset after applying the flip, so one candidate decides it.
  GroupElement g;
  g.b.resize(spec_.k2);
  for (std::size_t j = 0; j < spec_.k2; ++j) {
    const double d = p.y[j] - q.y[j];
    g.b[j] = static_cast<long long>(std::llround(d));
    if (std::fabs(d - static_cast<double>(g.b[j])) > tol) return false;
  }
  const std::vector<double> xh = holonomy(g.b).apply(q.x);
  for (std::size_t i = 0; i < spec_.k1; ++i) {
    const double d = p.x[i] - xh[i];
    const double a = std::round(d);
    if (std::fabs(d - a) > tol) return false;
  }
  return true;
}

const gf2::RankKernelImage& Space::b_decomposition() const {
  if (spec_.mode != Mode::diagonal)
    throw Error(errc::mode_unsupported, "GF(2) decomposition requires diagonal mode");
  return *bdec_;
}

namespace {

std::string vec_text(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

std::vector<Relation> Space::reduced_generators() const {
  if (spec_.mode != Mode::diagonal)
    throw Error(errc::mode_unsupported, "reduced generators require diagonal mode");
  const std::size_t k1 = spec_.k1, k2 = spec_.k2;
  const auto& dec = *bdec_;
  std::vector<Relation> out;

  for (std::size_t i = 0; i < k1; ++i) {
    Relation r{RelationKind::toroidal, identity(), ""};
    r.g.a[i] = 1;
    r.text = "x ~ x + e_" + std::to_string(i + 1);
    out.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < k2; ++j) {
    Relation r{RelationKind::klein_double, identity(), ""};
    r.g.b[j] = 2;
    r.text = "y ~ y + 2e_" + std::to_string(j + 1);
    out.push_back(std::move(r));
  }

  // Kernel translations. Duplicate B-columns give weight-2 kernel vectors
  // e_i + e_{i+1} along each class (the hidden tori); emit those chains first
  // and complete to a basis with the canonical GF(2) kernel vectors.
  std::vector<gf2::BitVec> chosen;
  auto push_kernel = [&](const gf2::BitVec& c) {
    std::vector<gf2::BitVec> trial = chosen;
    trial.push_back(c);
    if (gf2::bv_rank(trial) != chosen.size() + 1) return;
    chosen.push_back(c);
    Relation r{RelationKind::kernel_shift, identity(), ""};
    for (std::size_t j = 0; j < k2; ++j) r.g.b[j] = c[j];
    r.text = "y ~ y + " + vec_text(r.g.b);
    out.push_back(std::move(r));
  };
  const auto classes = hidden_tori().duplicate_column_classes;
  for (const auto& cls : classes)
    for (std::size_t t = 0; t + 1 < cls.size(); ++t) {
      gf2::BitVec c(k2, 0);
      c[cls[t]] = 1;
      c[cls[t + 1]] = 1;
      push_kernel(c);
    }
  for (const auto& c : dec.kernel_basis) push_kernel(c);

  for (const std::size_t j : dec.image_basis_columns) {
    Relation r{RelationKind::flip, identity(), ""};
    r.g.b[j] = 1;
    std::string flips;
    for (std::size_t i = 0; i < k1; ++i)
      if (spec_.B[i][j]) flips += (flips.empty() ? "" : ",") + std::string("x_") + std::to_string(i + 1);
    r.text = "(x,y) ~ (flip{" + flips + "} x, y + e_" + std::to_string(j + 1) + ")";
    out.push_back(std::move(r));
  }
  return out;
}

HiddenToriReport Space::hidden_tori() const {
  if (spec_.mode != Mode::diagonal)
    throw Error(errc::mode_unsupported, "hidden tori require diagonal mode");
  const std::size_t k1 = spec_.k1, k2 = spec_.k2;
  HiddenToriReport rep;
  rep.gf2_rank_deficiency = k2 - bdec_->rank;

  std::vector<char> used(k2, 0);
  for (std::size_t j = 0; j < k2; ++j) {
    if (used[j]) continue;
    std::vector<std::size_t> cls{j};
    for (std::size_t l = j + 1; l < k2; ++l) {
      if (used[l]) continue;
      bool same = true;
      for (std::size_t i = 0; i < k1 && same; ++i) same = spec_.B[i][j] == spec_.B[i][l];
      if (same) { cls.push_back(l); used[l] = 1; }
    }
    if (cls.size() >= 2) rep.duplicate_column_classes.push_back(std::move(cls));
  }
  return rep;
}

}  // namespace kf::space
