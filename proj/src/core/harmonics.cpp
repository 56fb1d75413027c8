#include "core/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace kf::harmonics {

namespace {
constexpr double kPi = std::numbers::pi;

using LVec = std::vector<long long>;

int beta_parity(const LVec& zeta, const LVec& beta) {
  long long dot = 0;
  for (std::size_t j = 0; j < zeta.size(); ++j) dot += zeta[j] * beta[j];
  return (dot % 2 + 2) % 2;
}

LVec neg(const LVec& v) {
  LVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

}  // namespace

std::vector<DualAction> dual_group(const Space& sp, bool vector_x) {
  const std::size_t k1 = sp.k1(), k2 = sp.k2();
  std::vector<DualAction> out;
  out.reserve(1ULL << k2);
  for (std::uint64_t bits = 0; bits < (1ULL << k2); ++bits) {
    DualAction el;
    el.beta.assign(k2, 0);
    std::vector<long long> b(k2, 0);
    for (std::size_t j = 0; j < k2; ++j)
      if ((bits >> j) & 1) el.beta[j] = b[j] = 1;
    const space::IMat h = sp.holonomy(b);
    el.lambda_map = h.transpose();
    if (vector_x) {
      el.chi = h;  // beta is its own inverse; chi(beta^{-1}) = phi(beta)
    } else {
      el.chi = space::IMat::identity(1);
    }
    (void)k1;
    out.push_back(std::move(el));
  }
  return out;
}

std::vector<std::vector<long long>> zeta_box(const Space& sp, long long zmax) {
  std::vector<LVec> out;
  LVec cur(sp.k2(), -zmax);
  if (sp.k2() == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(cur);
    std::size_t j = 0;
    while (j < cur.size()) {
      if (cur[j] < zmax) {
        ++cur[j];
        for (std::size_t l = 0; l < j; ++l) cur[l] = -zmax;
        break;
      }
      ++j;
    }
    if (j == cur.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FourierBlock> orbit_blocks(const Space& sp, long long lmax,
                                       const std::vector<std::vector<long long>>& zeta_list) {
  const std::size_t k1 = sp.k1();
  const auto group = dual_group(sp, false);

  // Enumerate lambdas in the box and partition into orbits of the dual action.
  std::vector<LVec> box;
  LVec cur(k1, -lmax);
  while (true) {
    box.push_back(cur);
    std::size_t j = 0;
    while (j < cur.size()) {
      if (cur[j] < lmax) {
        ++cur[j];
        for (std::size_t l = 0; l < j; ++l) cur[l] = -lmax;
        break;
      }
      ++j;
    }
    if (j == cur.size()) break;
  }
  std::sort(box.begin(), box.end());

  std::set<LVec> visited;
  struct OrbitInfo {
    std::vector<LVec> modes;
    bool complete = true;
  };
  std::vector<OrbitInfo> orbits;
  auto in_box = [&](const LVec& v) {
    for (long long c : v)
      if (c < -lmax || c > lmax) return false;
    return true;
  };
  for (const auto& start : box) {
    if (visited.count(start)) continue;
    OrbitInfo info;
    std::set<LVec> members;
    for (const auto& el : group) {
      const LVec img = el.lambda_map.apply(start);
      if (!in_box(img)) {
        info.complete = false;
        continue;
      }
      members.insert(img);
    }
    for (const auto& m : members) visited.insert(m);
    info.modes.assign(members.begin(), members.end());
    orbits.push_back(std::move(info));
  }

  std::vector<FourierBlock> blocks;
  for (const auto& zeta : zeta_list)
    for (const auto& orb : orbits) {
      FourierBlock b;
      b.zeta = zeta;
      b.orbit = orb.modes;
      b.complete = orb.complete;
      blocks.push_back(std::move(b));
    }
  std::sort(blocks.begin(), blocks.end(), [](const FourierBlock& a, const FourierBlock& b) {
    if (a.zeta != b.zeta) return a.zeta < b.zeta;
    return a.orbit < b.orbit;
  });
  return blocks;
}

namespace {

RatMat block_operator(const Space& sp, const FourierBlock& block, bool vector_x) {
  const auto group = dual_group(sp, vector_x);
  const std::size_t comp = vector_x ? sp.k1() : 1;
  const std::size_t nm = block.orbit.size();
  const std::size_t n = nm * comp;
  const Rational inv_order(1, static_cast<long long>(group.size()));

  std::map<LVec, std::size_t> index;
  for (std::size_t i = 0; i < nm; ++i) index[block.orbit[i]] = i;

  RatMat op(n, RatVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) op[i][i] = Rational(1);
  for (std::size_t mi = 0; mi < nm; ++mi) {
    for (const auto& el : group) {
      const LVec img = el.lambda_map.apply(block.orbit[mi]);
      const auto it = index.find(img);
      if (it == index.end())
        throw Error(errc::incomplete_orbit, "orbit escapes the block");
      const std::size_t mj = it->second;
      const int sign = beta_parity(block.zeta, el.beta) ? -1 : 1;
      for (std::size_t r = 0; r < comp; ++r)
        for (std::size_t c = 0; c < comp; ++c) {
          const long long chi = el.chi.at(r, c);
          if (chi == 0) continue;
          op[mi * comp + r][mj * comp + c] -= inv_order * Rational(sign * chi);
        }
    }
  }
  return op;
}

}  // namespace

RatMat scalar_block_operator(const Space& sp, const FourierBlock& block) {
  return block_operator(sp, block, false);
}

RatMat vector_block_operator(const Space& sp, const FourierBlock& block) {
  return block_operator(sp, block, true);
}

void scalar_kernel_basis(const Space& sp, FourierBlock& block) {
  if (!block.complete)
    throw Error(errc::incomplete_orbit, "kernel of a box-truncated orbit is undefined");
  block.vector_valued = false;
  block.op = scalar_block_operator(sp, block);
  block.kernel = kernel_basis(block.op);
}

void vector_kernel_basis(const Space& sp, FourierBlock& block) {
  if (!block.complete)
    throw Error(errc::incomplete_orbit, "kernel of a box-truncated orbit is undefined");
  block.vector_valued = true;
  block.op = vector_block_operator(sp, block);
  block.kernel = kernel_basis(block.op);
}

double RealBasisFunction::eval(const Point& p) const {
  double acc = 0.0;
  for (const auto& [m, c] : terms) {
    double th = 0.0;
    for (std::size_t i = 0; i < m.lambda.size(); ++i)
      th += 2.0 * kPi * static_cast<double>(m.lambda[i]) * p.x[i];
    for (std::size_t j = 0; j < m.zeta.size(); ++j)
      th += kPi * static_cast<double>(m.zeta[j]) * p.y[j];
    acc += c.to_double() * (is_sin ? std::sin(th) : std::cos(th));
  }
  return acc;
}

std::string RealBasisFunction::trig_string(std::size_t k1, std::size_t k2) const {
  std::string out;
  for (const auto& [m, c] : terms) {
    std::string arg;
    auto append = [&arg](const std::string& piece) {
      if (!arg.empty()) arg += " + ";
      arg += piece;
    };
    for (std::size_t i = 0; i < k1; ++i)
      if (m.lambda[i] != 0)
        append(std::to_string(2 * m.lambda[i]) + "*pi*x" + std::to_string(i + 1));
    for (std::size_t j = 0; j < k2; ++j)
      if (m.zeta[j] != 0)
        append(std::to_string(m.zeta[j]) + "*pi*y" + std::to_string(j + 1));
    if (arg.empty()) arg = "0";
    if (!out.empty()) out += " + ";
    out += c.str() + "*" + (is_sin ? "sin(" : "cos(") + arg + ")";
  }
  return out.empty() ? "0" : out;
}

void RealBasisVectorFunction::eval(const Point& p, std::vector<double>& X) const {
  X.assign(components.size(), 0.0);
  for (std::size_t i = 0; i < components.size(); ++i) {
    RealBasisFunction f;
    f.is_sin = is_sin;
    f.terms = components[i];
    X[i] = f.eval(p);
  }
}

namespace {

using ModeKey = std::pair<LVec, LVec>;  // (zeta, lambda)

struct SparseVec {
  std::map<std::pair<ModeKey, std::size_t>, Rational> entries;  // ((mode), component) -> coeff
};

ModeKey negated(const ModeKey& m) { return {neg(m.first), neg(m.second)}; }

/// Reduce sparse rational vectors to an exact RREF basis over their union support.
std::vector<SparseVec> sparse_rref(const std::vector<SparseVec>& vecs) {
  std::set<std::pair<ModeKey, std::size_t>> support;
  for (const auto& v : vecs)
    for (const auto& [k, c] : v.entries)
      if (!c.is_zero()) support.insert(k);
  std::vector<std::pair<ModeKey, std::size_t>> cols(support.begin(), support.end());
  std::map<std::pair<ModeKey, std::size_t>, std::size_t> col_of;
  for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;

  RatMat m(vecs.size(), RatVec(cols.size(), Rational(0)));
  for (std::size_t r = 0; r < vecs.size(); ++r)
    for (const auto& [k, c] : vecs[r].entries)
      if (!c.is_zero()) m[r][col_of[k]] = c;
  rref(m);

  std::vector<SparseVec> out;
  for (const auto& row : m) {
    SparseVec sv;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!row[j].is_zero()) sv.entries[cols[j]] = row[j];
    if (!sv.entries.empty()) out.push_back(std::move(sv));
  }
  return out;
}

/// Common realization path for scalar (comp = 1) and vector-X (comp = k1).
template <typename Emit>
void realize_family(const std::vector<FourierBlock>& blocks, std::size_t comp, Emit emit) {
  // Every mode of every kernel vector must have its conjugate available in a
  // complete block of the family.
  std::set<ModeKey> available;
  for (const auto& b : blocks) {
    if (!b.complete) continue;
    for (const auto& l : b.orbit) available.insert({b.zeta, l});
  }

  std::vector<SparseVec> sym, asym;
  for (const auto& b : blocks) {
    if (!b.complete) continue;
    for (const auto& kv : b.kernel) {
      SparseVec v;
      for (std::size_t mi = 0; mi < b.orbit.size(); ++mi)
        for (std::size_t c = 0; c < comp; ++c) {
          const Rational coeff = kv[mi * comp + c];
          if (coeff.is_zero()) continue;
          const ModeKey key{b.zeta, b.orbit[mi]};
          if (!available.count(negated(key)))
            throw Error(errc::conjugate_not_in_box,
                        "conjugate mode outside the enumerated box; widen zmax/lmax");
          v.entries[{key, c}] = coeff;
        }
      SparseVec vneg;
      for (const auto& [k, c] : v.entries) vneg.entries[{negated(k.first), k.second}] = c;
      SparseVec plus, minus;
      const Rational half(1, 2);
      for (const auto& [k, c] : v.entries) {
        plus.entries[k] = plus.entries[k] + c * half;
        minus.entries[k] = minus.entries[k] + c * half;
      }
      for (const auto& [k, c] : vneg.entries) {
        plus.entries[k] = plus.entries[k] + c * half;
        minus.entries[k] = minus.entries[k] - c * half;
      }
      sym.push_back(std::move(plus));
      asym.push_back(std::move(minus));
    }
  }

  // A mode-symmetric real coefficient vector realizes as a pure cosine
  // combination over one mode of each conjugate pair; an antisymmetric one as
  // a pure sine combination.
  for (const auto& w : sparse_rref(sym)) emit(w, false);
  for (const auto& u : sparse_rref(asym)) emit(u, true);
}

/// Canonical half: keep the lexicographically larger member of each pair.
bool in_half(const ModeKey& m) { return !(m < negated(m)); }

}  // namespace

std::vector<RealBasisFunction> realize_scalar(const Space& sp,
                                              const std::vector<FourierBlock>& blocks) {
  (void)sp;
  std::vector<RealBasisFunction> out;
  realize_family(blocks, 1, [&](const SparseVec& v, bool is_sin) {
    RealBasisFunction f;
    f.is_sin = is_sin;
    for (const auto& [key, c] : v.entries) {
      const auto& [mode, compidx] = key;
      (void)compidx;
      if (!in_half(mode)) continue;
      const bool self = mode == negated(mode);
      f.terms.push_back({Mode{mode.second, mode.first}, self ? c : c * Rational(2)});
    }
    if (!f.terms.empty()) out.push_back(std::move(f));
  });
  return out;
}

std::vector<RealBasisVectorFunction> realize_vector_x(const Space& sp,
                                                      const std::vector<FourierBlock>& blocks) {
  const std::size_t k1 = sp.k1();
  std::vector<RealBasisVectorFunction> out;
  realize_family(blocks, k1, [&](const SparseVec& v, bool is_sin) {
    RealBasisVectorFunction f;
    f.is_sin = is_sin;
    f.components.resize(k1);
    bool any = false;
    for (const auto& [key, c] : v.entries) {
      const auto& [mode, compidx] = key;
      if (!in_half(mode)) continue;
      const bool self = mode == negated(mode);
      f.components[compidx].push_back({Mode{mode.second, mode.first}, self ? c : c * Rational(2)});
      any = true;
    }
    if (any) out.push_back(std::move(f));
  });
  return out;
}

fields::ScalarFn symmetrize_scalar(fields::ScalarFn f, const Space& sp) {
  const std::size_t k2 = sp.k2();
  std::vector<space::IMat> hol;
  std::vector<std::vector<long long>> betas;
  for (std::uint64_t bits = 0; bits < (1ULL << k2); ++bits) {
    std::vector<long long> b(k2, 0);
    for (std::size_t j = 0; j < k2; ++j)
      if ((bits >> j) & 1) b[j] = 1;
    hol.push_back(sp.holonomy(b));
    betas.push_back(std::move(b));
  }
  const double inv = 1.0 / static_cast<double>(hol.size());
  return [f = std::move(f), hol, betas, inv](const Point& p) {
    double acc = 0.0;
    for (std::size_t t = 0; t < hol.size(); ++t) {
      Point q;
      q.x = hol[t].apply(p.x);
      q.y = p.y;
      for (std::size_t j = 0; j < q.y.size(); ++j) q.y[j] += static_cast<double>(betas[t][j]);
      acc += f(q);
    }
    return acc * inv;
  };
}

fields::VectorFn symmetrize_vector(fields::VectorFn f, const Space& sp) {
  const std::size_t k2 = sp.k2();
  std::vector<space::IMat> hol;
  std::vector<std::vector<long long>> betas;
  for (std::uint64_t bits = 0; bits < (1ULL << k2); ++bits) {
    std::vector<long long> b(k2, 0);
    for (std::size_t j = 0; j < k2; ++j)
      if ((bits >> j) & 1) b[j] = 1;
    hol.push_back(sp.holonomy(b));
    betas.push_back(std::move(b));
  }
  const double inv = 1.0 / static_cast<double>(hol.size());
  return [f = std::move(f), hol, betas, inv](const Point& p) {
    fields::VectorValue acc;
    acc.X.assign(p.x.size(), 0.0);
    acc.Y.assign(p.y.size(), 0.0);
    for (std::size_t t = 0; t < hol.size(); ++t) {
      Point q;
      q.x = hol[t].apply(p.x);
      q.y = p.y;
      for (std::size_t j = 0; j < q.y.size(); ++j) q.y[j] += static_cast<double>(betas[t][j]);
      const fields::VectorValue v = f(q);
      const std::vector<double> hx = hol[t].apply(v.X);  // phi(beta)^{-1} = phi(beta)
      for (std::size_t i = 0; i < acc.X.size(); ++i) acc.X[i] += hx[i];
      for (std::size_t j = 0; j < acc.Y.size(); ++j) acc.Y[j] += v.Y[j];
    }
    for (auto& v : acc.X) v *= inv;
    for (auto& v : acc.Y) v *= inv;
    return acc;
  };
}

}  // namespace kf::harmonics
