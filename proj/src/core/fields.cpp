#include "core/fields.hpp"

#include <cmath>
#include <numbers>

#include "core/rng.hpp"

namespace kf::fields {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double TrigPoly::eval(double x) const {
  double acc = 0.0;
  for (const auto& t : terms) {
    const double th = kTwoPi * static_cast<double>(t.freq) * x;
    acc += t.cos_coeff * std::cos(th) + t.sin_coeff * std::sin(th);
  }
  return acc;
}

Switching switching(const Space& sp, std::size_t i, const std::vector<double>& y) {
  if (sp.mode() != space::Mode::diagonal)
    throw Error(errc::mode_unsupported, "switching functions require diagonal mode");
  if (i >= sp.k1()) throw Error(errc::invalid_argument, "toroidal index out of range");
  double s = 1.0;
  for (std::size_t k = 0; k < sp.k2(); ++k)
    if (sp.spec().B[i][k]) s *= std::cos(kPi * y[k]);
  return Switching{0.5 * (1.0 + s), 0.5 * (1.0 - s), s};
}

double ScalarAnsatz::eval(const Space& sp, const Point& p) const {
  double acc = 1.0;
  for (std::size_t i = 0; i < sp.k1(); ++i) {
    const Switching sw = switching(sp, i, p.y);
    acc *= sw.t1 * profiles[i].eval(p.x[i]) + sw.t2 * profiles[i].eval(1.0 - p.x[i]);
  }
  return acc;
}

void VectorAnsatz::eval(const Space& sp, const Point& p, std::vector<double>& X,
                        std::vector<double>& Y) const {
  const std::size_t k1 = sp.k1(), k2 = sp.k2();
  std::vector<Switching> sw(k1);
  for (std::size_t j = 0; j < k1; ++j) sw[j] = switching(sp, j, p.y);

  X.assign(k1, 0.0);
  for (std::size_t i = 0; i < k1; ++i) {
    double acc = sw[i].t1 * x_profiles[i][i].eval(p.x[i]) -
                 sw[i].t2 * x_profiles[i][i].eval(1.0 - p.x[i]);
    for (std::size_t j = 0; j < k1; ++j) {
      if (j == i) continue;
      acc *= sw[j].t1 * x_profiles[i][j].eval(p.x[j]) +
             sw[j].t2 * x_profiles[i][j].eval(1.0 - p.x[j]);
    }
    X[i] = acc;
  }

  Y.assign(k2, 0.0);
  for (std::size_t i = 0; i < k2; ++i) {
    double acc = 1.0;
    for (std::size_t j = 0; j < k1; ++j)
      acc *= sw[j].t1 * y_profiles[i][j].eval(p.x[j]) +
             sw[j].t2 * y_profiles[i][j].eval(1.0 - p.x[j]);
    Y[i] = acc;
  }
}

ScalarFn make_scalar_field(const Space& sp, ScalarAnsatz ansatz) {
  if (ansatz.profiles.size() != sp.k1())
    throw Error(errc::invalid_argument, "scalar ansatz needs k1 profiles");
  return [&sp, a = std::move(ansatz)](const Point& p) { return a.eval(sp, p); };
}

VectorFn make_vector_field(const Space& sp, VectorAnsatz ansatz) {
  if (ansatz.x_profiles.size() != sp.k1() || ansatz.y_profiles.size() != sp.k2())
    throw Error(errc::invalid_argument, "vector ansatz shape mismatch");
  for (const auto& row : ansatz.x_profiles)
    if (row.size() != sp.k1()) throw Error(errc::invalid_argument, "x_profiles must be k1 x k1");
  for (const auto& row : ansatz.y_profiles)
    if (row.size() != sp.k1()) throw Error(errc::invalid_argument, "y_profiles must be k2 x k1");
  return [&sp, a = std::move(ansatz)](const Point& p) {
    VectorValue v;
    a.eval(sp, p, v.X, v.Y);
    return v;
  };
}

double eval_waves(const std::vector<WaveTerm>& terms, const Point& p) {
  double acc = 0.0;
  for (const auto& t : terms) {
    double th = 0.0;
    for (std::size_t i = 0; i < t.lambda.size(); ++i)
      th += kTwoPi * static_cast<double>(t.lambda[i]) * p.x[i];
    for (std::size_t j = 0; j < t.zeta.size(); ++j)
      th += kPi * static_cast<double>(t.zeta[j]) * p.y[j];
    acc += t.cos_coeff * std::cos(th) + t.sin_coeff * std::sin(th);
  }
  return acc;
}

ScalarFn make_wave_scalar(std::vector<WaveTerm> terms) {
  return [t = std::move(terms)](const Point& p) { return eval_waves(t, p); };
}

VectorFn make_wave_vector(std::vector<std::vector<WaveTerm>> x_terms,
                          std::vector<std::vector<WaveTerm>> y_terms, std::size_t k1,
                          std::size_t k2) {
  if (x_terms.size() != k1 || y_terms.size() != k2)
    throw Error(errc::invalid_argument, "wave vector field shape mismatch");
  return [xt = std::move(x_terms), yt = std::move(y_terms)](const Point& p) {
    VectorValue v;
    v.X.reserve(xt.size());
    v.Y.reserve(yt.size());
    for (const auto& terms : xt) v.X.push_back(eval_waves(terms, p));
    for (const auto& terms : yt) v.Y.push_back(eval_waves(terms, p));
    return v;
  };
}

namespace {

std::vector<space::GroupElement> sample_generators(const Space& sp, Rng& rng) {
  std::vector<space::GroupElement> gens;
  if (sp.mode() == space::Mode::diagonal) {
    for (auto& rel : sp.reduced_generators()) gens.push_back(rel.g);
  } else {
    for (std::size_t i = 0; i < sp.k1(); ++i) {
      auto g = sp.identity();
      g.a[i] = 1;
      gens.push_back(g);
    }
    for (std::size_t j = 0; j < sp.k2(); ++j) {
      auto g = sp.identity();
      g.b[j] = 1;
      gens.push_back(g);
    }
  }
  for (int t = 0; t < 8; ++t) {
    auto g = sp.identity();
    for (auto& v : g.a) v = rng.range(-2, 2);
    for (auto& v : g.b) v = rng.range(-2, 2);
    gens.push_back(g);
  }
  return gens;
}

Point random_point(const Space& sp, Rng& rng) {
  Point p;
  p.x.resize(sp.k1());
  p.y.resize(sp.k2());
  for (auto& v : p.x) v = rng.uniform(-2.0, 3.0);
  for (auto& v : p.y) v = rng.uniform(-2.0, 3.0);
  return p;
}

}  // namespace

SymmetryReport check_scalar_symmetry(const ScalarFn& f, const Space& sp, std::size_t n_samples,
                                     double tol, std::uint64_t seed) {
  Rng rng(seed);
  const auto gens = sample_generators(sp, rng);
  SymmetryReport rep;
  rep.worst_point = Point{std::vector<double>(sp.k1(), 0.0), std::vector<double>(sp.k2(), 0.0)};
  for (std::size_t s = 0; s < n_samples; ++s) {
    const Point p = random_point(sp, rng);
    const auto& g = gens[s % gens.size()];
    const double r = std::fabs(f(p) - f(sp.act(g, p)));
    if (r > rep.max_residual) {
      rep.max_residual = r;
      rep.worst_point = p;
    }
  }
  rep.passed = rep.max_residual <= tol;
  return rep;
}

SymmetryReport check_vector_symmetry(const VectorFn& f, const Space& sp, std::size_t n_samples,
                                     double tol, std::uint64_t seed) {
  Rng rng(seed);
  const auto gens = sample_generators(sp, rng);
  SymmetryReport rep;
  rep.worst_point = Point{std::vector<double>(sp.k1(), 0.0), std::vector<double>(sp.k2(), 0.0)};
  for (std::size_t s = 0; s < n_samples; ++s) {
    const Point p = random_point(sp, rng);
    const auto& g = gens[s % gens.size()];
    const VectorValue vp = f(p);
    const VectorValue vg = f(sp.act(g, p));
    const std::vector<double> hx = sp.holonomy(g.b).apply(vp.X);
    double r = 0.0;
    for (std::size_t i = 0; i < sp.k1(); ++i) r = std::max(r, std::fabs(hx[i] - vg.X[i]));
    for (std::size_t j = 0; j < sp.k2(); ++j) r = std::max(r, std::fabs(vp.Y[j] - vg.Y[j]));
    if (r > rep.max_residual) {
      rep.max_residual = r;
      rep.worst_point = p;
    }
  }
  rep.passed = rep.max_residual <= tol;
  return rep;
}

}  // namespace kf::fields
