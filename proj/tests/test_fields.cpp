#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "core/fields.hpp"
#include "core/rng.hpp"

using namespace kf;
using fields::Point;
using fields::ScalarAnsatz;
using fields::TrigPoly;
using fields::VectorAnsatz;
using space::KleinSpec;
using space::Mode;
using space::Space;

namespace {

constexpr double kPi = std::numbers::pi;

Space make_space(std::size_t k1, std::size_t k2, std::vector<std::vector<int>> B) {
  KleinSpec s;
  s.k1 = k1;
  s.k2 = k2;
  s.mode = Mode::diagonal;
  s.B = std::move(B);
  return Space(std::move(s));
}

Space random_space(Rng& rng, std::size_t max_k = 4) {
  for (;;) {
    const std::size_t k1 = 1 + rng.below(max_k), k2 = 1 + rng.below(max_k);
    std::vector<std::vector<int>> B(k1, std::vector<int>(k2));
    for (auto& row : B)
      for (auto& v : row) v = rng.below(2) == 1;
    try {
      return make_space(k1, k2, std::move(B));
    } catch (const Error&) {
    }
  }
}

TrigPoly sin2pi() { return TrigPoly{{{1, 0.0, 1.0}}}; }
TrigPoly one() { return TrigPoly{{{0, 1.0, 0.0}}}; }

TrigPoly random_poly(Rng& rng) {
  TrigPoly p;
  const int nterms = 1 + static_cast<int>(rng.below(2));
  for (int t = 0; t < nterms; ++t)
    p.terms.push_back({static_cast<long long>(rng.below(3)), rng.uniform(-0.7, 0.7),
                       rng.uniform(-0.7, 0.7)});
  return p;
}

// Oracle for T1/T2: expand prod_{k: B_ik=1} (u_k + v_k) with u = (1+cos pi y)/2
// and v = -(1-cos pi y)/2 into 2^m signed terms; T1 sums the positive terms
// and -T2 the negative ones.
std::pair<double, double> expansion_oracle(const Space& sp, std::size_t i,
                                           const std::vector<double>& y) {
  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < sp.k2(); ++k)
    if (sp.spec().B[i][k]) active.push_back(k);
  double t1 = 0.0, t2 = 0.0;
  for (std::uint64_t bits = 0; bits < (1ULL << active.size()); ++bits) {
    double term = 1.0;
    int negatives = 0;
    for (std::size_t idx = 0; idx < active.size(); ++idx) {
      const double c = std::cos(kPi * y[active[idx]]);
      if ((bits >> idx) & 1) {
        term *= (1.0 - c) / 2.0;  // magnitude of the negative factor
        ++negatives;
      } else {
        term *= (1.0 + c) / 2.0;
      }
    }
    if (negatives % 2 == 0)
      t1 += term;
    else
      t2 += term;
  }
  return {t1, t2};
}

}  // namespace

TEST_CASE("switching: spec examples") {
  const Space k11 = make_space(1, 1, {{1}});
  auto s0 = fields::switching(k11, 0, {0.0});
  CHECK(s0.t1 == doctest::Approx(1.0));
  CHECK(s0.t2 == doctest::Approx(0.0));
  CHECK(s0.s == doctest::Approx(1.0));

  auto s1 = fields::switching(k11, 0, {1.0});
  CHECK(s1.t1 == doctest::Approx(0.0));
  CHECK(s1.t2 == doctest::Approx(1.0));
  CHECK(s1.s == doctest::Approx(-1.0));

  const Space k12 = make_space(1, 2, {{1, 1}});
  auto s2 = fields::switching(k12, 0, {0.5, 0.5});
  CHECK(s2.t1 == doctest::Approx(0.5));
  CHECK(s2.t2 == doctest::Approx(0.5));
  CHECK(s2.s == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("switching identities at 1e4 random y") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Space sp = random_space(rng);
    for (int t = 0; t < 500; ++t) {
      std::vector<double> y(sp.k2());
      for (auto& v : y) v = rng.uniform(-4.0, 4.0);
      for (std::size_t i = 0; i < sp.k1(); ++i) {
        const auto sw = fields::switching(sp, i, y);
        CHECK(std::fabs(sw.t1 + sw.t2 - 1.0) <= 1e-12);
        CHECK(std::fabs(sw.t1 - sw.t2 - sw.s) <= 1e-12);
        CHECK(sw.t1 >= -1e-15);
        CHECK(sw.t2 >= -1e-15);
      }
    }
  }
}

TEST_CASE("exchange law: unit increments of y_k swap or fix the pair") {
  Rng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const Space sp = random_space(rng);
    for (int t = 0; t < 100; ++t) {
      std::vector<double> y(sp.k2());
      for (auto& v : y) v = rng.uniform(-2.0, 2.0);
      for (std::size_t i = 0; i < sp.k1(); ++i) {
        const auto base = fields::switching(sp, i, y);
        for (std::size_t k = 0; k < sp.k2(); ++k) {
          auto y2 = y;
          y2[k] += 1.0;
          const auto inc = fields::switching(sp, i, y2);
          if (sp.spec().B[i][k]) {
            CHECK(std::fabs(inc.t1 - base.t2) <= 1e-12);
            CHECK(std::fabs(inc.t2 - base.t1) <= 1e-12);
          } else {
            CHECK(std::fabs(inc.t1 - base.t1) <= 1e-12);
            CHECK(std::fabs(inc.t2 - base.t2) <= 1e-12);
          }
        }
      }
    }
  }
}

TEST_CASE("closed form matches the symbolic expansion oracle for k2 <= 3") {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Space sp = random_space(rng, 3);
    for (int t = 0; t < 100; ++t) {
      std::vector<double> y(sp.k2());
      for (auto& v : y) v = rng.uniform(-3.0, 3.0);
      for (std::size_t i = 0; i < sp.k1(); ++i) {
        const auto sw = fields::switching(sp, i, y);
        const auto [t1, t2] = expansion_oracle(sp, i, y);
        CHECK(std::fabs(sw.t1 - t1) <= 1e-12);
        CHECK(std::fabs(sw.t2 - t2) <= 1e-12);
      }
    }
  }
}

TEST_CASE("scalar ansatz: spec examples") {
  const Space k11 = make_space(1, 1, {{1}});
  ScalarAnsatz a{{sin2pi()}};

  // at y = 0 the ansatz reduces to the product of profiles
  CHECK(a.eval(k11, Point{{0.25}, {0.0}}) == doctest::Approx(1.0));
  CHECK(a.eval(k11, Point{{0.125}, {0.0}}) == doctest::Approx(std::sin(kPi / 4.0)));

  // hand value: F(0.25, 1) = T1(1) f(0.25) + T2(1) f(0.75) = 0*1 + 1*(-1) = -1
  CHECK(a.eval(k11, Point{{0.25}, {1.0}}) == doctest::Approx(-1.0));

  // constant profiles give the constant field
  Rng rng(2);
  const Space sp = random_space(rng);
  ScalarAnsatz ones{std::vector<TrigPoly>(sp.k1(), one())};
  for (int t = 0; t < 50; ++t) {
    Point p;
    p.x.resize(sp.k1());
    p.y.resize(sp.k2());
    for (auto& v : p.x) v = rng.uniform(-2.0, 2.0);
    for (auto& v : p.y) v = rng.uniform(-2.0, 2.0);
    CHECK(ones.eval(sp, p) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("vector ansatz: spec examples") {
  const Space k11 = make_space(1, 1, {{1}});
  VectorAnsatz va;
  va.x_profiles = {{sin2pi()}};
  va.y_profiles = {{one()}};

  std::vector<double> X, Y;
  // y = 0: X_i reduces to f_{i,i}(x_i)
  va.eval(k11, Point{{0.25}, {0.0}}, X, Y);
  CHECK(X[0] == doctest::Approx(1.0));
  CHECK(Y[0] == doctest::Approx(1.0));

  // hand value: X(0.25, 1) = T1(1) sin(pi/2) - T2(1) sin(3pi/2) = 0 - (-1) = 1
  va.eval(k11, Point{{0.25}, {1.0}}, X, Y);
  CHECK(X[0] == doctest::Approx(1.0));
  CHECK(Y[0] == doctest::Approx(1.0));
}

TEST_CASE("ansatz fields pass their symmetry checks; counterexamples fail") {
  Rng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const Space sp = random_space(rng);

    ScalarAnsatz sa;
    for (std::size_t i = 0; i < sp.k1(); ++i) sa.profiles.push_back(random_poly(rng));
    const auto f = fields::make_scalar_field(sp, sa);
    const auto rep = fields::check_scalar_symmetry(f, sp, 1000, 1e-10, rng.fork_seed());
    CHECK(rep.passed);

    VectorAnsatz va;
    va.x_profiles.resize(sp.k1());
    va.y_profiles.resize(sp.k2());
    for (auto& row : va.x_profiles)
      for (std::size_t j = 0; j < sp.k1(); ++j) row.push_back(random_poly(rng));
    for (auto& row : va.y_profiles)
      for (std::size_t j = 0; j < sp.k1(); ++j) row.push_back(random_poly(rng));
    const auto v = fields::make_vector_field(sp, va);
    const auto vrep = fields::check_vector_symmetry(v, sp, 1000, 1e-10, rng.fork_seed());
    CHECK(vrep.passed);
  }

  const Space k11 = make_space(1, 1, {{1}});
  // F(x,y) = x is not symmetric: the flip generator exposes it
  const auto bad = fields::check_scalar_symmetry([](const Point& p) { return p.x[0]; }, k11, 500,
                                                 1e-10, 4);
  CHECK_FALSE(bad.passed);
  CHECK(bad.max_residual > 0.1);

  // constants always pass
  const auto konst = fields::check_scalar_symmetry([](const Point&) { return 3.25; }, k11, 500,
                                                   1e-10, 4);
  CHECK(konst.passed);
  CHECK(konst.max_residual == 0.0);

  // a nonzero constant X component violates the frame condition
  const auto badv = fields::check_vector_symmetry(
      [](const Point&) {
        return fields::VectorValue{{1.0}, {0.0}};
      },
      k11, 500, 1e-10, 4);
  CHECK_FALSE(badv.passed);
}

TEST_CASE("Klein bottle vector field built from Fourier modes passes the check") {
  // u =  cos(2 pi x) cos(pi y) + sin(2 pi x) sin(2 pi y)
  // v =  sin(2 pi x) sin(pi y) + cos(2 pi x) cos(2 pi y)
  const Space k11 = make_space(1, 1, {{1}});
  const auto field = [](const Point& p) {
    const double x = p.x[0], y = p.y[0];
    fields::VectorValue out;
    out.X = {std::cos(2 * kPi * x) * std::cos(kPi * y) +
             std::sin(2 * kPi * x) * std::sin(2 * kPi * y)};
    out.Y = {std::sin(2 * kPi * x) * std::sin(kPi * y) +
             std::cos(2 * kPi * x) * std::cos(2 * kPi * y)};
    return out;
  };
  const auto rep = fields::check_vector_symmetry(field, k11, 2000, 1e-10, 9);
  CHECK(rep.passed);
}

TEST_CASE("wave fields evaluate the advertised closed form") {
  fields::WaveTerm t;
  t.lambda = {1};
  t.zeta = {1};
  t.cos_coeff = 0.5;
  t.sin_coeff = -2.0;
  const auto f = fields::make_wave_scalar({t});
  const Point p{{0.3}, {0.4}};
  const double th = 2 * kPi * 0.3 + kPi * 0.4;
  CHECK(f(p) == doctest::Approx(0.5 * std::cos(th) - 2.0 * std::sin(th)));
}
