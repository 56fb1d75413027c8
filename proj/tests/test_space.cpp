#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "core/rng.hpp"
#include "core/space.hpp"

using namespace kf;
using space::GroupElement;
using space::IMat;
using space::KleinSpec;
using space::Mode;
using space::Point;
using space::Space;

namespace {

KleinSpec diagonal_spec(std::size_t k1, std::size_t k2, std::vector<std::vector<int>> B) {
  KleinSpec s;
  s.k1 = k1;
  s.k2 = k2;
  s.mode = Mode::diagonal;
  s.B = std::move(B);
  return s;
}

Space standard_klein() { return Space(diagonal_spec(1, 1, {{1}})); }

IMat swap2() {
  IMat m(2);
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  return m;
}

Point random_point(const Space& sp, Rng& rng) {
  Point p;
  p.x.resize(sp.k1());
  p.y.resize(sp.k2());
  for (auto& v : p.x) v = rng.uniform(-3.0, 4.0);
  for (auto& v : p.y) v = rng.uniform(-3.0, 4.0);
  return p;
}

GroupElement random_element(const Space& sp, Rng& rng) {
  GroupElement g;
  g.a.resize(sp.k1());
  g.b.resize(sp.k2());
  for (auto& v : g.a) v = rng.range(-3, 3);
  for (auto& v : g.b) v = rng.range(-3, 3);
  return g;
}

double point_dist(const Point& p, const Point& q) {
  double m = 0.0;
  for (std::size_t i = 0; i < p.x.size(); ++i) m = std::max(m, std::fabs(p.x[i] - q.x[i]));
  for (std::size_t j = 0; j < p.y.size(); ++j) m = std::max(m, std::fabs(p.y[j] - q.y[j]));
  return m;
}

Space random_diagonal_space(Rng& rng, std::size_t max_k = 4) {
  for (;;) {
    const std::size_t k1 = 1 + rng.below(max_k), k2 = 1 + rng.below(max_k);
    std::vector<std::vector<int>> B(k1, std::vector<int>(k2, 0));
    for (auto& row : B)
      for (auto& v : row) v = rng.below(2) == 1;
    try {
      return Space(diagonal_spec(k1, k2, std::move(B)));
    } catch (const Error&) {
      continue;
    }
  }
}

}  // namespace

TEST_CASE("validation accepts the standard Klein bottle and the swap example") {
  CHECK_NOTHROW(standard_klein());

  KleinSpec flip;
  flip.k1 = 2;
  flip.k2 = 1;
  flip.mode = Mode::matrices;
  flip.M = {swap2()};
  CHECK_NOTHROW(Space(std::move(flip)));
}

TEST_CASE("validation rejects marooned coordinates and product factorisations") {
  CHECK_THROWS_WITH_AS(Space(diagonal_spec(2, 2, {{1, 0}, {0, 1}})),
                       doctest::Contains("DisconnectedBipartite"), Error);
  CHECK_THROWS_WITH_AS(Space(diagonal_spec(2, 1, {{1}, {0}})),
                       doctest::Contains("ZeroRowOrColumn"), Error);
  CHECK_THROWS_WITH_AS(Space(diagonal_spec(1, 2, {{1, 0}})),
                       doctest::Contains("ZeroRowOrColumn"), Error);
}

TEST_CASE("matrices mode rejects non-involutive and non-commuting generators") {
  KleinSpec bad;
  bad.k1 = 2;
  bad.k2 = 1;
  bad.mode = Mode::matrices;
  IMat shift(2);  // [[1,1],[0,1]]: det 1 but not involutive
  shift.at(0, 0) = shift.at(0, 1) = shift.at(1, 1) = 1;
  bad.M = {shift};
  CHECK_THROWS_WITH_AS(Space(std::move(bad)), doctest::Contains("NonInvolutive"), Error);

  KleinSpec bad2;
  bad2.k1 = 2;
  bad2.k2 = 2;
  bad2.mode = Mode::matrices;
  IMat d1(2);
  d1.at(0, 0) = -1;
  d1.at(1, 1) = 1;
  bad2.M = {swap2(), d1};  // swap and diag(-1,1) do not commute
  CHECK_THROWS_WITH_AS(Space(std::move(bad2)), doctest::Contains("NonCommuting"), Error);
}

TEST_CASE("holonomy values") {
  const Space k11 = standard_klein();
  CHECK(k11.holonomy({1}).at(0, 0) == -1);
  CHECK(k11.holonomy({2}).at(0, 0) == 1);

  const Space sp(diagonal_spec(2, 2, {{1, 1}, {1, 1}}));
  const IMat h = sp.holonomy({1, 0});
  CHECK(h.at(0, 0) == -1);
  CHECK(h.at(1, 1) == -1);
  CHECK(h.at(0, 1) == 0);
}

TEST_CASE("holonomy is a homomorphism and squares to the identity") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Space sp = random_diagonal_space(rng, 3);
    for (long long b0 = -3; b0 <= 3; ++b0)
      for (long long b1 = -3; b1 <= 3; ++b1) {
        std::vector<long long> b(sp.k2(), 0);
        b[0] = b0;
        if (sp.k2() > 1) b[1] = b1;
        const IMat h = sp.holonomy(b);
        CHECK(h.mul(h) == IMat::identity(sp.k1()));
        std::vector<long long> b2(b);
        for (auto& v : b2) v *= 2;
        CHECK(sp.holonomy(b2) == IMat::identity(sp.k1()));
      }
  }
}

TEST_CASE("compose: K(1,1) twisted product and group axioms") {
  const Space sp = standard_klein();
  // (a', 1) <> (a, 0) = (-a + a', 1)
  const GroupElement g = sp.compose(GroupElement{{5}, {1}}, GroupElement{{3}, {0}});
  CHECK(g.a[0] == 2);
  CHECK(g.b[0] == 1);

  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const GroupElement e = sp.identity();
    const GroupElement x = random_element(sp, rng);
    const GroupElement y = random_element(sp, rng);
    const GroupElement z = random_element(sp, rng);
    CHECK(sp.compose(e, x).a == x.a);
    CHECK(sp.compose(x, e).b == x.b);
    const GroupElement inv = sp.inverse(x);
    CHECK(sp.compose(x, inv).a == e.a);
    CHECK(sp.compose(inv, x).b == e.b);
    const GroupElement left = sp.compose(sp.compose(x, y), z);
    const GroupElement right = sp.compose(x, sp.compose(y, z));
    CHECK(left.a == right.a);
    CHECK(left.b == right.b);
  }
}

TEST_CASE("act: spec examples") {
  const Space sp = standard_klein();
  const Point p = sp.act(GroupElement{{0}, {1}}, Point{{0.3}, {0.0}});
  CHECK(p.x[0] == doctest::Approx(-0.3));
  CHECK(p.y[0] == doctest::Approx(1.0));

  // pure toroidal translation
  const Point q = sp.act(GroupElement{{2}, {0}}, Point{{0.3}, {0.7}});
  CHECK(q.x[0] == doctest::Approx(2.3));
  CHECK(q.y[0] == doctest::Approx(0.7));

  // swap automorphism: (0,0,1).(x1,x2,y) = (x2, x1, y+1)
  KleinSpec flip;
  flip.k1 = 2;
  flip.k2 = 1;
  flip.mode = Mode::matrices;
  flip.M = {swap2()};
  const Space fs(std::move(flip));
  const Point r = fs.act(GroupElement{{0, 0}, {1}}, Point{{0.2, 0.9}, {0.4}});
  CHECK(r.x[0] == doctest::Approx(0.9));
  CHECK(r.x[1] == doctest::Approx(0.2));
  CHECK(r.y[0] == doctest::Approx(1.4));
}

TEST_CASE("action law holds exactly for random elements and points") {
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const Space sp = random_diagonal_space(rng);
    for (int t = 0; t < 100; ++t) {
      const GroupElement g1 = random_element(sp, rng);
      const GroupElement g2 = random_element(sp, rng);
      const Point p = random_point(sp, rng);
      const Point lhs = sp.act(g1, sp.act(g2, p));
      const Point rhs = sp.act(sp.compose(g1, g2), p);
      CHECK(point_dist(lhs, rhs) < 1e-12);
    }
  }
}

TEST_CASE("canonicalize: spec examples") {
  const Space sp = standard_klein();
  const auto [c1, g1] = sp.canonicalize(Point{{0.3}, {1.2}});
  CHECK(c1.x[0] == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(c1.y[0] == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(point_dist(sp.act(g1, c1), Point{{0.3}, {1.2}}) < 1e-12);

  const auto [c2, g2] = sp.canonicalize(Point{{0.25}, {0.5}});
  CHECK(c2.x[0] == doctest::Approx(0.25));
  CHECK(g2.a[0] == 0);
  CHECK(g2.b[0] == 0);

  // hidden torus on K(1,2,(1,1)): a double Klein step leaves x alone
  const Space sp12(diagonal_spec(1, 2, {{1, 1}}));
  const auto [c3, g3] = sp12.canonicalize(Point{{0.3}, {1.1, 1.1}});
  CHECK(c3.x[0] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(c3.y[0] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(c3.y[1] == doctest::Approx(0.1).epsilon(1e-12));
  (void)g3;
}

TEST_CASE("canonicalize is idempotent and orbit-constant") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Space sp = random_diagonal_space(rng);
    for (int t = 0; t < 100; ++t) {
      const Point p = random_point(sp, rng);
      const auto [c, g] = sp.canonicalize(p);
      for (double v : c.x) {
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
      }
      for (double v : c.y) {
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
      }
      CHECK(point_dist(sp.act(g, c), p) < 1e-12);
      CHECK(point_dist(sp.canonicalize(c).first, c) < 1e-12);

      const GroupElement h = random_element(sp, rng);
      CHECK(point_dist(sp.canonicalize(sp.act(h, p)).first, c) < 1e-12);
    }
  }
}

TEST_CASE("equivalent: spec examples") {
  const Space sp = standard_klein();
  CHECK(sp.equivalent(Point{{0.3}, {0.2}}, Point{{0.7}, {1.2}}, 1e-9));
  CHECK(sp.equivalent(Point{{0.3}, {0.2}}, Point{{0.3}, {0.2}}, 1e-9));
  CHECK_FALSE(sp.equivalent(Point{{0.3}, {0.2}}, Point{{0.4}, {0.2}}, 1e-9));
}

TEST_CASE("reduced generators: family counts and spec examples") {
  // Full coupling with k1 = 1: chained kernel generators plus one flip.
  const Space full(diagonal_spec(1, 4, {{1, 1, 1, 1}}));
  const auto rels = full.reduced_generators();
  std::size_t toroidal = 0, doubles = 0, kernels = 0, flips = 0;
  for (const auto& r : rels) {
    switch (r.kind) {
      case space::RelationKind::toroidal: ++toroidal; break;
      case space::RelationKind::klein_double: ++doubles; break;
      case space::RelationKind::kernel_shift: ++kernels; break;
      case space::RelationKind::flip: ++flips; break;
    }
  }
  CHECK(toroidal == 1);
  CHECK(doubles == 4);
  CHECK(kernels == 3);
  CHECK(flips == 1);
  // chained pairs e_i + e_{i+1}
  std::size_t chain = 0;
  for (const auto& r : rels)
    if (r.kind == space::RelationKind::kernel_shift) {
      REQUIRE(chain < 3);
      std::vector<long long> expect(4, 0);
      expect[chain] = expect[chain + 1] = 1;
      CHECK(r.g.b == expect);
      ++chain;
    }

  // Injective B: no kernel generators, k2 flips.
  const Space tri(diagonal_spec(3, 2, {{1, 0}, {0, 1}, {1, 1}}));
  std::size_t ker2 = 0, flips2 = 0;
  for (const auto& r : tri.reduced_generators()) {
    ker2 += r.kind == space::RelationKind::kernel_shift;
    flips2 += r.kind == space::RelationKind::flip;
  }
  CHECK(ker2 == 0);
  CHECK(flips2 == 2);

  // B = [[1,0,1],[0,1,1]]: single kernel generator (1,1,1).
  const Space mix(diagonal_spec(2, 3, {{1, 0, 1}, {0, 1, 1}}));
  std::vector<std::vector<long long>> kgs;
  for (const auto& r : mix.reduced_generators())
    if (r.kind == space::RelationKind::kernel_shift) kgs.push_back(r.g.b);
  REQUIRE(kgs.size() == 1);
  CHECK(kgs[0] == std::vector<long long>{1, 1, 1});
}

TEST_CASE("every reduced generator holds under equivalent at random points") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Space sp = random_diagonal_space(rng);
    const auto rels = sp.reduced_generators();
    for (int t = 0; t < 20; ++t) {
      const Point p = random_point(sp, rng);
      for (const auto& r : rels) CHECK(sp.equivalent(p, sp.act(r.g, p), 1e-9));
    }
  }
}

TEST_CASE("hidden tori: spec examples and the pair relation") {
  const Space ones(diagonal_spec(1, 5, {{1, 1, 1, 1, 1}}));
  const auto rep = ones.hidden_tori();
  REQUIRE(rep.duplicate_column_classes.size() == 1);
  CHECK(rep.duplicate_column_classes[0].size() == 5);
  CHECK(rep.gf2_rank_deficiency == 4);

  const Space tri(diagonal_spec(3, 2, {{1, 0}, {0, 1}, {1, 1}}));
  CHECK(tri.hidden_tori().duplicate_column_classes.empty());
  CHECK(tri.hidden_tori().gf2_rank_deficiency == 0);

  const Space two(diagonal_spec(2, 2, {{1, 1}, {1, 1}}));
  CHECK(two.hidden_tori().gf2_rank_deficiency == 1);

  // (x, y + e_i + e_j) ~ (x, y) for duplicate columns i, j
  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    Point p;
    p.x = {rng.uniform(-2.0, 2.0)};
    p.y.resize(5);
    for (auto& v : p.y) v = rng.uniform(-2.0, 2.0);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) {
        auto g = ones.identity();
        g.b[i] = 1;
        g.b[j] = 1;
        CHECK(ones.equivalent(p, ones.act(g, p), 1e-9));
      }
  }
}

TEST_CASE("torus degenerate case k2 = 0") {
  const Space torus(diagonal_spec(2, 0, {{}, {}}));
  CHECK(torus.k2() == 0);
  const auto [c, g] = torus.canonicalize(Point{{1.25, -0.5}, {}});
  CHECK(c.x[0] == doctest::Approx(0.25));
  CHECK(c.x[1] == doctest::Approx(0.5));
  (void)g;
}
