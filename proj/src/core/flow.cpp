#include "core/flow.hpp"

#include <cmath>

#include "core/parallel.hpp"

namespace kf::flow {

namespace {

struct State {
  std::vector<double> v;  // x then y, length k1+k2
};

State to_state(const Point& p) {
  State s;
  s.v = p.x;
  s.v.insert(s.v.end(), p.y.begin(), p.y.end());
  return s;
}

Point to_point(const State& s, std::size_t k1) {
  Point p;
  p.x.assign(s.v.begin(), s.v.begin() + static_cast<long>(k1));
  p.y.assign(s.v.begin() + static_cast<long>(k1), s.v.end());
  return p;
}

std::vector<double> eval_field(const VectorFn& field, const Space& sp, const State& s) {
  const Point p = to_point(s, sp.k1());
  const fields::VectorValue v = field(p);
  std::vector<double> out = v.X;
  out.insert(out.end(), v.Y.begin(), v.Y.end());
  for (double c : out)
    if (!std::isfinite(c))
      throw Error(errc::non_finite_field, "field evaluated to a non-finite value");
  return out;
}

}  // namespace

Trajectory integrate(const VectorFn& field, const Space& sp, const Point& seed_point, double step,
                     std::size_t n_steps) {
  if (!(step > 0.0)) throw Error(errc::invalid_argument, "step must be positive");
  const std::size_t n = sp.dim();

  Trajectory traj;
  traj.samples.reserve(n_steps + 1);
  State s = to_state(seed_point);

  auto push_sample = [&](double t, const State& st, const std::vector<double>& f) {
    Sample smp;
    smp.t = t;
    smp.lifted = to_point(st, sp.k1());
    smp.folded = sp.canonicalize(smp.lifted).first;
    double norm2 = 0.0;
    for (double c : f) norm2 += c * c;
    smp.speed = std::sqrt(norm2);
    traj.samples.push_back(std::move(smp));
  };

  std::vector<double> k1(n), k2(n), k3(n), k4(n);
  State tmp;
  tmp.v.resize(n);

  std::vector<double> f0 = eval_field(field, sp, s);
  push_sample(0.0, s, f0);

  for (std::size_t step_i = 0; step_i < n_steps; ++step_i) {
    k1 = f0;
    for (std::size_t i = 0; i < n; ++i) tmp.v[i] = s.v[i] + 0.5 * step * k1[i];
    k2 = eval_field(field, sp, tmp);
    for (std::size_t i = 0; i < n; ++i) tmp.v[i] = s.v[i] + 0.5 * step * k2[i];
    k3 = eval_field(field, sp, tmp);
    for (std::size_t i = 0; i < n; ++i) tmp.v[i] = s.v[i] + step * k3[i];
    k4 = eval_field(field, sp, tmp);
    for (std::size_t i = 0; i < n; ++i)
      s.v[i] += step / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    f0 = eval_field(field, sp, s);
    push_sample(step * static_cast<double>(step_i + 1), s, f0);
  }
  return traj;
}

std::vector<Trajectory> streamline_grid(const VectorFn& field, const Space& sp,
                                        std::size_t grid_density, double step,
                                        std::size_t n_steps) {
  if (grid_density == 0) throw Error(errc::invalid_argument, "grid density must be >= 1");
  const std::size_t dim = sp.dim();
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= grid_density;

  std::vector<Point> seeds(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Point p;
    p.x.resize(sp.k1());
    p.y.resize(sp.k2());
    std::size_t rem = idx;
    for (std::size_t d = 0; d < dim; ++d) {
      const double c = (static_cast<double>(rem % grid_density) + 0.5) /
                       static_cast<double>(grid_density);
      if (d < sp.k1())
        p.x[d] = c;
      else
        p.y[d - sp.k1()] = c;
      rem /= grid_density;
    }
    seeds[idx] = std::move(p);
  }

  std::vector<Trajectory> out(total);
  parallel_for(total, [&](std::size_t i) { out[i] = integrate(field, sp, seeds[i], step, n_steps); });
  return out;
}

}  // namespace kf::flow
