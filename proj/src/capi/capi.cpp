/*
 * extern "C" surface over the kleinforge core. Exceptions are mapped to
 * status codes at this boundary; messages land in a thread-local slot.
 */
#include "kleinforge/kleinforge.h"

#include <charconv>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "json.hpp"

#include "core/errors.hpp"
#include "core/fields.hpp"
#include "core/flow.hpp"
#include "core/harmonics.hpp"
#include "core/json_io.hpp"
#include "core/parallel.hpp"
#include "core/sds.hpp"
#include "core/space.hpp"
#include "core/svg.hpp"
#include "core/tda.hpp"

using nlohmann::json;

namespace {

thread_local std::string g_last_error = "ok";

kf_status map_code(kf::errc c) {
  switch (c) {
    case kf::errc::invalid_argument:
      return KF_ERROR_INVALID_ARGUMENT;
    case kf::errc::io_error:
      return KF_ERROR_IO;
    case kf::errc::mode_unsupported:
      return KF_ERROR_UNSUPPORTED;
    case kf::errc::generation_exhausted:
    case kf::errc::non_finite_field:
      return KF_ERROR_RUNTIME;
    default:
      return KF_ERROR_VALIDATION;
  }
}

template <typename Fn>
kf_status wrap(Fn&& fn) {
  try {
    fn();
    return KF_OK;
  } catch (const kf::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KF_ERROR_RUNTIME;
  } catch (...) {
    g_last_error = "unknown error";
    return KF_ERROR_RUNTIME;
  }
}

kf_status fail_arg(const char* msg) {
  g_last_error = msg;
  return KF_ERROR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string fmt(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, p);
}

}  // namespace

struct kf_space {
  std::shared_ptr<kf::space::Space> sp;
};

struct kf_field {
  std::shared_ptr<kf::space::Space> sp;
  bool scalar = false;
  kf::fields::ScalarFn scalar_fn;
  kf::fields::VectorFn vector_fn;
};

extern "C" {

const char* kf_version(void) { return "0.1.0"; }

const char* kf_last_error(void) { return g_last_error.c_str(); }

void kf_string_free(char* s) { std::free(s); }

void kf_set_threads(int n) { kf::set_thread_cap(n); }

/* ---- spaces ------------------------------------------------------------ */

kf_status kf_space_parse(const char* json_text, kf_space** out) {
  if (!json_text || !out) return fail_arg("null argument");
  return wrap([&] {
    auto spec = kf::io::parse_space_spec(json_text);
    auto handle = std::make_unique<kf_space>();
    handle->sp = std::make_shared<kf::space::Space>(std::move(spec));
    *out = handle.release();
  });
}

void kf_space_free(kf_space* sp) { delete sp; }

int kf_space_k1(const kf_space* sp) { return sp ? static_cast<int>(sp->sp->k1()) : -1; }
int kf_space_k2(const kf_space* sp) { return sp ? static_cast<int>(sp->sp->k2()) : -1; }

kf_status kf_space_info(const kf_space* sp, char** out_json) {
  if (!sp || !out_json) return fail_arg("null argument");
  return wrap([&] {
    const auto& s = *sp->sp;
    json j;
    j["k1"] = s.k1();
    j["k2"] = s.k2();
    j["mode"] = s.mode() == kf::space::Mode::diagonal ? "diagonal" : "matrices";
    if (s.mode() == kf::space::Mode::diagonal) {
      const auto& dec = s.b_decomposition();
      j["rank_B"] = dec.rank;
      j["kernel_dim"] = dec.kernel_basis.size();
      j["image_basis_columns"] = dec.image_basis_columns;
      const auto tori = s.hidden_tori();
      j["hidden_tori"]["duplicate_column_classes"] = tori.duplicate_column_classes;
      j["hidden_tori"]["gf2_rank_deficiency"] = tori.gf2_rank_deficiency;
    }
    *out_json = dup_string(j.dump(2));
  });
}

kf_status kf_space_generators(const kf_space* sp, char** out_json) {
  if (!sp || !out_json) return fail_arg("null argument");
  return wrap([&] {
    json arr = json::array();
    for (const auto& rel : sp->sp->reduced_generators()) {
      json r;
      switch (rel.kind) {
        case kf::space::RelationKind::toroidal: r["kind"] = "toroidal"; break;
        case kf::space::RelationKind::klein_double: r["kind"] = "klein_double"; break;
        case kf::space::RelationKind::kernel_shift: r["kind"] = "kernel_shift"; break;
        case kf::space::RelationKind::flip: r["kind"] = "flip"; break;
      }
      r["a"] = rel.g.a;
      r["b"] = rel.g.b;
      r["text"] = rel.text;
      arr.push_back(std::move(r));
    }
    json j;
    j["generators"] = std::move(arr);
    *out_json = dup_string(j.dump(2));
  });
}

namespace {

kf::space::Point to_point(const kf::space::Space& s, const double* flat) {
  kf::space::Point p;
  p.x.assign(flat, flat + s.k1());
  p.y.assign(flat + s.k1(), flat + s.dim());
  return p;
}

void from_point(const kf::space::Point& p, double* flat) {
  std::size_t i = 0;
  for (double v : p.x) flat[i++] = v;
  for (double v : p.y) flat[i++] = v;
}

}  // namespace

kf_status kf_space_canonicalize(const kf_space* sp, const double* point, double* canonical,
                                long long* group_a, long long* group_b) {
  if (!sp || !point || !canonical) return fail_arg("null argument");
  return wrap([&] {
    const auto [canon, g] = sp->sp->canonicalize(to_point(*sp->sp, point));
    from_point(canon, canonical);
    if (group_a)
      for (std::size_t i = 0; i < g.a.size(); ++i) group_a[i] = g.a[i];
    if (group_b)
      for (std::size_t j = 0; j < g.b.size(); ++j) group_b[j] = g.b[j];
  });
}

kf_status kf_space_act(const kf_space* sp, const long long* a, const long long* b,
                       const double* point, double* out) {
  if (!sp || !a || !b || !point || !out) return fail_arg("null argument");
  return wrap([&] {
    kf::space::GroupElement g;
    g.a.assign(a, a + sp->sp->k1());
    g.b.assign(b, b + sp->sp->k2());
    from_point(sp->sp->act(g, to_point(*sp->sp, point)), out);
  });
}

kf_status kf_space_equivalent(const kf_space* sp, const double* p, const double* q, double tol,
                              int* out) {
  if (!sp || !p || !q || !out) return fail_arg("null argument");
  return wrap([&] {
    *out = sp->sp->equivalent(to_point(*sp->sp, p), to_point(*sp->sp, q), tol) ? 1 : 0;
  });
}

/* ---- fields ------------------------------------------------------------ */

kf_status kf_field_parse(const kf_space* sp, const char* json_text, kf_field** out) {
  if (!sp || !json_text || !out) return fail_arg("null argument");
  return wrap([&] {
    const auto fs = kf::io::parse_field_spec(json_text);
    auto handle = std::make_unique<kf_field>();
    handle->sp = sp->sp;
    handle->scalar = fs.is_scalar();
    if (handle->scalar)
      handle->scalar_fn = kf::io::make_scalar(*handle->sp, fs);
    else
      handle->vector_fn = kf::io::make_vector(*handle->sp, fs);
    *out = handle.release();
  });
}

void kf_field_free(kf_field* f) { delete f; }

int kf_field_is_scalar(const kf_field* f) { return f ? (f->scalar ? 1 : 0) : -1; }

kf_status kf_field_eval_scalar(const kf_field* f, const double* point, double* out) {
  if (!f || !point || !out) return fail_arg("null argument");
  if (!f->scalar) return fail_arg("field is vector-valued");
  return wrap([&] { *out = f->scalar_fn(to_point(*f->sp, point)); });
}

kf_status kf_field_eval_vector(const kf_field* f, const double* point, double* out) {
  if (!f || !point || !out) return fail_arg("null argument");
  if (f->scalar) return fail_arg("field is scalar-valued");
  return wrap([&] {
    const auto v = f->vector_fn(to_point(*f->sp, point));
    std::size_t i = 0;
    for (double c : v.X) out[i++] = c;
    for (double c : v.Y) out[i++] = c;
  });
}

kf_status kf_field_check_symmetry(const kf_field* f, size_t n_samples, double tol, uint64_t seed,
                                  double* max_residual, int* passed) {
  if (!f || !max_residual || !passed) return fail_arg("null argument");
  return wrap([&] {
    const auto rep = f->scalar
                         ? kf::fields::check_scalar_symmetry(f->scalar_fn, *f->sp, n_samples, tol, seed)
                         : kf::fields::check_vector_symmetry(f->vector_fn, *f->sp, n_samples, tol, seed);
    *max_residual = rep.max_residual;
    *passed = rep.passed ? 1 : 0;
  });
}

namespace {

/* Row-major lattice of (grid)^dim cell centres over [0,1)^dim. */
void for_grid(const kf::space::Space& s, std::size_t grid,
              const std::function<void(const kf::space::Point&, const std::vector<std::size_t>&)>& fn) {
  const std::size_t dim = s.dim();
  std::size_t total = 1;
  for (std::size_t d = 0; d < dim; ++d) total *= grid;
  std::vector<std::size_t> idx(dim, 0);
  for (std::size_t t = 0; t < total; ++t) {
    kf::space::Point p;
    p.x.resize(s.k1());
    p.y.resize(s.k2());
    std::size_t rem = t;
    for (std::size_t d = 0; d < dim; ++d) {
      idx[d] = rem % grid;
      rem /= grid;
      const double c = (static_cast<double>(idx[d]) + 0.5) / static_cast<double>(grid);
      if (d < s.k1())
        p.x[d] = c;
      else
        p.y[d - s.k1()] = c;
    }
    fn(p, idx);
  }
}

std::string grid_header(const kf::space::Space& s) {
  std::string h = "# columns:";
  for (std::size_t i = 0; i < s.k1(); ++i) h += " x" + std::to_string(i + 1) + ",";
  for (std::size_t j = 0; j < s.k2(); ++j) h += " y" + std::to_string(j + 1) + ",";
  return h;
}

}  // namespace

kf_status kf_field_sample_scalar(const kf_field* f, size_t grid, const char* csv_path,
                                 const char* svg_path, const char* header_comment) {
  if (!f || !csv_path || grid == 0) return fail_arg("bad arguments");
  if (!f->scalar) return fail_arg("field is vector-valued");
  return wrap([&] {
    const auto& s = *f->sp;
    std::ostringstream csv;
    if (header_comment) csv << "# " << header_comment << "\n";
    csv << grid_header(s) << " value\n";
    std::vector<std::vector<double>> cells;
    if (s.dim() == 2) cells.assign(grid, std::vector<double>(grid, 0.0));
    for_grid(s, grid, [&](const kf::space::Point& p, const std::vector<std::size_t>& idx) {
      const double v = f->scalar_fn(p);
      for (double c : p.x) csv << fmt(c) << ",";
      for (double c : p.y) csv << fmt(c) << ",";
      csv << fmt(v) << "\n";
      if (s.dim() == 2) cells[idx[1]][idx[0]] = v;
    });
    kf::io::write_file(csv_path, csv.str());
    if (svg_path) {
      if (s.dim() != 2)
        throw kf::Error(kf::errc::invalid_argument, "SVG heatmaps need k1 + k2 == 2");
      kf::io::write_file(svg_path, kf::svg::heatmap(cells));
    }
  });
}

kf_status kf_field_sample_vector(const kf_field* f, size_t grid, const char* csv_path,
                                 const char* header_comment) {
  if (!f || !csv_path || grid == 0) return fail_arg("bad arguments");
  if (f->scalar) return fail_arg("field is scalar-valued");
  return wrap([&] {
    const auto& s = *f->sp;
    std::ostringstream csv;
    if (header_comment) csv << "# " << header_comment << "\n";
    csv << grid_header(s);
    for (std::size_t i = 0; i < s.k1(); ++i) csv << " X" << (i + 1) << ",";
    for (std::size_t j = 0; j < s.k2(); ++j) csv << " Y" << (j + 1) << (j + 1 < s.k2() ? "," : "");
    csv << "\n";
    for_grid(s, grid, [&](const kf::space::Point& p, const std::vector<std::size_t>&) {
      const auto v = f->vector_fn(p);
      for (double c : p.x) csv << fmt(c) << ",";
      for (double c : p.y) csv << fmt(c) << ",";
      for (std::size_t i = 0; i < v.X.size(); ++i) csv << fmt(v.X[i]) << ",";
      for (std::size_t j = 0; j < v.Y.size(); ++j)
        csv << fmt(v.Y[j]) << (j + 1 < v.Y.size() ? "," : "");
      csv << "\n";
    });
    kf::io::write_file(csv_path, csv.str());
  });
}

/* ---- harmonics ---------------------------------------------------------- */

namespace {

json block_to_json(const kf::harmonics::FourierBlock& b, bool with_op) {
  json jb;
  jb["zeta"] = b.zeta;
  jb["orbit"] = b.orbit;
  jb["complete"] = b.complete;
  if (with_op && b.complete) {
    json op = json::array();
    for (const auto& row : b.op) {
      json r = json::array();
      for (const auto& v : row) r.push_back(v.str());
      op.push_back(std::move(r));
    }
    jb["operator"] = std::move(op);
    json ker = json::array();
    for (const auto& v : b.kernel) {
      json r = json::array();
      for (const auto& c : v) r.push_back(c.str());
      ker.push_back(std::move(r));
    }
    jb["kernel"] = std::move(ker);
  }
  return jb;
}

json scalar_functions_json(const kf::space::Space& s,
                           const std::vector<kf::harmonics::RealBasisFunction>& fns) {
  json arr = json::array();
  for (const auto& f : fns) {
    json jf;
    jf["form"] = f.is_sin ? "sin" : "cos";
    json terms = json::array();
    for (const auto& [m, c] : f.terms) {
      json t;
      t["lambda"] = m.lambda;
      t["zeta"] = m.zeta;
      t["coeff"] = c.str();
      terms.push_back(std::move(t));
    }
    jf["terms"] = std::move(terms);
    jf["trig"] = f.trig_string(s.k1(), s.k2());
    arr.push_back(std::move(jf));
  }
  return arr;
}

}  // namespace

kf_status kf_harmonics_basis(const kf_space* sp, const char* kind, long long lmax, long long zmax,
                             char** out_json) {
  if (!sp || !kind || !out_json) return fail_arg("null argument");
  return wrap([&] {
    const std::string k(kind);
    if (k != "scalar" && k != "vector")
      throw kf::Error(kf::errc::invalid_argument, "kind must be \"scalar\" or \"vector\"");
    if (lmax < 0 || zmax < 0) throw kf::Error(kf::errc::invalid_argument, "lmax/zmax must be >= 0");
    const auto& s = *sp->sp;

    auto scalar_blocks = kf::harmonics::orbit_blocks(s, lmax, kf::harmonics::zeta_box(s, zmax));
    for (auto& b : scalar_blocks)
      if (b.complete) kf::harmonics::scalar_kernel_basis(s, b);

    json j;
    j["kind"] = k;
    j["lmax"] = lmax;
    j["zmax"] = zmax;
    j["k1"] = s.k1();
    j["k2"] = s.k2();

    if (k == "scalar") {
      json blocks = json::array();
      for (const auto& b : scalar_blocks) blocks.push_back(block_to_json(b, true));
      j["blocks"] = std::move(blocks);
      j["functions"] = scalar_functions_json(s, kf::harmonics::realize_scalar(s, scalar_blocks));
    } else {
      auto vec_blocks = kf::harmonics::orbit_blocks(s, lmax, kf::harmonics::zeta_box(s, zmax));
      for (auto& b : vec_blocks)
        if (b.complete) kf::harmonics::vector_kernel_basis(s, b);
      json xb = json::array();
      for (const auto& b : vec_blocks) xb.push_back(block_to_json(b, true));
      j["x_blocks"] = std::move(xb);
      json xf = json::array();
      for (const auto& f : kf::harmonics::realize_vector_x(s, vec_blocks)) {
        json jf;
        jf["form"] = f.is_sin ? "sin" : "cos";
        json comps = json::array();
        for (const auto& comp : f.components) {
          json terms = json::array();
          for (const auto& [m, c] : comp) {
            json t;
            t["lambda"] = m.lambda;
            t["zeta"] = m.zeta;
            t["coeff"] = c.str();
            terms.push_back(std::move(t));
          }
          comps.push_back(std::move(terms));
        }
        jf["components"] = std::move(comps);
        xf.push_back(std::move(jf));
      }
      j["x_functions"] = std::move(xf);
      // Each Y coordinate independently satisfies the scalar condition.
      j["y_functions"] = scalar_functions_json(s, kf::harmonics::realize_scalar(s, scalar_blocks));
    }
    *out_json = dup_string(j.dump(2));
  });
}

/* ---- flow ---------------------------------------------------------------- */

kf_status kf_flow_streamlines(const kf_field* f, size_t grid, double step, size_t steps,
                              size_t stride, const char* csv_path, const char* header_comment) {
  if (!f || !csv_path || grid == 0 || stride == 0) return fail_arg("bad arguments");
  if (f->scalar) return fail_arg("streamlines need a vector field");
  return wrap([&] {
    const auto& s = *f->sp;
    const auto pre = kf::fields::check_vector_symmetry(f->vector_fn, s, 200, 1e-8, 20240u);
    if (!pre.passed)
      throw kf::Error(kf::errc::invalid_argument,
                      "field fails the vector symmetry precondition (residual " +
                          std::to_string(pre.max_residual) + ")");
    const auto trajs = kf::flow::streamline_grid(f->vector_fn, s, grid, step, steps);
    std::ostringstream csv;
    if (header_comment) csv << "# " << header_comment << "\n";
    csv << "# columns: traj, t,";
    for (std::size_t i = 0; i < s.k1(); ++i) csv << " x" << (i + 1) << ",";
    for (std::size_t j = 0; j < s.k2(); ++j) csv << " y" << (j + 1) << ",";
    csv << " speed\n";
    for (std::size_t ti = 0; ti < trajs.size(); ++ti) {
      const auto& samples = trajs[ti].samples;
      for (std::size_t k = 0; k < samples.size(); k += stride) {
        const auto& smp = samples[k];
        csv << ti << "," << fmt(smp.t) << ",";
        for (double c : smp.folded.x) csv << fmt(c) << ",";
        for (double c : smp.folded.y) csv << fmt(c) << ",";
        csv << fmt(smp.speed) << "\n";
      }
    }
    kf::io::write_file(csv_path, csv.str());
  });
}

/* ---- spiking networks ---------------------------------------------------- */

kf_status kf_sds_generate(size_t nodes, double density, double delta, double transit_lo,
                          double transit_hi, uint64_t seed, size_t max_tries, char** out_json) {
  if (!out_json) return fail_arg("null argument");
  return wrap([&] {
    kf::sds::GenerateParams params;
    params.n = nodes;
    params.density = density;
    params.delta = delta;
    params.transit_lo = transit_lo;
    params.transit_hi = transit_hi;
    params.seed = seed;
    params.max_tries = max_tries == 0 ? 1000 : max_tries;
    *out_json = dup_string(kf::io::spike_net_to_json(kf::sds::generate_graph(params)));
  });
}

kf_status kf_sds_run(const char* graph_json, size_t kick, size_t observe, double max_time,
                     long long max_spikes, const char* spikes_csv_path,
                     const char* header_comment) {
  if (!graph_json || !spikes_csv_path) return fail_arg("null argument");
  return wrap([&] {
    const auto net = kf::io::parse_spike_net(graph_json);
    kf::sds::Horizon horizon;
    if (max_time > 0.0) horizon.max_time = max_time;
    horizon.max_spikes_at_observed = max_spikes;
    const auto record = kf::sds::simulate(net, kick, horizon, observe);

    // Merge per-node firing lists into global time order for the CSV.
    std::vector<std::pair<double, std::size_t>> events;
    for (std::size_t v = 0; v < record.firings.size(); ++v)
      for (double t : record.firings[v]) events.emplace_back(t, v);
    std::sort(events.begin(), events.end());

    std::ostringstream csv;
    if (header_comment) csv << "# " << header_comment << "\n";
    csv << "# columns: node, time\n";
    for (const auto& [t, v] : events) csv << v << "," << fmt(t) << "\n";
    kf::io::write_file(spikes_csv_path, csv.str());
  });
}

kf_status kf_sds_isi(const char* spikes_csv_path, size_t node, size_t burn_in,
                     const char* isi_csv_path, const char* header_comment, size_t* n_intervals) {
  if (!spikes_csv_path || !isi_csv_path) return fail_arg("null argument");
  return wrap([&] {
    kf::sds::SpikeRecord record;
    record.firings.resize(node + 1);
    for (const auto& row : kf::io::read_csv_rows(spikes_csv_path)) {
      if (row.size() != 2) throw kf::Error(kf::errc::parse_error, "spikes CSV needs node,time rows");
      const auto v = static_cast<std::size_t>(row[0]);
      if (v >= record.firings.size()) record.firings.resize(v + 1);
      record.firings[v].push_back(row[1]);
    }
    for (auto& times : record.firings) std::sort(times.begin(), times.end());
    const auto isi = kf::sds::extract_isi(record, node, burn_in);
    std::ostringstream csv;
    if (header_comment) csv << "# " << header_comment << "\n";
    for (double v : isi.intervals) csv << fmt(v) << "\n";
    kf::io::write_file(isi_csv_path, csv.str());
    if (n_intervals) *n_intervals = isi.intervals.size();
  });
}

/* ---- ISI embedding and topology ------------------------------------------ */

kf_status kf_tda_embed(const char* isi_csv_path, size_t window, double dedup_tol,
                       const char* cloud_csv_path, const char* header_comment,
                       size_t* out_points) {
  if (!isi_csv_path || !cloud_csv_path) return fail_arg("null argument");
  return wrap([&] {
    const auto seq = kf::io::read_csv_column(isi_csv_path);
    const auto cloud = kf::tda::window_embed(seq, window, dedup_tol);
    std::ostringstream csv;
    if (header_comment) csv << "# " << header_comment << "\n";
    for (const auto& p : cloud.points) {
      for (std::size_t i = 0; i < p.size(); ++i) csv << fmt(p[i]) << (i + 1 < p.size() ? "," : "");
      csv << "\n";
    }
    kf::io::write_file(cloud_csv_path, csv.str());
    if (out_points) *out_points = cloud.points.size();
  });
}

namespace {

kf::tda::DimMethod parse_method(const char* method) {
  const std::string m = method ? method : "mle";
  if (m == "mle") return kf::tda::DimMethod::mle;
  if (m == "cdf") return kf::tda::DimMethod::cdf_fit;
  throw kf::Error(kf::errc::invalid_argument, "method must be \"mle\" or \"cdf\"");
}

}  // namespace

kf_status kf_tda_dim2nn(const double* points, size_t n, size_t dim, double discard,
                        const char* method, double* d_hat, size_t* n_used) {
  if (!points || !d_hat) return fail_arg("null argument");
  return wrap([&] {
    kf::tda::PointCloud cloud;
    cloud.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      cloud.points.emplace_back(points + i * dim, points + (i + 1) * dim);
    const auto est = kf::tda::dim_2nn(cloud, discard, parse_method(method));
    *d_hat = est.d_hat;
    if (n_used) *n_used = est.n_used;
  });
}

kf_status kf_tda_dim2nn_file(const char* cloud_csv_path, double discard, const char* method,
                             double* d_hat, size_t* n_used) {
  if (!cloud_csv_path || !d_hat) return fail_arg("null argument");
  return wrap([&] {
    kf::tda::PointCloud cloud;
    cloud.points = kf::io::read_csv_rows(cloud_csv_path);
    const auto est = kf::tda::dim_2nn(cloud, discard, parse_method(method));
    *d_hat = est.d_hat;
    if (n_used) *n_used = est.n_used;
  });
}

kf_status kf_tda_rips_file(const char* cloud_csv_path, double r_max, long long max_points,
                           char** out_csv) {
  if (!cloud_csv_path || !out_csv) return fail_arg("null argument");
  return wrap([&] {
    kf::tda::PointCloud cloud;
    cloud.points = kf::io::read_csv_rows(cloud_csv_path);
    const std::size_t cap = max_points > 0 ? static_cast<std::size_t>(max_points) : 400;
    const auto diagrams = kf::tda::rips_persistence(cloud, r_max, 1, cap);
    std::ostringstream csv;
    csv << "# columns: degree, birth, death\n";
    for (const auto& dgm : diagrams)
      for (const auto& pair : dgm.pairs) {
        csv << dgm.degree << "," << fmt(pair.birth) << ",";
        if (pair.essential())
          csv << "inf\n";
        else
          csv << fmt(pair.death) << "\n";
      }
    *out_csv = dup_string(csv.str());
  });
}

kf_status kf_tda_profile(const char* isi_csv_path, size_t w_min, size_t w_max, double dedup_tol,
                         double discard, char** out_csv) {
  if (!isi_csv_path || !out_csv) return fail_arg("null argument");
  return wrap([&] {
    const auto seq = kf::io::read_csv_column(isi_csv_path);
    const auto rows = kf::tda::dimension_profile(seq, w_min, w_max, dedup_tol, discard);
    std::ostringstream csv;
    csv << "# columns: window, d_hat, n_points\n";
    for (const auto& r : rows)
      csv << r.window << "," << fmt(r.d_hat) << "," << r.n_points << "\n";
    *out_csv = dup_string(csv.str());
  });
}

}  // extern "C"
