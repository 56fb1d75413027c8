#include "core/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace kf::io {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(errc::parse_error, "malformed JSON");
  return j;
}

fields::TrigPoly parse_profile(const json& j) {
  fields::TrigPoly poly;
  if (!j.contains("terms") || !j["terms"].is_array())
    throw Error(errc::parse_error, "profile needs a terms array");
  for (const auto& t : j["terms"]) {
    fields::TrigTerm term;
    term.freq = t.value("freq", 0LL);
    term.cos_coeff = t.value("cos", 0.0);
    term.sin_coeff = t.value("sin", 0.0);
    poly.terms.push_back(term);
  }
  return poly;
}

fields::WaveTerm parse_wave(const json& j) {
  fields::WaveTerm w;
  if (!j.contains("lambda") || !j.contains("zeta"))
    throw Error(errc::parse_error, "wave term needs lambda and zeta");
  w.lambda = j["lambda"].get<std::vector<long long>>();
  w.zeta = j["zeta"].get<std::vector<long long>>();
  w.cos_coeff = j.value("cos", 0.0);
  w.sin_coeff = j.value("sin", 0.0);
  return w;
}

std::vector<std::vector<fields::WaveTerm>> parse_wave_lists(const json& j) {
  std::vector<std::vector<fields::WaveTerm>> out;
  for (const auto& comp : j) {
    std::vector<fields::WaveTerm> terms;
    for (const auto& t : comp) terms.push_back(parse_wave(t));
    out.push_back(std::move(terms));
  }
  return out;
}

}  // namespace

space::KleinSpec parse_space_spec(const std::string& json_text) {
  const json j = parse(json_text);
  space::KleinSpec spec;
  if (!j.contains("k1") || !j.contains("k2"))
    throw Error(errc::parse_error, "space spec needs k1 and k2");
  spec.k1 = j["k1"].get<std::size_t>();
  spec.k2 = j["k2"].get<std::size_t>();
  const std::string mode = j.value("mode", "diagonal");
  if (mode == "diagonal") {
    spec.mode = space::Mode::diagonal;
    if (spec.k2 > 0) {
      if (!j.contains("B")) throw Error(errc::parse_error, "diagonal mode needs B");
      spec.B = j["B"].get<std::vector<std::vector<int>>>();
    } else {
      spec.B.assign(spec.k1, {});
    }
  } else if (mode == "matrices") {
    spec.mode = space::Mode::matrices;
    if (!j.contains("M")) throw Error(errc::parse_error, "matrices mode needs M");
    for (const auto& mj : j["M"]) {
      const auto rows = mj.get<std::vector<std::vector<long long>>>();
      space::IMat m(rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size())
          throw Error(errc::parse_error, "M_j must be square");
        for (std::size_t c = 0; c < rows.size(); ++c) m.at(r, c) = rows[r][c];
      }
      spec.M.push_back(std::move(m));
    }
  } else {
    throw Error(errc::parse_error, "mode must be \"diagonal\" or \"matrices\"");
  }
  return spec;
}

std::string space_spec_to_json(const space::KleinSpec& spec) {
  json j;
  j["k1"] = spec.k1;
  j["k2"] = spec.k2;
  if (spec.mode == space::Mode::diagonal) {
    j["mode"] = "diagonal";
    j["B"] = spec.B;
  } else {
    j["mode"] = "matrices";
    json ms = json::array();
    for (const auto& m : spec.M) {
      json rows = json::array();
      for (std::size_t r = 0; r < m.n; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.n; ++c) row.push_back(m.at(r, c));
        rows.push_back(row);
      }
      ms.push_back(rows);
    }
    j["M"] = ms;
  }
  return j.dump(2);
}

FieldSpec parse_field_spec(const std::string& json_text) {
  const json j = parse(json_text);
  FieldSpec fs;
  const std::string kind = j.value("kind", "");
  if (kind == "scalar_ansatz") {
    fs.kind = FieldSpec::Kind::scalar_ansatz;
    for (const auto& p : j.at("profiles")) fs.scalar_ansatz.profiles.push_back(parse_profile(p));
  } else if (kind == "vector_ansatz") {
    fs.kind = FieldSpec::Kind::vector_ansatz;
    for (const auto& row : j.at("x_profiles")) {
      std::vector<fields::TrigPoly> r;
      for (const auto& p : row) r.push_back(parse_profile(p));
      fs.vector_ansatz.x_profiles.push_back(std::move(r));
    }
    for (const auto& row : j.at("y_profiles")) {
      std::vector<fields::TrigPoly> r;
      for (const auto& p : row) r.push_back(parse_profile(p));
      fs.vector_ansatz.y_profiles.push_back(std::move(r));
    }
  } else if (kind == "scalar_waves") {
    fs.kind = FieldSpec::Kind::scalar_waves;
    for (const auto& t : j.at("terms")) fs.scalar_waves.push_back(parse_wave(t));
  } else if (kind == "vector_waves") {
    fs.kind = FieldSpec::Kind::vector_waves;
    fs.x_waves = parse_wave_lists(j.at("X"));
    fs.y_waves = parse_wave_lists(j.at("Y"));
  } else {
    throw Error(errc::parse_error,
                "field kind must be scalar_ansatz, vector_ansatz, scalar_waves or vector_waves");
  }
  return fs;
}

fields::ScalarFn make_scalar(const space::Space& sp, const FieldSpec& fs) {
  switch (fs.kind) {
    case FieldSpec::Kind::scalar_ansatz:
      return fields::make_scalar_field(sp, fs.scalar_ansatz);
    case FieldSpec::Kind::scalar_waves:
      return fields::make_wave_scalar(fs.scalar_waves);
    default:
      throw Error(errc::invalid_argument, "field file does not define a scalar field");
  }
}

fields::VectorFn make_vector(const space::Space& sp, const FieldSpec& fs) {
  switch (fs.kind) {
    case FieldSpec::Kind::vector_ansatz:
      return fields::make_vector_field(sp, fs.vector_ansatz);
    case FieldSpec::Kind::vector_waves:
      return fields::make_wave_vector(fs.x_waves, fs.y_waves, sp.k1(), sp.k2());
    default:
      throw Error(errc::invalid_argument, "field file does not define a vector field");
  }
}

sds::SpikeNet parse_spike_net(const std::string& json_text) {
  const json j = parse(json_text);
  sds::SpikeNet net;
  net.n = j.at("n").get<std::size_t>();
  net.delta = j.at("delta").get<double>();
  net.seed = j.value("seed", 0ULL);
  net.density_requested = j.value("density_requested", 0.0);
  net.density_realized = j.value("density_realized", 0.0);
  net.diameter = j.value("diameter", 0ULL);
  net.transit_lo = j.value("transit_lo", 0.0);
  net.transit_hi = j.value("transit_hi", 0.0);
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw Error(errc::parse_error, "edge must be [src,dst,transit]");
    net.edges.push_back(sds::Edge{e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<double>()});
  }
  return net;
}

std::string spike_net_to_json(const sds::SpikeNet& net) {
  json j;
  j["n"] = net.n;
  j["delta"] = net.delta;
  j["seed"] = net.seed;
  j["density_requested"] = net.density_requested;
  j["density_realized"] = net.density_realized;
  j["diameter"] = net.diameter;
  j["transit_lo"] = net.transit_lo;
  j["transit_hi"] = net.transit_hi;
  json edges = json::array();
  for (const auto& e : net.edges) edges.push_back(json::array({e.src, e.dst, e.transit}));
  j["edges"] = edges;
  return j.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::io_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(errc::io_error, "cannot open " + path + " for writing");
  out << content;
  if (!out) throw Error(errc::io_error, "short write to " + path);
}

std::vector<double> read_csv_column(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<double> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(std::stod(line));
  }
  return out;
}

std::vector<std::vector<double>> read_csv_rows(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::vector<double>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace kf::io
