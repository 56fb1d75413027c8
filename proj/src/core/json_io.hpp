/**
 * \file json_io.hpp
 * \brief JSON schemas for spaces, fields and spike networks, plus CSV helpers.
 *
 * Schemas are documented in FORMATS.md at the repository root.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "core/fields.hpp"
#include "core/sds.hpp"
#include "core/space.hpp"

namespace kf::io {

space::KleinSpec parse_space_spec(const std::string& json_text);
std::string space_spec_to_json(const space::KleinSpec& spec);

/// Parsed field file: exactly one of the four kinds is populated.
struct FieldSpec {
  enum class Kind { scalar_ansatz, vector_ansatz, scalar_waves, vector_waves } kind;
  fields::ScalarAnsatz scalar_ansatz;
  fields::VectorAnsatz vector_ansatz;
  std::vector<fields::WaveTerm> scalar_waves;
  std::vector<std::vector<fields::WaveTerm>> x_waves;
  std::vector<std::vector<fields::WaveTerm>> y_waves;
  bool is_scalar() const { return kind == Kind::scalar_ansatz || kind == Kind::scalar_waves; }
};

FieldSpec parse_field_spec(const std::string& json_text);

fields::ScalarFn make_scalar(const space::Space& sp, const FieldSpec& fs);
fields::VectorFn make_vector(const space::Space& sp, const FieldSpec& fs);

sds::SpikeNet parse_spike_net(const std::string& json_text);
std::string spike_net_to_json(const sds::SpikeNet& net);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Reads one double per data line; lines starting with '#' are skipped.
std::vector<double> read_csv_column(const std::string& path);

/// Reads comma-separated doubles per data line; '#' lines are skipped.
std::vector<std::vector<double>> read_csv_rows(const std::string& path);

}  // namespace kf::io
