/**
 * \file errors.hpp
 * \brief Error codes and the exception type thrown across the library.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace kf {

enum class errc {
  ok = 0,
  invalid_argument,
  parse_error,
  io_error,
  // klein_space
  zero_row_or_column,
  disconnected_bipartite,
  non_commuting,
  non_involutive,
  mode_unsupported,
  // harmonics
  conjugate_not_in_box,
  incomplete_orbit,
  // flow
  non_finite_field,
  // sds
  generation_exhausted,
  insufficient_spikes,
  // tda
  sequence_too_short,
  degenerate_cloud,
  cloud_too_large,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::ok: return "Ok";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    case errc::zero_row_or_column: return "ZeroRowOrColumn";
    case errc::disconnected_bipartite: return "DisconnectedBipartite";
    case errc::non_commuting: return "NonCommuting";
    case errc::non_involutive: return "NonInvolutive";
    case errc::mode_unsupported: return "ModeUnsupported";
    case errc::conjugate_not_in_box: return "ConjugateNotInBox";
    case errc::incomplete_orbit: return "IncompleteOrbit";
    case errc::non_finite_field: return "NonFiniteField";
    case errc::generation_exhausted: return "GenerationExhausted";
    case errc::insufficient_spikes: return "InsufficientSpikes";
    case errc::sequence_too_short: return "SequenceTooShort";
    case errc::degenerate_cloud: return "DegenerateCloud";
    case errc::cloud_too_large: return "CloudTooLarge";
  }
  return "Unknown";
}

}  // namespace kf
