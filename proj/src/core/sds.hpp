/**
 * \file sds.hpp
 * \brief Event-driven simulation of spiking dynamical systems.
 *
 * Nodes are excitable and refractory: a spike arriving at a ready node fires
 * it instantly, scheduling arrivals downstream after per-edge transit delays;
 * for delta time units after firing the node discards arrivals. The event
 * queue is ordered by (time, destination, edge id), which pins down the
 * behaviour for simultaneous arrivals and makes every run reproducible.
 */
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "core/errors.hpp"

namespace kf::sds {

struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  double transit = 0.0;
};

struct SpikeNet {
  std::size_t n = 0;
  std::vector<Edge> edges;
  double delta = 0.0;  // common refractory period
  std::uint64_t seed = 0;
  // Generation metadata, carried through output files.
  double density_requested = 0.0;
  double density_realized = 0.0;
  std::size_t diameter = 0;
  double transit_lo = 0.0;
  double transit_hi = 0.0;

  void validate() const;
};

struct GenerateParams {
  std::size_t n = 0;
  double density = 0.0;
  std::uint64_t seed = 0;
  std::size_t max_tries = 1000;
  double transit_lo = 0.5;
  double transit_hi = 1.5;
  double delta = 0.05;
};

/// Independent-edge random digraph, rejected and resampled until strongly
/// connected. Deterministic given the seed; realized density and directed
/// diameter are reported in the result.
SpikeNet generate_graph(const GenerateParams& params);

/// Per-node sorted firing times.
struct SpikeRecord {
  std::vector<std::vector<double>> firings;
};

struct Horizon {
  double max_time = std::numeric_limits<double>::infinity();
  long long max_spikes_at_observed = -1;  // <0: unbounded
};

SpikeRecord simulate(const SpikeNet& net, std::size_t kick_node, const Horizon& horizon,
                     std::size_t observe_node);

struct ISISequence {
  std::size_t node = 0;
  std::vector<double> intervals;
  std::size_t burn_in_discarded = 0;
};

ISISequence extract_isi(const SpikeRecord& record, std::size_t node, std::size_t burn_in_count);

/// Smallest p <= len/2 with |isi[k] - isi[k+p]| <= tol for every valid k in
/// the trailing half of the sequence (at least one comparison required).
std::optional<std::size_t> detect_period(const ISISequence& isi, double tol = 1e-9);

/// Strong connectivity of a digraph given as adjacency lists.
bool strongly_connected(std::size_t n, const std::vector<std::vector<std::size_t>>& adj);

}  // namespace kf::sds
