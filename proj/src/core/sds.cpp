#include "core/sds.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "core/rng.hpp"

namespace kf::sds {

void SpikeNet::validate() const {
  if (n < 2) throw Error(errc::invalid_argument, "need at least 2 nodes");
  if (!(delta > 0.0)) throw Error(errc::invalid_argument, "refractory period must be positive");
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : edges) {
    if (e.src >= n || e.dst >= n) throw Error(errc::invalid_argument, "edge endpoint out of range");
    if (e.src == e.dst) throw Error(errc::invalid_argument, "self-loops are not allowed");
    if (!(e.transit > 0.0)) throw Error(errc::invalid_argument, "transit times must be positive");
    adj[e.src].push_back(e.dst);
  }
  if (!strongly_connected(n, adj))
    throw Error(errc::invalid_argument, "graph must be strongly connected");
}

bool strongly_connected(std::size_t n, const std::vector<std::vector<std::size_t>>& adj) {
  auto reach_all = [n](const std::vector<std::vector<std::size_t>>& g) {
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u : g[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
    }
    return count == n;
  };
  if (!reach_all(adj)) return false;
  std::vector<std::vector<std::size_t>> rev(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u : adj[v]) rev[u].push_back(v);
  return reach_all(rev);
}

namespace {

std::size_t directed_diameter(std::size_t n, const std::vector<std::vector<std::size_t>>& adj) {
  std::size_t diameter = 0;
  std::vector<long long> dist(n);
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t v = queue[head];
      for (std::size_t u : adj[v])
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
    }
    for (long long d : dist) diameter = std::max(diameter, static_cast<std::size_t>(d));
  }
  return diameter;
}

}  // namespace

SpikeNet generate_graph(const GenerateParams& params) {
  if (params.n < 2) throw Error(errc::invalid_argument, "need at least 2 nodes");
  if (!(params.density > 0.0 && params.density < 1.0) && params.density != 1.0)
    throw Error(errc::invalid_argument, "density must lie in (0, 1]");

  SplitMix64 seeder(params.seed);
  Rng topology_rng(seeder.next());
  Rng transit_rng(seeder.next());

  const std::size_t n = params.n;
  for (std::size_t attempt = 0; attempt < params.max_tries; ++attempt) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (topology_rng.uniform() < params.density) pairs.emplace_back(i, j);
      }
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [i, j] : pairs) adj[i].push_back(j);
    if (!strongly_connected(n, adj)) continue;

    SpikeNet net;
    net.n = n;
    net.delta = params.delta;
    net.seed = params.seed;
    net.density_requested = params.density;
    net.density_realized =
        static_cast<double>(pairs.size()) / static_cast<double>(n * (n - 1));
    net.diameter = directed_diameter(n, adj);
    net.transit_lo = params.transit_lo;
    net.transit_hi = params.transit_hi;
    net.edges.reserve(pairs.size());
    for (const auto& [i, j] : pairs)
      net.edges.push_back(Edge{i, j, transit_rng.uniform(params.transit_lo, params.transit_hi)});
    return net;
  }
  throw Error(errc::generation_exhausted,
              "no strongly connected sample after " + std::to_string(params.max_tries) + " tries");
}

SpikeRecord simulate(const SpikeNet& net, std::size_t kick_node, const Horizon& horizon,
                     std::size_t observe_node) {
  net.validate();
  if (kick_node >= net.n || observe_node >= net.n)
    throw Error(errc::invalid_argument, "node index out of range");

  std::vector<std::vector<std::size_t>> out_edges(net.n);
  for (std::size_t e = 0; e < net.edges.size(); ++e) out_edges[net.edges[e].src].push_back(e);

  struct Arrival {
    double t;
    std::size_t dst;
    std::size_t edge;
    bool operator>(const Arrival& o) const {
      if (t != o.t) return t > o.t;
      if (dst != o.dst) return dst > o.dst;
      return edge > o.edge;
    }
  };
  std::priority_queue<Arrival, std::vector<Arrival>, std::greater<Arrival>> queue;

  SpikeRecord record;
  record.firings.resize(net.n);
  std::vector<double> next_ready(net.n, 0.0);
  long long observed = 0;

  auto fire = [&](std::size_t node, double t) {
    record.firings[node].push_back(t);
    next_ready[node] = t + net.delta;
    if (node == observe_node) ++observed;
    for (std::size_t e : out_edges[node])
      queue.push(Arrival{t + net.edges[e].transit, net.edges[e].dst, e});
  };

  fire(kick_node, 0.0);
  while (!queue.empty()) {
    if (horizon.max_spikes_at_observed >= 0 && observed >= horizon.max_spikes_at_observed) break;
    const Arrival a = queue.top();
    if (a.t > horizon.max_time) break;
    queue.pop();
    // Refractory window [t_fire, t_fire + delta) is half-open: an arrival at
    // exactly next_ready fires.
    if (a.t >= next_ready[a.dst]) fire(a.dst, a.t);
  }
  return record;
}

ISISequence extract_isi(const SpikeRecord& record, std::size_t node, std::size_t burn_in_count) {
  if (node >= record.firings.size()) throw Error(errc::invalid_argument, "node out of range");
  const auto& times = record.firings[node];
  if (times.size() < burn_in_count + 2)
    throw Error(errc::insufficient_spikes,
                "node fired " + std::to_string(times.size()) + " times, need at least " +
                    std::to_string(burn_in_count + 2));
  ISISequence seq;
  seq.node = node;
  seq.burn_in_discarded = burn_in_count;
  seq.intervals.reserve(times.size() - 1 - burn_in_count);
  for (std::size_t i = burn_in_count + 1; i < times.size(); ++i)
    seq.intervals.push_back(times[i] - times[i - 1]);
  return seq;
}

std::optional<std::size_t> detect_period(const ISISequence& isi, double tol) {
  const std::size_t len = isi.intervals.size();
  if (len < 4) throw Error(errc::invalid_argument, "need at least 4 intervals");
  const std::size_t start = len - len / 2;  // trailing half
  for (std::size_t p = 1; p <= len / 2; ++p) {
    bool any = false, ok = true;
    for (std::size_t k = start; k + p < len; ++k) {
      any = true;
      if (std::abs(isi.intervals[k] - isi.intervals[k + p]) > tol) {
        ok = false;
        break;
      }
    }
    if (any && ok) return p;
  }
  return std::nullopt;
}

}  // namespace kf::sds
