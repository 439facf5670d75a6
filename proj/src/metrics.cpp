#include "p2ps/metrics.hpp"

#include <set>

namespace p2ps {

std::optional<double> congestion_degree(const AsTopology& topology,
                                        std::span<const Node> nodes,
                                        std::span<const Flow> flows) {
  // Unit counts and hop counts are small integers, so both sums are exact.
  std::int64_t weighted = 0;
  std::int64_t total = 0;
  for (const Flow& flow : flows) {
    const int hop =
        topology.hop(nodes[flow.provider].home_as, nodes[flow.receiver].home_as);
    weighted += static_cast<std::int64_t>(flow.units) * hop;
    total += flow.units;
  }
  if (total == 0) return std::nullopt;
  return static_cast<double>(weighted) / static_cast<double>(total);
}

std::optional<double> congestion_degree(const SystemState& state) {
  return congestion_degree(state.topology(), state.nodes(), state.flows());
}

MetricsSample diagnostics(const AsTopology& topology,
                          std::span<const Node> nodes,
                          std::span<const Flow> flows,
                          std::int64_t join_failures,
                          std::int64_t joins_so_far) {
  MetricsSample sample;
  sample.joins_so_far = joins_so_far;
  sample.join_failures = join_failures;
  sample.congestion_degree = congestion_degree(topology, nodes, flows);

  std::int64_t intra_units = 0;
  std::int64_t total_units = 0;
  for (const Flow& flow : flows) {
    total_units += flow.units;
    if (nodes[flow.provider].home_as == nodes[flow.receiver].home_as)
      intra_units += flow.units;
  }
  sample.intra_as_traffic_fraction =
      total_units > 0 ? static_cast<double>(intra_units) /
                            static_cast<double>(total_units)
                      : 0.0;

  std::set<AsId> top_level_ases;
  for (const Node& node : nodes) {
    if (node.is_oss()) continue;
    ++sample.logical_hop_histogram[node.logical_hop];
    if (node.logical_hop == 1) top_level_ases.insert(node.home_as);
  }
  sample.top_level_peer_as_count = static_cast<int>(top_level_ases.size());
  return sample;
}

MetricsSample diagnostics(const SystemState& state, std::int64_t joins_so_far) {
  return diagnostics(state.topology(), state.nodes(), state.flows(),
                     state.join_failures(), joins_so_far);
}

}  // namespace p2ps
