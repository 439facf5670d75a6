#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>

#include "p2ps/streaming_model.hpp"

namespace p2ps {

/// Metrics recorded after a join. congestion_degree is absent (not 0, not 1)
/// while no flow exists.
struct MetricsSample {
  std::int64_t joins_so_far = 0;
  std::optional<double> congestion_degree;
  double intra_as_traffic_fraction = 0.0;  ///< unit-weighted share with hop 1
  int top_level_peer_as_count = 0;  ///< ASes holding a logical-hop-1 peer
  std::int64_t join_failures = 0;
  std::map<int, std::int64_t> logical_hop_histogram;  ///< peers only
};

/// Congestion degree: total traffic weighted by physical hop count divided by
/// total traffic. The unit rate cancels, so it is computed over unit counts.
/// All flows inside one AS give exactly 1, the ideal floor. Absent when the
/// ledger is empty.
std::optional<double> congestion_degree(const AsTopology& topology,
                                        std::span<const Node> nodes,
                                        std::span<const Flow> flows);
std::optional<double> congestion_degree(const SystemState& state);

/// Full diagnostic sweep over a state snapshot. Read-only; callable
/// concurrently.
MetricsSample diagnostics(const AsTopology& topology,
                          std::span<const Node> nodes,
                          std::span<const Flow> flows,
                          std::int64_t join_failures,
                          std::int64_t joins_so_far);
MetricsSample diagnostics(const SystemState& state, std::int64_t joins_so_far);

}  // namespace p2ps
