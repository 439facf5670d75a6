#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "p2ps/as_topology.hpp"
#include "p2ps/metrics.hpp"
#include "p2ps/selection.hpp"
#include "p2ps/streaming_model.hpp"

namespace p2ps {

/// How the home AS of each joining peer is drawn.
enum class JoinDistribution { Uniform, DegreeWeighted };

/// Parameters of one experiment run. The defaults are the desk-scale
/// reference setup: a 500-AS scale-free graph, ten 390-unit servers placed at
/// random, 4-unit streams, and 20,000 uniformly placed joins.
struct RunConfig {
  int as_count = 500;
  int ba_m = 2;               ///< attachments per new AS in the generator
  int oss_count = 10;
  int oss_capacity_units = 390;  ///< 100 Mbps server at 256 kbps per unit
  int stream_units = 4;          ///< 1 Mbps stream in 256 kbps units
  int hop_bound = 4;             ///< providers must have logical hop below this
  int peer_max_units = 20;       ///< peer capacity drawn uniformly from {1..this}
  Strategy strategy = Strategy::Mph;
  std::int64_t total_joins = 20000;
  int metric_stride = 1;  ///< record a sample every this many joins
  std::uint64_t seed = 1;
  JoinDistribution join_distribution = JoinDistribution::Uniform;
  LogicalHopRule hop_rule = LogicalHopRule::MaxProvider;

  /// Throws std::invalid_argument on out-of-range parameters.
  void validate() const;

  /// "mph_h4_mmax20_seed42" — used to name output files and plot legends.
  std::string label() const;
};

/// A run's config echo plus its ordered metric samples.
struct MetricsSeries {
  RunConfig config;
  std::vector<MetricsSample> samples;
};

/// Executes one experiment: generate the topology, place the servers, then
/// for each join draw the joining AS and peer capacity, run the strategy, and
/// commit or record the failure. A sample is recorded every metric_stride
/// joins (and always at the last join). Fully deterministic given the seed;
/// the topology, placement, and join sequence come from independent
/// sub-streams, so runs differing only in strategy face the same environment
/// and the same join sequence.
MetricsSeries run(const RunConfig& config);

/// Same, reusing a pre-built topology (must match config.as_count).
MetricsSeries run(const RunConfig& config,
                  std::shared_ptr<const AsTopology> topology);

/// One sweep member's outcome: the series, or the error that stopped it.
struct SweepOutcome {
  RunConfig config;
  std::optional<MetricsSeries> series;
  std::string error;
};

/// Runs every config, sharing identical topologies between runs and executing
/// independent runs in parallel. A failed member is reported in its outcome
/// without aborting the rest.
std::vector<SweepOutcome> sweep(std::span<const RunConfig> configs);

/// Trailing moving average of the congestion-degree series, one value per
/// sample (windows at the start are truncated). Samples with no congestion
/// value yet are skipped within the window; NaN if a window holds none.
std::vector<double> smoothed_congestion(const MetricsSeries& series,
                                        int window);

/// A peer already in the system when a scripted scenario starts.
struct SeededPeer {
  AsId home_as = 0;
  int capacity_units = 0;
  int logical_hop = 1;
};

/// One scripted join: where the peer appears and how much it can provide.
struct ScriptedJoin {
  AsId home_as = 0;
  int capacity_units = 0;
};

/// A fully pinned scenario: explicit topology, server placement, pre-joined
/// peers, and join sequence. Replaces every random draw of run() so a known
/// hand-worked example can be replayed exactly.
struct ScriptedScenario {
  int as_count = 0;
  std::vector<std::pair<AsId, AsId>> edges;
  std::vector<AsId> oss_ases;
  int oss_capacity_units = 0;
  std::vector<SeededPeer> seeded_peers;
  int stream_units = 1;
  int hop_bound = 2;
  LogicalHopRule hop_rule = LogicalHopRule::MaxProvider;
  std::vector<ScriptedJoin> joins;
};

/// Replays a scripted scenario under a strategy and returns the final state
/// (inspect its flow ledger and nodes). Failed joins are recorded on the
/// state's failure counter.
SystemState run_scripted(const ScriptedScenario& scenario, Strategy strategy);

}  // namespace p2ps
