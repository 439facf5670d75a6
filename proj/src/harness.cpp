#include "p2ps/harness.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "p2ps/rng.hpp"

namespace p2ps {

namespace {

/// Draws the home AS of the next joining peer.
class JoinAsSampler {
 public:
  JoinAsSampler(const AsTopology& topology, JoinDistribution distribution)
      : as_count_(topology.as_count()), distribution_(distribution) {
    if (distribution_ == JoinDistribution::DegreeWeighted) {
      cumulative_degree_.reserve(as_count_);
      std::int64_t sum = 0;
      for (AsId as = 0; as < as_count_; ++as) {
        sum += topology.degree(as);
        cumulative_degree_.push_back(sum);
      }
    }
  }

  AsId draw(std::mt19937_64& rng) const {
    if (distribution_ == JoinDistribution::Uniform)
      return static_cast<AsId>(uniform_below(rng, as_count_));
    const auto r = static_cast<std::int64_t>(uniform_below(
        rng, static_cast<std::uint64_t>(cumulative_degree_.back())));
    const auto it = std::upper_bound(cumulative_degree_.begin(),
                                     cumulative_degree_.end(), r);
    return static_cast<AsId>(it - cumulative_degree_.begin());
  }

 private:
  int as_count_;
  JoinDistribution distribution_;
  std::vector<std::int64_t> cumulative_degree_;
};

/// Per-join metric accumulators. They track exactly what a full diagnostics()
/// pass over the state would report, at O(1) cost per join instead of a scan
/// of the whole ledger; the equivalence is pinned by tests.
class RunningMetrics {
 public:
  explicit RunningMetrics(int as_count) : top_level_peers_by_as_(as_count, 0) {}

  void on_join(const SystemState& state, NodeId peer,
               std::span<const Allocation> allocations) {
    const auto nodes = state.nodes();
    const AsId joining_as = nodes[peer].home_as;
    for (const Allocation& a : allocations) {
      const int hop = state.topology().hop(nodes[a.provider].home_as, joining_as);
      weighted_units_ += static_cast<std::int64_t>(a.units) * hop;
      total_units_ += a.units;
      if (hop == 1) intra_units_ += a.units;
    }
    const int logical_hop = nodes[peer].logical_hop;
    if (logical_hop >= static_cast<int>(histogram_.size()))
      histogram_.resize(logical_hop + 1, 0);
    ++histogram_[logical_hop];
    if (logical_hop == 1 && top_level_peers_by_as_[joining_as]++ == 0)
      ++top_level_as_count_;
  }

  MetricsSample sample(std::int64_t joins_so_far,
                       std::int64_t join_failures) const {
    MetricsSample s;
    s.joins_so_far = joins_so_far;
    s.join_failures = join_failures;
    if (total_units_ > 0) {
      s.congestion_degree = static_cast<double>(weighted_units_) /
                            static_cast<double>(total_units_);
      s.intra_as_traffic_fraction = static_cast<double>(intra_units_) /
                                    static_cast<double>(total_units_);
    }
    s.top_level_peer_as_count = top_level_as_count_;
    for (std::size_t hop = 0; hop < histogram_.size(); ++hop)
      if (histogram_[hop] > 0)
        s.logical_hop_histogram[static_cast<int>(hop)] = histogram_[hop];
    return s;
  }

 private:
  std::int64_t weighted_units_ = 0;
  std::int64_t total_units_ = 0;
  std::int64_t intra_units_ = 0;
  std::vector<std::int64_t> histogram_;
  std::vector<std::int64_t> top_level_peers_by_as_;
  int top_level_as_count_ = 0;
};

}  // namespace

void RunConfig::validate() const {
  if (ba_m < 1) throw std::invalid_argument("ba_m must be at least 1");
  if (as_count <= ba_m)
    throw std::invalid_argument("as_count must exceed ba_m");
  if (oss_count < 1 || oss_count > as_count)
    throw std::invalid_argument("oss_count must be in [1, as_count]");
  if (oss_capacity_units < 0)
    throw std::invalid_argument("oss_capacity_units must be non-negative");
  if (stream_units < 1)
    throw std::invalid_argument("stream_units must be positive");
  if (hop_bound < 2) throw std::invalid_argument("hop_bound must be at least 2");
  if (peer_max_units < 1)
    throw std::invalid_argument("peer_max_units must be positive");
  if (total_joins < 1)
    throw std::invalid_argument("total_joins must be positive");
  if (metric_stride < 1)
    throw std::invalid_argument("metric_stride must be positive");
}

std::string RunConfig::label() const {
  std::ostringstream out;
  out << strategy_name(strategy) << "_h" << hop_bound << "_mmax"
      << peer_max_units << "_seed" << seed;
  return out.str();
}

MetricsSeries run(const RunConfig& config) {
  return run(config, nullptr);
}

MetricsSeries run(const RunConfig& config,
                  std::shared_ptr<const AsTopology> topology) {
  config.validate();
  if (!topology) {
    topology = std::make_shared<const AsTopology>(generate_ba_topology(
        config.as_count, config.ba_m,
        derive_seed(config.seed, SeedStream::Topology)));
  } else if (topology->as_count() != config.as_count) {
    throw std::invalid_argument("shared topology does not match as_count");
  }

  SystemState state(topology, config.oss_count, config.oss_capacity_units,
                    config.stream_units, config.hop_bound,
                    derive_seed(config.seed, SeedStream::Placement),
                    config.hop_rule);

  std::mt19937_64 join_rng(derive_seed(config.seed, SeedStream::Joins));
  const JoinAsSampler sampler(*topology, config.join_distribution);
  RunningMetrics metrics(config.as_count);

  MetricsSeries series;
  series.config = config;
  series.samples.reserve(static_cast<std::size_t>(
      config.total_joins / config.metric_stride + 1));

  for (std::int64_t join = 1; join <= config.total_joins; ++join) {
    // Both draws happen before selection so that runs differing only in
    // strategy see the identical join sequence.
    const AsId joining_as = sampler.draw(join_rng);
    const int capacity = uniform_int(join_rng, 1, config.peer_max_units);

    if (const auto allocations = select(config.strategy, state, joining_as)) {
      const NodeId peer = state.commit_join(joining_as, *allocations, capacity);
      metrics.on_join(state, peer, *allocations);
    } else {
      state.record_failure();
    }

    if (join % config.metric_stride == 0 || join == config.total_joins)
      series.samples.push_back(metrics.sample(join, state.join_failures()));
  }
  return series;
}

std::vector<SweepOutcome> sweep(std::span<const RunConfig> configs) {
  if (configs.empty()) throw std::invalid_argument("sweep needs at least one config");

  // Pre-build each distinct topology once; runs sharing (as_count, ba_m, seed)
  // then see the identical AS graph.
  std::map<std::tuple<int, int, std::uint64_t>,
           std::shared_ptr<const AsTopology>>
      topologies;
  for (const RunConfig& config : configs) {
    config.validate();
    const auto key = std::make_tuple(
        config.as_count, config.ba_m,
        derive_seed(config.seed, SeedStream::Topology));
    auto& slot = topologies[key];
    if (!slot)
      slot = std::make_shared<const AsTopology>(generate_ba_topology(
          config.as_count, config.ba_m, std::get<2>(key)));
  }

  std::vector<std::future<SweepOutcome>> futures;
  futures.reserve(configs.size());
  for (const RunConfig& config : configs) {
    const auto key = std::make_tuple(
        config.as_count, config.ba_m,
        derive_seed(config.seed, SeedStream::Topology));
    auto topology = topologies.at(key);
    futures.push_back(std::async(
        std::launch::async, [config, topology]() -> SweepOutcome {
          SweepOutcome outcome;
          outcome.config = config;
          try {
            outcome.series = run(config, topology);
          } catch (const std::exception& e) {
            outcome.error = e.what();
          }
          return outcome;
        }));
  }

  std::vector<SweepOutcome> outcomes;
  outcomes.reserve(futures.size());
  for (auto& future : futures) outcomes.push_back(future.get());
  return outcomes;
}

std::vector<double> smoothed_congestion(const MetricsSeries& series,
                                        int window) {
  if (window < 1) throw std::invalid_argument("window must be positive");
  std::vector<double> smoothed(series.samples.size(),
                               std::numeric_limits<double>::quiet_NaN());
  double sum = 0.0;
  int present = 0;
  for (std::size_t i = 0; i < series.samples.size(); ++i) {
    if (const auto& c = series.samples[i].congestion_degree) {
      sum += *c;
      ++present;
    }
    if (i >= static_cast<std::size_t>(window)) {
      if (const auto& gone = series.samples[i - window].congestion_degree) {
        sum -= *gone;
        --present;
      }
    }
    if (present > 0) smoothed[i] = sum / present;
  }
  return smoothed;
}

SystemState run_scripted(const ScriptedScenario& scenario, Strategy strategy) {
  auto topology = std::make_shared<const AsTopology>(
      AsTopology(scenario.as_count, scenario.edges));
  SystemState state(topology, scenario.oss_ases, scenario.oss_capacity_units,
                    scenario.stream_units, scenario.hop_bound,
                    scenario.hop_rule);
  for (const SeededPeer& peer : scenario.seeded_peers)
    state.add_seeded_peer(peer.home_as, peer.capacity_units, peer.logical_hop);
  for (const ScriptedJoin& join : scenario.joins) {
    if (const auto allocations = select(strategy, state, join.home_as))
      state.commit_join(join.home_as, *allocations, join.capacity_units);
    else
      state.record_failure();
  }
  return state;
}

}  // namespace p2ps
