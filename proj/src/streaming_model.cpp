#include "p2ps/streaming_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "p2ps/rng.hpp"

namespace p2ps {

namespace {

std::vector<AsId> draw_distinct_ases(int as_count, int how_many,
                                     std::uint64_t seed) {
  // Partial Fisher-Yates: uniform placement without replacement.
  std::vector<AsId> ids(as_count);
  std::iota(ids.begin(), ids.end(), 0);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < how_many; ++i) {
    const int j = uniform_int(rng, i, as_count - 1);
    std::swap(ids[i], ids[j]);
  }
  ids.resize(how_many);
  return ids;
}

}  // namespace

int capacity_units_for_rate(double rate_mbps, double unit_kbps) {
  if (rate_mbps < 0 || unit_kbps <= 0)
    throw std::invalid_argument("rates must be positive");
  return static_cast<int>(std::floor(rate_mbps * 1000.0 / unit_kbps));
}

SystemState::SystemState(std::shared_ptr<const AsTopology> topology,
                         int oss_count, int oss_capacity_units,
                         int stream_units, int hop_bound,
                         std::uint64_t placement_seed, LogicalHopRule hop_rule)
    : SystemState(topology,
                  draw_distinct_ases(topology ? topology->as_count() : 0,
                                     oss_count, placement_seed),
                  oss_capacity_units, stream_units, hop_bound, hop_rule) {}

SystemState::SystemState(std::shared_ptr<const AsTopology> topology,
                         std::span<const AsId> oss_ases,
                         int oss_capacity_units, int stream_units,
                         int hop_bound, LogicalHopRule hop_rule)
    : topology_(std::move(topology)),
      oss_count_(static_cast<int>(oss_ases.size())),
      stream_units_(stream_units),
      hop_bound_(hop_bound),
      hop_rule_(hop_rule) {
  if (!topology_) throw std::invalid_argument("topology is required");
  if (oss_count_ < 1) throw std::invalid_argument("need at least one OSS");
  if (oss_count_ > topology_->as_count())
    throw std::invalid_argument("more OSSes than ASes");
  if (oss_capacity_units < 0)
    throw std::invalid_argument("oss_capacity_units must be non-negative");
  if (stream_units_ < 1)
    throw std::invalid_argument("stream_units must be positive");
  if (hop_bound_ < 1) throw std::invalid_argument("hop_bound must be positive");

  nodes_.reserve(oss_ases.size());
  for (const AsId as : oss_ases) {
    if (as < 0 || as >= topology_->as_count())
      throw std::invalid_argument("OSS AS id out of range");
    nodes_.push_back(Node{.id = static_cast<NodeId>(nodes_.size()),
                          .kind = NodeKind::Oss,
                          .home_as = as,
                          .capacity_units = oss_capacity_units,
                          .allocated_units = 0,
                          .logical_hop = 0});
  }
}

std::vector<Candidate> SystemState::candidate_view(AsId joining_as) const {
  if (joining_as < 0 || joining_as >= topology_->as_count())
    throw std::invalid_argument("joining AS id out of range");
  std::vector<Candidate> view;
  for (const Node& node : nodes_) {
    if (node.remaining_units() < 1) continue;
    if (node.logical_hop >= hop_bound_) continue;
    view.push_back(Candidate{
        .id = node.id,
        .kind = node.kind,
        .home_as = node.home_as,
        .logical_hop = node.logical_hop,
        .remaining_units = node.remaining_units(),
        .physical_hop = topology_->hop(joining_as, node.home_as)});
  }
  return view;
}

NodeId SystemState::commit_join(AsId joining_as,
                                std::span<const Allocation> allocations,
                                int peer_capacity_units) {
  if (joining_as < 0 || joining_as >= topology_->as_count())
    throw std::invalid_argument("joining AS id out of range");
  if (peer_capacity_units < 0)
    throw std::invalid_argument("peer capacity must be non-negative");

  std::int64_t total = 0;
  for (const Allocation& a : allocations) total += a.units;
  if (total != stream_units_)
    throw std::logic_error("allocations must sum to exactly the stream units");

  // Validate everything before mutating: a throw must leave the state as it
  // was.
  int deepest = 0;
  int shallowest = hop_bound_;
  for (const Allocation& a : allocations) {
    if (a.provider < 0 || a.provider >= static_cast<NodeId>(nodes_.size()))
      throw std::logic_error("allocation names an unknown provider");
    if (a.units < 1) throw std::logic_error("allocation of zero units");
    const Node& provider = nodes_[a.provider];
    if (provider.remaining_units() < a.units)
      throw std::logic_error("allocation exceeds provider capacity");
    if (provider.logical_hop >= hop_bound_)
      throw std::logic_error("provider logical hop count reaches the bound");
    deepest = std::max(deepest, provider.logical_hop);
    shallowest = std::min(shallowest, provider.logical_hop);
  }
  // Duplicate providers never come out of allocate_from_head, but a combined
  // overdraw would pass the per-entry check above; catch it here.
  for (std::size_t i = 0; i < allocations.size(); ++i)
    for (std::size_t j = i + 1; j < allocations.size(); ++j)
      if (allocations[i].provider == allocations[j].provider)
        throw std::logic_error("duplicate provider in allocations");

  const NodeId peer_id = static_cast<NodeId>(nodes_.size());
  const int logical_hop = 1 + (hop_rule_ == LogicalHopRule::MaxProvider
                                   ? deepest
                                   : shallowest);
  nodes_.push_back(Node{.id = peer_id,
                        .kind = NodeKind::Peer,
                        .home_as = joining_as,
                        .capacity_units = peer_capacity_units,
                        .allocated_units = 0,
                        .logical_hop = logical_hop});
  for (const Allocation& a : allocations) {
    nodes_[a.provider].allocated_units += a.units;
    flows_.push_back(
        Flow{.provider = a.provider, .receiver = peer_id, .units = a.units});
  }
  return peer_id;
}

NodeId SystemState::add_seeded_peer(AsId home_as, int capacity_units,
                                    int logical_hop) {
  if (home_as < 0 || home_as >= topology_->as_count())
    throw std::invalid_argument("home AS id out of range");
  if (capacity_units < 0 || logical_hop < 1)
    throw std::invalid_argument("bad seeded peer parameters");
  const NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(Node{.id = id,
                        .kind = NodeKind::Peer,
                        .home_as = home_as,
                        .capacity_units = capacity_units,
                        .allocated_units = 0,
                        .logical_hop = logical_hop});
  return id;
}

}  // namespace p2ps
