#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "p2ps/as_topology.hpp"

namespace p2ps {

/// Dense node identifier. Origin streaming servers occupy ids
/// [0, oss_count); peers follow in join order. Ids are never reused.
using NodeId = int;

enum class NodeKind : std::uint8_t { Oss, Peer };

/// An origin streaming server or a joined peer.
///
/// Capacities are counted in minimum units: the streaming rate divides into
/// stream_units equal slices and every delivery moves a whole number of them.
struct Node {
  NodeId id = 0;
  NodeKind kind = NodeKind::Peer;
  AsId home_as = 0;
  int capacity_units = 0;   ///< units this node can serve concurrently
  int allocated_units = 0;  ///< units currently promised to receivers
  int logical_hop = 0;      ///< overlay depth: 0 for an OSS, >= 1 for a peer

  int remaining_units() const { return capacity_units - allocated_units; }
  bool is_oss() const { return kind == NodeKind::Oss; }
};

/// One provider-to-receiver delivery of `units` minimum units.
struct Flow {
  NodeId provider = 0;
  NodeId receiver = 0;
  int units = 0;
};

/// What a selection strategy sees about one potential provider when a peer
/// joins: the node's current spare capacity plus its physical hop count from
/// the joining AS.
struct Candidate {
  NodeId id = 0;
  NodeKind kind = NodeKind::Peer;
  AsId home_as = 0;
  int logical_hop = 0;
  int remaining_units = 0;
  int physical_hop = 0;  ///< hop count from the joining AS to home_as

  bool is_oss() const { return kind == NodeKind::Oss; }
};

/// A provider chosen by a strategy and the number of units taken from it.
struct Allocation {
  NodeId provider = 0;
  int units = 0;
};

/// How a peer's logical hop count is derived when it receives from several
/// providers: one past the deepest provider (conservative for the real-time
/// bound) or one past the shallowest.
enum class LogicalHopRule { MaxProvider, MinProvider };

/// Capacity in minimum units for a providing rate, e.g. a 100 Mbps server
/// with 256 kbps units provides floor(100000/256) = 390 units.
int capacity_units_for_rate(double rate_mbps, double unit_kbps);

/// Mutable state of one streaming system: the OSSes, every joined peer, and
/// the flow ledger. Single-writer; one simulation run mutates it
/// sequentially. Distinct runs are independent and may execute in parallel.
class SystemState {
 public:
  /// Places oss_count servers in distinct ASes chosen uniformly at random
  /// (driven by placement_seed), each with oss_capacity_units. No peers, no
  /// flows. Throws std::invalid_argument if oss_count > as_count or any
  /// parameter is out of range.
  SystemState(std::shared_ptr<const AsTopology> topology, int oss_count,
              int oss_capacity_units, int stream_units, int hop_bound,
              std::uint64_t placement_seed,
              LogicalHopRule hop_rule = LogicalHopRule::MaxProvider);

  /// Same, but with explicit server ASes (scripted scenarios, tests).
  SystemState(std::shared_ptr<const AsTopology> topology,
              std::span<const AsId> oss_ases, int oss_capacity_units,
              int stream_units, int hop_bound,
              LogicalHopRule hop_rule = LogicalHopRule::MaxProvider);

  const AsTopology& topology() const { return *topology_; }
  std::shared_ptr<const AsTopology> topology_ptr() const { return topology_; }

  std::span<const Node> nodes() const { return nodes_; }
  std::span<const Flow> flows() const { return flows_; }
  const Node& node(NodeId id) const { return nodes_[id]; }

  int oss_count() const { return oss_count_; }
  int peer_count() const { return static_cast<int>(nodes_.size()) - oss_count_; }
  int stream_units() const { return stream_units_; }
  int hop_bound() const { return hop_bound_; }
  LogicalHopRule hop_rule() const { return hop_rule_; }
  std::int64_t join_failures() const { return join_failures_; }

  /// All nodes a joining peer in `joining_as` may receive from: remaining
  /// capacity of at least one unit and logical hop count below the bound.
  /// Ordered by NodeId; strategies impose their own order afterwards.
  std::vector<Candidate> candidate_view(AsId joining_as) const;

  /// Adds a peer served by `allocations` and records its flows. The
  /// allocations must sum to exactly stream_units and every provider must
  /// have the spare capacity and a logical hop count below the bound;
  /// violations throw std::logic_error since strategies must never produce
  /// them. Returns the new peer's id.
  NodeId commit_join(AsId joining_as, std::span<const Allocation> allocations,
                     int peer_capacity_units);

  /// Counts one failed join. The peer is not added and nothing else changes.
  void record_failure() { ++join_failures_; }

  /// Appends a pre-joined peer with a given logical hop count and no flows.
  /// Scenario scaffolding: lets a test start from a state where some peers
  /// "have already joined" without replaying how they got there.
  NodeId add_seeded_peer(AsId home_as, int capacity_units, int logical_hop);

 private:
  std::shared_ptr<const AsTopology> topology_;
  std::vector<Node> nodes_;
  std::vector<Flow> flows_;
  int oss_count_ = 0;
  int stream_units_ = 0;
  int hop_bound_ = 0;
  LogicalHopRule hop_rule_ = LogicalHopRule::MaxProvider;
  std::int64_t join_failures_ = 0;
};

}  // namespace p2ps
