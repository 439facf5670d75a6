#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

namespace p2ps {

/// Identifier of an autonomous system; dense in [0, as_count).
using AsId = int;

/// Summary statistics of a topology instance. Distances are reported in edge
/// hops (number of links on a shortest path), the usual convention for graph
/// diameter tables.
struct TopologyStats {
  int diameter_edge_hops = 0;
  double average_distance_edge_hops = 0.0;  ///< mean over ordered pairs u != v
  int min_degree = 0;
  int max_degree = 0;
  double average_degree = 0.0;
};

/// Computes the dense pairwise hop-count matrix of an undirected graph by
/// breadth-first search from every node, flattened row-major (n*n entries).
///
/// The hop count between two ASes is the number of ASes traversed on a
/// shortest path between them, so hop[u][u] == 1 and adjacent ASes have
/// hop 2 (edge distance + 1). Throws std::invalid_argument if the graph is
/// disconnected.
std::vector<std::uint16_t> compute_all_pairs_hops(
    const std::vector<std::vector<AsId>>& adjacency);

/// AS-level graph plus the precomputed pairwise hop-count matrix.
///
/// Immutable after construction; safe to share read-only across parallel
/// simulation runs.
class AsTopology {
 public:
  /// Builds a topology from an explicit edge list. Validates that ids are in
  /// range, there are no self-loops or parallel edges, and the graph is
  /// connected; throws std::invalid_argument otherwise.
  AsTopology(int as_count, std::span<const std::pair<AsId, AsId>> edge_list);

  int as_count() const { return as_count_; }
  std::int64_t edge_count() const {
    return static_cast<std::int64_t>(edges_.size());
  }

  /// Number of ASes traversed on a shortest path from u to v. hop(u, u) == 1.
  int hop(AsId u, AsId v) const {
    return hop_[static_cast<std::size_t>(u) * as_count_ + v];
  }

  int degree(AsId u) const { return static_cast<int>(adjacency_[u].size()); }
  const std::vector<AsId>& neighbors(AsId u) const { return adjacency_[u]; }
  const std::vector<std::pair<AsId, AsId>>& edges() const { return edges_; }

  TopologyStats stats() const;

  /// Writes the topology as a plain-text edge list: a header line
  /// "#ases=<n>" followed by one "u v" line per edge. Lets a fixed topology
  /// be pinned in regression tests.
  void dump_edge_list(const std::filesystem::path& path) const;

  /// Reads the format written by dump_edge_list. Throws std::runtime_error on
  /// I/O or parse failure and std::invalid_argument for a malformed graph.
  static AsTopology load_edge_list(const std::filesystem::path& path);

 private:
  int as_count_;
  std::vector<std::pair<AsId, AsId>> edges_;
  std::vector<std::vector<AsId>> adjacency_;
  std::vector<std::uint16_t> hop_;
};

/// Generates a scale-free AS graph with Barabasi-Albert preferential
/// attachment: an initial complete graph on m nodes, then each new node
/// attaches m edges to distinct existing nodes with probability proportional
/// to their current degree.
///
/// Requires as_count > m >= 1. The result is connected for every seed (a
/// disconnected draw, impossible for m >= 1 but guarded anyway, is retried
/// with seed+1 up to 8 times). Same seed, same topology, bit for bit.
AsTopology generate_ba_topology(int as_count, int edges_per_new_node,
                                std::uint64_t seed);

}  // namespace p2ps
