#include "p2ps/as_topology.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "p2ps/rng.hpp"

namespace p2ps {

namespace {

std::vector<std::vector<AsId>> build_adjacency(
    int as_count, std::span<const std::pair<AsId, AsId>> edge_list) {
  std::vector<std::vector<AsId>> adjacency(as_count);
  std::set<std::pair<AsId, AsId>> seen;
  for (const auto& [u, v] : edge_list) {
    if (u < 0 || u >= as_count || v < 0 || v >= as_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop in edge list");
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second)
      throw std::invalid_argument("parallel edge in edge list");
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (auto& nbrs : adjacency) std::sort(nbrs.begin(), nbrs.end());
  return adjacency;
}

/// BFS edge distances from one source; -1 marks unreachable nodes.
std::vector<int> bfs_distances(const std::vector<std::vector<AsId>>& adjacency,
                               AsId source) {
  std::vector<int> dist(adjacency.size(), -1);
  std::queue<AsId> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const AsId u = frontier.front();
    frontier.pop();
    for (const AsId v : adjacency[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

bool is_connected(const std::vector<std::vector<AsId>>& adjacency) {
  if (adjacency.empty()) return false;
  const auto dist = bfs_distances(adjacency, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d < 0; });
}

/// One Barabasi-Albert draw. May return a disconnected graph only in theory;
/// the caller checks and retries.
std::vector<std::pair<AsId, AsId>> ba_edges(int as_count, int m,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<AsId, AsId>> edges;
  std::vector<std::int64_t> degree(as_count, 0);
  std::int64_t degree_sum = 0;

  auto add_edge = [&](AsId u, AsId v) {
    edges.emplace_back(u, v);
    ++degree[u];
    ++degree[v];
    degree_sum += 2;
  };

  // Seed clique on the first m nodes.
  for (AsId u = 0; u < m; ++u)
    for (AsId v = u + 1; v < m; ++v) add_edge(u, v);

  std::vector<bool> picked(as_count, false);
  for (AsId node = m; node < as_count; ++node) {
    std::vector<AsId> targets;
    targets.reserve(m);
    // m degree-weighted draws without replacement over the existing nodes;
    // a repeated target is redrawn. While every degree is zero (the m = 1
    // seed "clique" has no edges) the draw falls back to uniform.
    while (static_cast<int>(targets.size()) < m) {
      AsId t;
      if (degree_sum == 0) {
        t = static_cast<AsId>(uniform_below(rng, node));
      } else {
        std::int64_t r = static_cast<std::int64_t>(
            uniform_below(rng, static_cast<std::uint64_t>(degree_sum)));
        t = 0;
        while (r >= degree[t]) r -= degree[t++];
      }
      if (picked[t]) continue;
      picked[t] = true;
      targets.push_back(t);
    }
    for (const AsId t : targets) {
      picked[t] = false;
      add_edge(node, t);
    }
  }
  return edges;
}

}  // namespace

std::vector<std::uint16_t> compute_all_pairs_hops(
    const std::vector<std::vector<AsId>>& adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<std::uint16_t> hops(n * n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    const auto dist = bfs_distances(adjacency, static_cast<AsId>(u));
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] < 0) throw std::invalid_argument("graph is not connected");
      // ASes traversed = links on the path + 1; hop(u, u) == 1.
      hops[u * n + v] = static_cast<std::uint16_t>(dist[v] + 1);
    }
  }
  return hops;
}

AsTopology::AsTopology(int as_count,
                       std::span<const std::pair<AsId, AsId>> edge_list)
    : as_count_(as_count), edges_(edge_list.begin(), edge_list.end()) {
  if (as_count <= 0) throw std::invalid_argument("as_count must be positive");
  if (as_count > std::numeric_limits<std::uint16_t>::max() - 1)
    throw std::invalid_argument("as_count too large for hop matrix");
  adjacency_ = build_adjacency(as_count, edge_list);
  hop_ = compute_all_pairs_hops(adjacency_);
}

TopologyStats AsTopology::stats() const {
  TopologyStats s;
  std::int64_t dist_sum = 0;
  for (AsId u = 0; u < as_count_; ++u) {
    for (AsId v = 0; v < as_count_; ++v) {
      if (u == v) continue;
      const int edge_dist = hop(u, v) - 1;
      s.diameter_edge_hops = std::max(s.diameter_edge_hops, edge_dist);
      dist_sum += edge_dist;
    }
  }
  const std::int64_t ordered_pairs =
      static_cast<std::int64_t>(as_count_) * (as_count_ - 1);
  s.average_distance_edge_hops =
      ordered_pairs > 0 ? static_cast<double>(dist_sum) / ordered_pairs : 0.0;

  s.min_degree = as_count_ > 0 ? degree(0) : 0;
  for (AsId u = 0; u < as_count_; ++u) {
    s.min_degree = std::min(s.min_degree, degree(u));
    s.max_degree = std::max(s.max_degree, degree(u));
  }
  s.average_degree = as_count_ > 0
                         ? 2.0 * static_cast<double>(edges_.size()) / as_count_
                         : 0.0;
  return s;
}

void AsTopology::dump_edge_list(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << "#ases=" << as_count_ << "\n";
  for (const auto& [u, v] : edges_) out << u << " " << v << "\n";
  if (!out.flush())
    throw std::runtime_error("write failed for " + path.string());
}

AsTopology AsTopology::load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string header;
  if (!std::getline(in, header) || header.rfind("#ases=", 0) != 0)
    throw std::runtime_error("missing #ases= header in " + path.string());
  int as_count = 0;
  try {
    as_count = std::stoi(header.substr(6));
  } catch (const std::exception&) {
    throw std::runtime_error("bad #ases= header in " + path.string());
  }
  std::vector<std::pair<AsId, AsId>> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    AsId u, v;
    if (!(row >> u >> v))
      throw std::runtime_error("bad edge line in " + path.string() + ": " +
                               line);
    edges.emplace_back(u, v);
  }
  return AsTopology(as_count, edges);
}

AsTopology generate_ba_topology(int as_count, int edges_per_new_node,
                                std::uint64_t seed) {
  if (edges_per_new_node < 1)
    throw std::invalid_argument("edges_per_new_node must be at least 1");
  if (as_count <= edges_per_new_node)
    throw std::invalid_argument(
        "as_count must exceed edges_per_new_node");

  constexpr int kMaxAttempts = 8;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto edges = ba_edges(as_count, edges_per_new_node, seed + attempt);
    auto adjacency = build_adjacency(as_count, edges);
    if (is_connected(adjacency)) return AsTopology(as_count, edges);
  }
  throw std::runtime_error("topology generation kept producing disconnected graphs");
}

}  // namespace p2ps
