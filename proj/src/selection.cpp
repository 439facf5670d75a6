#include "p2ps/selection.hpp"

#include <algorithm>
#include <tuple>

namespace p2ps {

namespace {

bool by_phop_id(const Candidate& a, const Candidate& b) {
  return std::tie(a.physical_hop, a.id) < std::tie(b.physical_hop, b.id);
}

bool by_lhop_id(const Candidate& a, const Candidate& b) {
  return std::tie(a.logical_hop, a.id) < std::tie(b.logical_hop, b.id);
}

bool by_phop_lhop_id(const Candidate& a, const Candidate& b) {
  return std::tie(a.physical_hop, a.logical_hop, a.id) <
         std::tie(b.physical_hop, b.logical_hop, b.id);
}

}  // namespace

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "mh") return Strategy::Mh;
  if (name == "md") return Strategy::Md;
  if (name == "mph") return Strategy::Mph;
  if (name == "imph") return Strategy::Imph;
  return std::nullopt;
}

std::string_view strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::Mh: return "mh";
    case Strategy::Md: return "md";
    case Strategy::Mph: return "mph";
    case Strategy::Imph: return "imph";
  }
  return "?";
}

std::vector<Candidate> order_mh(std::span<const Candidate> candidates) {
  std::vector<Candidate> ordered(candidates.begin(), candidates.end());
  std::sort(ordered.begin(), ordered.end(), by_phop_id);
  return ordered;
}

std::vector<Candidate> order_md(std::span<const Candidate> candidates) {
  std::vector<Candidate> ordered(candidates.begin(), candidates.end());
  std::sort(ordered.begin(), ordered.end(), by_lhop_id);
  return ordered;
}

std::vector<Candidate> order_mph(std::span<const Candidate> candidates) {
  std::vector<Candidate> ordered(candidates.begin(), candidates.end());
  std::sort(ordered.begin(), ordered.end(), by_phop_lhop_id);
  return ordered;
}

std::vector<Candidate> order_imph(std::span<const Candidate> candidates,
                                  AsId joining_as) {
  std::vector<Candidate> same_as;   // L1: local peers
  std::vector<Candidate> servers;   // L2: OSSes with capacity left
  std::vector<Candidate> rest;      // L3: remote peers
  for (const Candidate& c : candidates) {
    if (!c.is_oss() && c.home_as == joining_as)
      same_as.push_back(c);
    else if (c.is_oss())
      servers.push_back(c);
    else
      rest.push_back(c);
  }
  std::sort(same_as.begin(), same_as.end(), by_lhop_id);
  std::sort(servers.begin(), servers.end(), by_phop_id);
  std::sort(rest.begin(), rest.end(), by_phop_lhop_id);

  std::vector<Candidate> ordered;
  ordered.reserve(candidates.size());
  ordered.insert(ordered.end(), same_as.begin(), same_as.end());
  ordered.insert(ordered.end(), servers.begin(), servers.end());
  ordered.insert(ordered.end(), rest.begin(), rest.end());
  return ordered;
}

std::vector<Candidate> order_candidates(Strategy strategy,
                                        std::span<const Candidate> candidates,
                                        AsId joining_as) {
  switch (strategy) {
    case Strategy::Mh: return order_mh(candidates);
    case Strategy::Md: return order_md(candidates);
    case Strategy::Mph: return order_mph(candidates);
    case Strategy::Imph: return order_imph(candidates, joining_as);
  }
  return {};
}

std::optional<std::vector<Allocation>> allocate_from_head(
    std::span<const Candidate> ordered, int needed_units) {
  std::vector<Allocation> allocations;
  int still_needed = needed_units;
  for (const Candidate& c : ordered) {
    if (still_needed == 0) break;
    const int take = std::min(c.remaining_units, still_needed);
    allocations.push_back(Allocation{.provider = c.id, .units = take});
    still_needed -= take;
  }
  if (still_needed > 0) return std::nullopt;
  return allocations;
}

std::optional<std::vector<Allocation>> select(Strategy strategy,
                                              const SystemState& state,
                                              AsId joining_as) {
  const auto view = state.candidate_view(joining_as);
  const auto ordered = order_candidates(strategy, view, joining_as);
  return allocate_from_head(ordered, state.stream_units());
}

}  // namespace p2ps
