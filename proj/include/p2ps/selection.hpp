#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "p2ps/streaming_model.hpp"

namespace p2ps {

/// The four peer selection strategies. Each is a pure ordering of a
/// candidate view; all remaining ties break by ascending NodeId so a given
/// view always orders the same way.
enum class Strategy { Mh, Md, Mph, Imph };

std::optional<Strategy> parse_strategy(std::string_view name);
std::string_view strategy_name(Strategy strategy);

/// Minimum physical hop baseline: ascending (physical_hop, id).
std::vector<Candidate> order_mh(std::span<const Candidate> candidates);

/// Minimum depth baseline: ascending (logical_hop, id).
std::vector<Candidate> order_md(std::span<const Candidate> candidates);

/// Physically nearest first, depth as tie-break: ascending
/// (physical_hop, logical_hop, id).
std::vector<Candidate> order_mph(std::span<const Candidate> candidates);

/// Same-AS peers first, then origin servers, then the rest:
///   L1 = non-OSS candidates in the joining AS, by (logical_hop, id);
///   L2 = OSS candidates, by (physical_hop, id);
///   L3 = everything else, by (physical_hop, logical_hop, id);
/// result is L1 ++ L2 ++ L3. Prefers rooting a new overlay subtree at an OSS
/// over pulling the stream from a peer in another AS.
std::vector<Candidate> order_imph(std::span<const Candidate> candidates,
                                  AsId joining_as);

/// Dispatch on the strategy tag.
std::vector<Candidate> order_candidates(Strategy strategy,
                                        std::span<const Candidate> candidates,
                                        AsId joining_as);

/// Walks the ordered list from the head, taking min(remaining, still needed)
/// units from each candidate until needed_units are covered. Returns nullopt
/// exactly when the candidates' total remaining capacity is short, in which
/// case the join fails.
std::optional<std::vector<Allocation>> allocate_from_head(
    std::span<const Candidate> ordered, int needed_units);

/// candidate_view -> order -> allocate_from_head. Pure with respect to the
/// state; the caller commits the result or records the failure.
std::optional<std::vector<Allocation>> select(Strategy strategy,
                                              const SystemState& state,
                                              AsId joining_as);

}  // namespace p2ps
