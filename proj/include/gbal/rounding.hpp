#pragma once

#include <vector>

#include "gbal/model.hpp"
#include "gbal/network.hpp"

namespace gbal {

// A big edge job whose flow splits exactly p/2 / p/2 between its two
// machines (only possible for even p). Treated as an undirected edge between
// the two machines when completing the orientation.
struct SplitEdge {
    int job = 0;
    int machine_a = 0;
    int machine_b = 0;
};

// The F/U graph of unresolved big jobs: every split edge joins two distinct
// machines, and no machine is incident to more than two split edges.
struct SplitGraph {
    int machine_count = 0;
    std::vector<SplitEdge> edges;
};

// Picks one receiving machine per split edge such that no machine receives
// more than one. Components of the split graph are paths or cycles; paths
// are oriented away from their higher-indexed endpoint (so the receiver set
// is lexicographically smallest), cycles consistently around. Throws
// invariant_error if a machine has more than two incident edges.
std::vector<int> match_split(const SplitGraph& g);

// Converts an integral feasible flow on N(p, q) into a total orientation:
// small jobs follow their unit of flow, big jobs follow an arc carrying more
// than floor(p/2) (always present for odd p), and the leftover even-p splits
// are completed through match_split. Guarantees at most one big job per
// machine and a makespan within rounding_bound. Throws invariant_error if the
// flow is not a saturating feasible flow for the network.
Orientation round_flow(const Instance& inst, const BalanceNetwork& bn,
                       const FlowResult& flow);

// max(c*q, 1 + c*(q - floor((p+1)/2))) in units of w_big: the makespan
// guarantee of round_flow for a feasible N(p, q).
Ratio rounding_bound(int64 p, int64 q, const Weights& w);

} // namespace gbal
