#pragma once

#include <vector>

#include "gbal/model.hpp"

namespace gbal {

struct Arc {
    int from = 0;
    int to = 0;
    int64 cap = 0;
};

// Directed network with integer capacities. Parallel arcs and self-arcs are
// permitted; self-arcs never carry flow.
struct DiNetwork {
    int node_count = 0;
    std::vector<Arc> arcs;
    int source = 0;
    int sink = 0;
};

// Throws input_error on out-of-range node indices, negative capacities, or
// source == sink.
void validate(const DiNetwork& net);

// flow[i] pairs with net.arcs[i]; value is the net out-flow of the source.
struct FlowResult {
    std::vector<int64> flow;
    int64 value = 0;
};

// Integral maximum flow (Dinic). Deterministic: augmentations follow input
// arc order, so a fixed network always yields the same flow.
FlowResult max_flow(const DiNetwork& net);

// Plain BFS augmenting-path maximum flow over an adjacency matrix of
// aggregated capacities. Test oracle only; O(n^2) memory.
FlowResult reference_max_flow(const DiNetwork& net);

// Checks 0 <= flow <= cap per arc and conservation at every node other than
// source and sink; throws invariant_error on violation.
void validate_flow(const DiNetwork& net, const FlowResult& res);

} // namespace gbal
