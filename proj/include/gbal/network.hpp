#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "gbal/flow.hpp"
#include "gbal/model.hpp"

namespace gbal {

// Parameters of the balance network N(p, q). The driver only uses p = k and
// p = k + 1; any positive p is accepted so tests can probe other shapes.
struct NetworkParams {
    int64 p = 1;
    int64 q = 0;
};

// Flow network deciding whether every job can ship its demand through its
// allowed machines when each machine forwards at most q units to the sink
// and accepts at most p units of big-job flow through its gate node.
//
// Layout: source, one node per job, a gate node and a machine node per
// machine, sink. Supply arcs source->job carry exactly the demand (1 small,
// p big), collapsing the per-job flow lower bounds into plain capacities, so
// feasibility becomes "max flow saturates all supply".
struct BalanceNetwork {
    DiNetwork net;
    NetworkParams params;
    int job_count = 0;
    int machine_count = 0;
    int64 supply = 0; // #small + p * #big

    int source() const { return 0; }
    int job_node(int j) const { return 1 + j; }
    int gate_node(int i) const { return 1 + job_count + i; }
    int machine_node(int i) const { return 1 + job_count + machine_count + i; }
    int sink() const { return 1 + job_count + 2 * machine_count; }

    std::vector<int> supply_arc;                            // per job
    std::vector<std::vector<std::pair<int, int>>> job_arcs; // per job: (machine, arc index)
};

// Builds N(p, q). Rejects big jobs with more than two allowed machines.
BalanceNetwork build_network(const Instance& inst, NetworkParams params);

// Max flow on the supplied network; feasible iff the value saturates the
// total supply. The flow is integral and ready for rounding.
std::pair<bool, FlowResult> check_feasible(const BalanceNetwork& bn);

// Convenience: build and decide in one step.
std::pair<bool, FlowResult> feasible(const Instance& inst, NetworkParams params);

// Plain-text arc list, one arc per line: from, to, capacity.
void write_arcs(const DiNetwork& net, std::ostream& os);

} // namespace gbal
