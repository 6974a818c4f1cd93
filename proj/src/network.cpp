#include "gbal/network.hpp"

#include <ostream>
#include <string>

namespace gbal {

BalanceNetwork build_network(const Instance& inst, NetworkParams params) {
    validate(inst);
    if (params.p <= 0)
        throw input_error("network parameter p must be positive");
    if (params.q < 0)
        throw input_error("network parameter q must be nonnegative");

    BalanceNetwork bn;
    bn.params = params;
    bn.job_count = inst.job_count();
    bn.machine_count = inst.machine_count;
    bn.net.node_count = 2 + bn.job_count + 2 * bn.machine_count;
    bn.net.source = bn.source();
    bn.net.sink = bn.sink();
    bn.supply_arc.resize(inst.jobs.size());
    bn.job_arcs.resize(inst.jobs.size());

    auto add_arc = [&](int from, int to, int64 cap) {
        bn.net.arcs.push_back({from, to, cap});
        return static_cast<int>(bn.net.arcs.size()) - 1;
    };

    // Supply arcs first: capacity equals the demand, so a feasible flow must
    // saturate every one of them.
    for (const Job& j : inst.jobs) {
        int64 demand = j.is_big() ? params.p : 1;
        bn.supply_arc[j.id] = add_arc(bn.source(), bn.job_node(j.id), demand);
        bn.supply += demand;
    }

    // Job out-arcs: big jobs route through the per-machine gate, small jobs
    // go straight to the machine node with unit capacity. A big loop has a
    // single out-arc, a big edge exactly two.
    for (const Job& j : inst.jobs) {
        for (int m : j.allowed) {
            int arc = j.is_big() ? add_arc(bn.job_node(j.id), bn.gate_node(m), params.p)
                                 : add_arc(bn.job_node(j.id), bn.machine_node(m), 1);
            bn.job_arcs[j.id].push_back({m, arc});
        }
    }

    // Gate nodes cap total big-job inflow per machine at p; machine nodes
    // forward at most q to the sink. Gates exist for every machine even when
    // unused, which keeps the indexing uniform.
    for (int i = 0; i < inst.machine_count; ++i)
        add_arc(bn.gate_node(i), bn.machine_node(i), params.p);
    for (int i = 0; i < inst.machine_count; ++i)
        add_arc(bn.machine_node(i), bn.sink(), params.q);

    return bn;
}

std::pair<bool, FlowResult> check_feasible(const BalanceNetwork& bn) {
    FlowResult res = max_flow(bn.net);
    return {res.value == bn.supply, std::move(res)};
}

std::pair<bool, FlowResult> feasible(const Instance& inst, NetworkParams params) {
    return check_feasible(build_network(inst, params));
}

void write_arcs(const DiNetwork& net, std::ostream& os) {
    for (const Arc& a : net.arcs)
        os << a.from << ' ' << a.to << ' ' << a.cap << '\n';
}

} // namespace gbal
