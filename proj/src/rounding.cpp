#include "gbal/rounding.hpp"

#include <algorithm>
#include <string>

namespace gbal {

namespace {

// Incidence of a machine in the split graph: edge index plus the machine at
// the far end.
struct Incidence {
    int edge;
    int other;
};

} // namespace

std::vector<int> match_split(const SplitGraph& g) {
    std::vector<std::vector<Incidence>> inc(g.machine_count);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const SplitEdge& se = g.edges[e];
        if (se.machine_a == se.machine_b)
            throw invariant_error("split edge " + std::to_string(e) +
                                  " joins a machine to itself");
        inc[se.machine_a].push_back({static_cast<int>(e), se.machine_b});
        inc[se.machine_b].push_back({static_cast<int>(e), se.machine_a});
    }
    for (int m = 0; m < g.machine_count; ++m)
        if (inc[m].size() > 2)
            throw invariant_error("machine " + std::to_string(m) +
                                  " touches more than two split edges");

    std::vector<int> receiver(g.edges.size(), -1);
    std::vector<char> edge_done(g.edges.size(), 0);

    // Walk from `start`, consuming unvisited edges; each edge is received by
    // the machine we arrive at. Covers a whole path (from an endpoint) or a
    // whole cycle (back to start).
    auto walk = [&](int start) {
        int at = start;
        for (;;) {
            int next_edge = -1;
            for (const Incidence& ic : inc[at])
                if (!edge_done[ic.edge] && (next_edge == -1 || ic.edge < next_edge))
                    next_edge = ic.edge;
            if (next_edge == -1)
                return;
            edge_done[next_edge] = 1;
            const SplitEdge& se = g.edges[next_edge];
            at = (se.machine_a == at) ? se.machine_b : se.machine_a;
            receiver[next_edge] = at;
        }
    };

    // Paths first: start each walk at the higher-indexed degree-1 endpoint of
    // its component, so that endpoint is the one machine left receiving
    // nothing. Machines are scanned downward to find those endpoints.
    for (int m = g.machine_count - 1; m >= 0; --m) {
        if (inc[m].size() != 1)
            continue;
        const Incidence& ic = inc[m][0];
        if (!edge_done[ic.edge])
            walk(m);
    }
    // Remaining edges form cycles; start at the lowest machine index of each.
    for (int m = 0; m < g.machine_count; ++m)
        for (const Incidence& ic : inc[m])
            if (!edge_done[ic.edge])
                walk(m);

    return receiver;
}

Orientation round_flow(const Instance& inst, const BalanceNetwork& bn,
                       const FlowResult& flow) {
    if (flow.flow.size() != bn.net.arcs.size())
        throw invariant_error("flow does not belong to this network");
    if (flow.value != bn.supply)
        throw invariant_error("flow is not feasible: value " +
                              std::to_string(flow.value) + " != supply " +
                              std::to_string(bn.supply));
    const int64 p = bn.params.p;
    const int64 half = p / 2;

    Orientation o;
    o.machine_of.assign(inst.jobs.size(), -1);
    SplitGraph split;
    split.machine_count = inst.machine_count;
    std::vector<int> split_job; // job id per split edge

    for (const Job& j : inst.jobs) {
        const auto& arcs = bn.job_arcs[j.id];
        if (!j.is_big()) {
            // One unit in, so by integrality exactly one out-arc carries 1.
            for (const auto& [machine, arc] : arcs)
                if (flow.flow[arc] == 1) {
                    if (o.machine_of[j.id] != -1)
                        throw invariant_error("small job " + std::to_string(j.id) +
                                              " ships more than one unit");
                    o.machine_of[j.id] = machine;
                }
            if (o.machine_of[j.id] == -1)
                throw invariant_error("small job " + std::to_string(j.id) +
                                      " ships no flow");
            continue;
        }

        // Big job: at most one out-arc can exceed floor(p/2), since two such
        // arcs would sum past the p units of supply.
        int64 shipped = 0;
        for (const auto& [machine, arc] : arcs) {
            shipped += flow.flow[arc];
            if (flow.flow[arc] > half)
                o.machine_of[j.id] = machine;
        }
        if (shipped != p)
            throw invariant_error("big job " + std::to_string(j.id) + " ships " +
                                  std::to_string(shipped) + " of " + std::to_string(p));
        if (o.machine_of[j.id] == -1) {
            // Only an even split of an even p can leave a big edge undecided,
            // and a loop's single arc always carries all of p.
            if (p % 2 != 0 || arcs.size() != 2)
                throw invariant_error("big job " + std::to_string(j.id) +
                                      " undecided with p odd or a single arc");
            split.edges.push_back({j.id, arcs[0].first, arcs[1].first});
            split_job.push_back(j.id);
        }
    }

    if (!split.edges.empty()) {
        std::vector<int> receiver = match_split(split);
        for (size_t e = 0; e < receiver.size(); ++e)
            o.machine_of[split_job[e]] = receiver[e];
    }

    // Feasibility of the flow implies no machine ends up with two big jobs;
    // a violation here means the flow (or the matching) is broken.
    std::vector<int> bigs(inst.machine_count, 0);
    for (const Job& j : inst.jobs)
        if (j.is_big() && ++bigs[o.machine_of[j.id]] > 1)
            throw invariant_error("machine " + std::to_string(o.machine_of[j.id]) +
                                  " received two big jobs after rounding");
    return o;
}

Ratio rounding_bound(int64 p, int64 q, const Weights& w) {
    if (p < 1 || q < 0)
        throw input_error("rounding_bound requires p >= 1 and q >= 0");
    Ratio small_only = Ratio(q) * w.c();
    Ratio with_big = Ratio(1) + Ratio(q - (p + 1) / 2) * w.c();
    return std::max(small_only, with_big);
}

} // namespace gbal
