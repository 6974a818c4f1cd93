#include "gbal/solver.hpp"

#include <utility>

#include "gbal/flow.hpp"
#include "gbal/lst.hpp"
#include "gbal/network.hpp"
#include "gbal/rounding.hpp"

namespace gbal {

std::string to_string(Branch b) {
    switch (b) {
    case Branch::NetworkA: return "A-network";
    case Branch::NetworkB: return "B-network";
    case Branch::Lst: return "LST";
    case Branch::ExactUniform: return "exact-uniform";
    }
    return "?";
}

namespace {

// Minimal q in [0, q_max] with N(p, q) feasible, plus the rounded
// orientation at that q. Feasibility is monotone in q (capacities only
// grow), so binary search applies; infeasible at q_max means infeasible
// everywhere.
struct NetworkCandidate {
    int64 q = 0;
    Orientation orientation;
};

std::optional<NetworkCandidate> search_network(const Instance& inst, int64 p,
                                               int64 q_max) {
    {
        auto [ok, flow] = feasible(inst, {p, q_max});
        if (!ok)
            return std::nullopt;
    }
    int64 lo = 0, hi = q_max;
    while (lo < hi) {
        int64 mid = lo + (hi - lo) / 2;
        auto [ok, flow] = feasible(inst, {p, mid});
        if (ok)
            hi = mid;
        else
            lo = mid + 1;
    }
    BalanceNetwork bn = build_network(inst, {p, lo});
    auto [ok, flow] = check_feasible(bn);
    if (!ok)
        throw invariant_error("binary search returned an infeasible q");
    return NetworkCandidate{lo, round_flow(inst, bn, flow)};
}

} // namespace

SolveReport exact_uniform(const Instance& inst) {
    validate(inst);
    if (inst.weights)
        throw invariant_error("exact_uniform requires a single-weight instance");

    SolveReport rep;
    rep.branch = Branch::ExactUniform;
    rep.orientation.machine_of.assign(inst.jobs.size(), -1);
    if (inst.jobs.empty()) {
        rep.uniform_target = 0;
        return rep;
    }

    const int jobs = inst.job_count();
    const int machines = inst.machine_count;
    auto build = [&](int64 per_machine) {
        DiNetwork net;
        net.node_count = 2 + jobs + machines;
        net.source = 0;
        net.sink = 1 + jobs + machines;
        for (int j = 0; j < jobs; ++j)
            net.arcs.push_back({net.source, 1 + j, 1});
        for (const Job& j : inst.jobs)
            for (int m : j.allowed)
                net.arcs.push_back({1 + j.id, 1 + jobs + m, 1});
        for (int m = 0; m < machines; ++m)
            net.arcs.push_back({1 + jobs + m, net.sink, per_machine});
        return net;
    };

    int64 lo = 1, hi = jobs;
    while (lo < hi) {
        int64 mid = lo + (hi - lo) / 2;
        if (max_flow(build(mid)).value == jobs)
            hi = mid;
        else
            lo = mid + 1;
    }
    rep.uniform_target = lo;

    DiNetwork net = build(lo);
    FlowResult res = max_flow(net);
    if (res.value != jobs)
        throw invariant_error("uniform assignment network infeasible at its own optimum");
    // Job j's unit sits on exactly one of its machine arcs.
    size_t arc = jobs; // machine arcs start after the supply block
    for (const Job& j : inst.jobs)
        for (int m : j.allowed) {
            if (res.flow[arc] == 1)
                rep.orientation.machine_of[j.id] = m;
            ++arc;
        }
    rep.makespan = makespan(inst, rep.orientation);
    return rep;
}

SolveReport solve(const Instance& inst) {
    validate(inst);
    if (!inst.weights)
        return exact_uniform(inst);

    const Weights& w = *inst.weights;
    const int64 k = w.k();
    const int64 smalls = inst.small_count();

    SolveReport rep;
    auto cand_a = search_network(inst, k, k + smalls);
    auto cand_b = search_network(inst, k + 1, (k + 1) + smalls);
    if (cand_a)
        rep.params.q_a = cand_a->q;
    if (cand_b)
        rep.params.q_b = cand_b->q;

    int64 threshold = lst_threshold(inst);
    rep.lst_threshold = threshold;
    Orientation cand_c = lst_round(inst, threshold);

    // Best of the three; ties prefer A, then B, then LST.
    rep.branch = Branch::Lst;
    rep.orientation = std::move(cand_c);
    rep.makespan = makespan(inst, rep.orientation);
    if (cand_b) {
        LoadValue ms = makespan(inst, cand_b->orientation);
        if (load_total(inst, ms) <= load_total(inst, rep.makespan)) {
            rep.branch = Branch::NetworkB;
            rep.orientation = std::move(cand_b->orientation);
            rep.makespan = ms;
        }
    }
    if (cand_a) {
        LoadValue ms = makespan(inst, cand_a->orientation);
        if (load_total(inst, ms) <= load_total(inst, rep.makespan)) {
            rep.branch = Branch::NetworkA;
            rep.orientation = std::move(cand_a->orientation);
            rep.makespan = ms;
        }
    }
    return rep;
}

} // namespace gbal
