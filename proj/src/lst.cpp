#include "gbal/lst.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gbal/flow.hpp"

namespace gbal {

int64 job_weight(const Instance& inst, const Job& j) {
    if (!inst.weights)
        return 1;
    return j.is_big() ? inst.weights->w_big : inst.weights->w_small;
}

namespace {

// Transportation network: source -> job (cap w_j) -> allowed machines
// (cap w_j) -> sink (cap T). A job may use a machine only if its whole
// weight fits under the threshold (a lone job past the deadline makes T
// infeasible, it cannot buy room by splitting). Feasible at T iff the max
// flow moves the whole weight.
struct Transport {
    DiNetwork net;
    std::vector<std::vector<std::pair<int, int>>> job_arcs; // (machine, arc)
    int64 total = 0;

    Transport(const Instance& inst, int64 threshold) {
        const int jobs = inst.job_count();
        const int machines = inst.machine_count;
        net.node_count = 2 + jobs + machines;
        net.source = 0;
        net.sink = 1 + jobs + machines;
        auto job_node = [](int j) { return 1 + j; };
        auto machine_node = [&](int m) { return 1 + jobs + m; };

        job_arcs.resize(jobs);
        for (const Job& j : inst.jobs) {
            int64 w = job_weight(inst, j);
            total += w;
            net.arcs.push_back({net.source, job_node(j.id), w});
        }
        for (const Job& j : inst.jobs) {
            int64 w = job_weight(inst, j);
            if (w > threshold)
                continue;
            for (int m : j.allowed) {
                net.arcs.push_back({job_node(j.id), machine_node(m), w});
                job_arcs[j.id].push_back({m, static_cast<int>(net.arcs.size()) - 1});
            }
        }
        for (int m = 0; m < machines; ++m)
            net.arcs.push_back({machine_node(m), net.sink, threshold});
    }
};

bool transport_feasible(const Instance& inst, int64 threshold) {
    Transport t(inst, threshold);
    return max_flow(t.net).value == t.total;
}

} // namespace

int64 lst_threshold(const Instance& inst) {
    validate(inst);
    if (inst.jobs.empty())
        return 0;
    int64 total = 0;
    for (const Job& j : inst.jobs)
        total += job_weight(inst, j);
    int64 lo = 0, hi = total;
    while (lo < hi) {
        int64 mid = lo + (hi - lo) / 2;
        if (transport_feasible(inst, mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

Orientation lst_round(const Instance& inst, int64 threshold) {
    validate(inst);
    Orientation o;
    o.machine_of.assign(inst.jobs.size(), -1);
    if (inst.jobs.empty())
        return o;

    Transport t(inst, threshold);
    FlowResult res = max_flow(t.net);
    if (res.value != t.total)
        throw invariant_error("lst_round called with infeasible threshold " +
                              std::to_string(threshold));

    const int jobs = inst.job_count();
    const int machines = inst.machine_count;

    // Mutable per-(job, allowed-machine) flow, aligned with job_arcs.
    std::vector<std::vector<int64>> f(jobs);
    for (int j = 0; j < jobs; ++j) {
        f[j].reserve(t.job_arcs[j].size());
        for (const auto& [machine, arc] : t.job_arcs[j])
            f[j].push_back(res.flow[arc]);
    }

    auto support_size = [&](int j) {
        return std::count_if(f[j].begin(), f[j].end(), [](int64 x) { return x > 0; });
    };

    auto job_totals = [&] {
        std::vector<int64> totals(jobs, 0);
        for (int j = 0; j < jobs; ++j)
            for (int64 x : f[j])
                totals[j] += x;
        return totals;
    };
    auto machine_totals = [&] {
        std::vector<int64> totals(machines, 0);
        for (int j = 0; j < jobs; ++j)
            for (size_t s = 0; s < f[j].size(); ++s)
                totals[t.job_arcs[j][s].first] += f[j][s];
        return totals;
    };
    const std::vector<int64> jobs_before = job_totals();
    const std::vector<int64> machines_before = machine_totals();

    // Cycle cancellation on the bipartite support graph of split jobs. Nodes:
    // jobs 0..J-1, machines J..J+M-1. Pushing +d/-d alternately around a
    // cycle keeps every job total and machine load unchanged and zeroes at
    // least one edge per round, so the support becomes a forest.
    struct Edge {
        int job, slot, machine;
    };
    for (;;) {
        std::vector<Edge> edges;
        std::vector<std::vector<int>> adj(jobs + machines); // edge indices
        for (int j = 0; j < jobs; ++j) {
            if (support_size(j) < 2)
                continue;
            for (size_t s = 0; s < f[j].size(); ++s)
                if (f[j][s] > 0) {
                    edges.push_back({j, static_cast<int>(s), t.job_arcs[j][s].first});
                    adj[j].push_back(static_cast<int>(edges.size()) - 1);
                    adj[jobs + t.job_arcs[j][s].first].push_back(
                        static_cast<int>(edges.size()) - 1);
                }
        }

        // DFS for one cycle, remembering the edge that discovered each node.
        std::vector<int> via_edge(jobs + machines, -1);
        std::vector<int> state(jobs + machines, 0); // 0 new, 1 on stack, 2 done
        std::vector<int> cycle_edges;
        for (int root = 0; root < jobs + machines && cycle_edges.empty(); ++root) {
            if (state[root] != 0 || adj[root].empty())
                continue;
            std::vector<std::pair<int, size_t>> stack{{root, 0}};
            state[root] = 1;
            while (!stack.empty() && cycle_edges.empty()) {
                auto& [v, it] = stack.back();
                if (it >= adj[v].size()) {
                    state[v] = 2;
                    stack.pop_back();
                    continue;
                }
                int e = adj[v][it++];
                if (e == via_edge[v])
                    continue;
                const Edge& ed = edges[e];
                int u = (ed.job == v) ? jobs + ed.machine : ed.job;
                if (state[u] == 0) {
                    state[u] = 1;
                    via_edge[u] = e;
                    stack.push_back({u, 0});
                } else if (state[u] == 1) {
                    // Back edge: unwind the stack from v down to u.
                    cycle_edges.push_back(e);
                    for (auto rit = stack.rbegin(); rit != stack.rend(); ++rit) {
                        if (rit->first == u)
                            break;
                        cycle_edges.push_back(via_edge[rit->first]);
                    }
                }
            }
        }
        if (cycle_edges.empty())
            break;

        // Alternate +d / -d around the cycle; d is the smallest flow on the
        // decreased edges. Bipartiteness makes the cycle even.
        int64 delta = -1;
        for (size_t i = 1; i < cycle_edges.size(); i += 2) {
            const Edge& ed = edges[cycle_edges[i]];
            if (delta < 0 || f[ed.job][ed.slot] < delta)
                delta = f[ed.job][ed.slot];
        }
        if (cycle_edges.size() % 2 != 0 || delta <= 0)
            throw invariant_error("malformed cycle in lst support graph");
        for (size_t i = 0; i < cycle_edges.size(); ++i) {
            const Edge& ed = edges[cycle_edges[i]];
            f[ed.job][ed.slot] += (i % 2 == 0) ? delta : -delta;
        }
    }

    if (job_totals() != jobs_before || machine_totals() != machines_before)
        throw invariant_error("cycle canceling changed a job total or machine load");

    // Integral jobs follow their single support machine.
    std::vector<int> split_jobs;
    for (const Job& j : inst.jobs) {
        if (support_size(j.id) == 1) {
            for (size_t s = 0; s < f[j.id].size(); ++s)
                if (f[j.id][s] > 0)
                    o.machine_of[j.id] = t.job_arcs[j.id][s].first;
        } else {
            split_jobs.push_back(j.id);
        }
    }
    if (split_jobs.empty())
        return o;

    // The remaining support is a forest. Root every tree at its lowest
    // machine node and give each split job to its lowest child machine; a
    // machine has at most one tree parent, so it gains at most one job.
    std::vector<std::vector<int>> job_support(jobs);
    std::vector<std::vector<int>> machine_jobs(machines);
    for (int j : split_jobs)
        for (size_t s = 0; s < f[j].size(); ++s)
            if (f[j][s] > 0) {
                job_support[j].push_back(t.job_arcs[j][s].first);
                machine_jobs[t.job_arcs[j][s].first].push_back(j);
            }

    std::vector<int> machine_parent_job(machines, -1);
    std::vector<char> machine_seen(machines, 0), job_seen(jobs, 0);
    for (int m = 0; m < machines; ++m) {
        if (machine_seen[m] || machine_jobs[m].empty())
            continue;
        // m is the lowest unvisited machine of its component, so BFS from it
        // makes it the root. A job is first reached through its parent
        // machine; its remaining support machines become its children.
        std::vector<int> queue{m};
        machine_seen[m] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int cur = queue[qi];
            for (int j : machine_jobs[cur]) {
                if (job_seen[j])
                    continue;
                job_seen[j] = 1;
                for (int jm : job_support[j]) {
                    if (jm == cur)
                        continue;
                    if (machine_seen[jm])
                        throw invariant_error("lst support graph still has a cycle");
                    machine_seen[jm] = 1;
                    machine_parent_job[jm] = j;
                    queue.push_back(jm);
                }
            }
        }
    }

    for (int j : split_jobs) {
        int choice = -1;
        for (int jm : job_support[j])
            if (machine_parent_job[jm] == j && (choice == -1 || jm < choice))
                choice = jm;
        if (choice == -1)
            throw invariant_error("split job " + std::to_string(j) +
                                  " has no child machine in its tree");
        o.machine_of[j] = choice;
    }
    return o;
}

} // namespace gbal
