#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "gbal/flow.hpp"
#include "gbal/model.hpp"

namespace gbal::testing {

inline Job big_edge(int id, int u, int v) {
    std::vector<int> allowed{u};
    if (v != u)
        allowed.push_back(v);
    std::sort(allowed.begin(), allowed.end());
    return Job{id, SizeClass::Big, std::move(allowed)};
}

inline Job small_edge(int id, int u, int v) {
    std::vector<int> allowed{u};
    if (v != u)
        allowed.push_back(v);
    std::sort(allowed.begin(), allowed.end());
    return Job{id, SizeClass::Small, std::move(allowed)};
}

inline Job small_job(int id, std::vector<int> allowed) {
    std::sort(allowed.begin(), allowed.end());
    allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
    return Job{id, SizeClass::Small, std::move(allowed)};
}

// Two-class instance with explicit weights; jobs are re-numbered in order.
inline Instance make_instance(int machines, Weights w, std::vector<Job> jobs) {
    Instance inst;
    inst.machine_count = machines;
    inst.weights = w;
    for (size_t i = 0; i < jobs.size(); ++i)
        jobs[i].id = static_cast<int>(i);
    inst.jobs = std::move(jobs);
    return inst;
}

// Single-weight instance (no class split).
inline Instance make_uniform_instance(int machines, std::vector<Job> jobs) {
    Instance inst;
    inst.machine_count = machines;
    for (size_t i = 0; i < jobs.size(); ++i) {
        jobs[i].id = static_cast<int>(i);
        jobs[i].size_class = SizeClass::Small;
    }
    inst.jobs = std::move(jobs);
    return inst;
}

// Portable deterministic sampling (std distributions vary across libraries).
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    int below(int n) { return static_cast<int>(gen() % static_cast<std::uint64_t>(n)); }
    bool coin() { return (gen() & 1) != 0; }
};

inline const std::vector<Weights> kWeightPairs = {
    {1, 2}, {2, 5}, {1, 3}, {3, 4},
};

// Random two-class instance: edge jobs plus general small jobs with allowed
// sets of up to max_allowed machines.
inline Instance random_instance(Rng& rng, int max_machines, int max_jobs,
                                int max_allowed = 4) {
    int machines = 1 + rng.below(max_machines);
    int jobs = 1 + rng.below(max_jobs);
    Weights w = kWeightPairs[rng.below(static_cast<int>(kWeightPairs.size()))];

    std::vector<Job> list;
    for (int i = 0; i < jobs; ++i) {
        if (rng.coin()) {
            list.push_back(big_edge(i, rng.below(machines), rng.below(machines)));
        } else if (rng.coin()) {
            list.push_back(small_edge(i, rng.below(machines), rng.below(machines)));
        } else {
            int want = 1 + rng.below(std::min(max_allowed, machines));
            std::vector<int> allowed;
            while (static_cast<int>(allowed.size()) < want) {
                int m = rng.below(machines);
                if (std::find(allowed.begin(), allowed.end(), m) == allowed.end())
                    allowed.push_back(m);
            }
            list.push_back(small_job(i, std::move(allowed)));
        }
    }
    return make_instance(machines, w, std::move(list));
}

// Random multigraph with one shared weight; exercises the degenerate path.
inline Instance random_uniform_instance(Rng& rng, int max_machines, int max_edges) {
    int machines = 1 + rng.below(max_machines);
    int edges = 1 + rng.below(max_edges);
    std::vector<Job> list;
    for (int i = 0; i < edges; ++i)
        list.push_back(small_edge(i, rng.below(machines), rng.below(machines)));
    return make_uniform_instance(machines, std::move(list));
}

// Random network for flow-engine differential tests.
inline DiNetwork random_network(Rng& rng, int max_nodes, int max_arcs,
                                int64 max_cap) {
    DiNetwork net;
    net.node_count = 2 + rng.below(max_nodes - 1);
    net.source = 0;
    net.sink = net.node_count - 1;
    int arcs = rng.below(max_arcs + 1);
    for (int i = 0; i < arcs; ++i) {
        int from = rng.below(net.node_count);
        int to = rng.below(net.node_count);
        net.arcs.push_back({from, to, rng.below(static_cast<int>(max_cap) + 1)});
    }
    return net;
}

// All multisets of `edges` slot indices drawn from [0, slots), in
// lexicographic order; used for exhaustive multigraph enumeration.
inline void for_each_multiset(int slots, int edges,
                              const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pick(edges, 0);
    if (edges == 0) {
        fn(pick);
        return;
    }
    for (;;) {
        fn(pick);
        int i = edges - 1;
        while (i >= 0 && pick[i] == slots - 1)
            --i;
        if (i < 0)
            return;
        int v = pick[i] + 1;
        for (int j = i; j < edges; ++j)
            pick[j] = v;
    }
}

} // namespace gbal::testing
