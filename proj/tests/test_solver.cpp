#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gbal/network.hpp"
#include "gbal/oracle.hpp"
#include "gbal/solver.hpp"
#include "helpers.hpp"

using namespace gbal;
using namespace gbal::testing;

TEST_CASE("a single big edge is solved optimally") {
    Instance inst = make_instance(2, {1, 2}, {big_edge(0, 0, 1)});
    SolveReport rep = solve(inst);
    CHECK(rep.makespan == LoadValue{1, 0});
    CHECK(load_total(inst, rep.makespan) == load_total(inst, brute_force_opt(inst).opt));
}

TEST_CASE("forced loops: big + small at one vertex solve to 7 via branch A") {
    Instance inst = make_instance(1, {2, 5}, {big_edge(0, 0, 0), small_edge(1, 0, 0)});
    SolveReport rep = solve(inst);
    CHECK(load_total(inst, rep.makespan) == 7);
    CHECK(rep.makespan == LoadValue{1, 1});
    CHECK(rep.branch == Branch::NetworkA);
    REQUIRE(rep.params.q_a.has_value());
    CHECK(*rep.params.q_a == 3); // supply 1 + k = 3 through the only machine
}

TEST_CASE("three parallel big edges fall through to the LST branch") {
    Instance inst = make_instance(2, {2, 5},
                                  {big_edge(0, 0, 1), big_edge(1, 0, 1),
                                   big_edge(2, 0, 1)});
    SolveReport rep = solve(inst);
    CHECK(!rep.params.q_a.has_value());
    CHECK(!rep.params.q_b.has_value());
    CHECK(rep.branch == Branch::Lst);
    int64 ms = load_total(inst, rep.makespan);
    int64 opt = load_total(inst, brute_force_opt(inst).opt);
    CHECK(opt == 10);
    CHECK(ms <= 13);
    CHECK(2 * ms <= 3 * opt);
}

TEST_CASE("returned q values are minimal: q-1 is infeasible") {
    Rng rng(1234);
    for (int t = 0; t < 60; ++t) {
        Instance inst = random_instance(rng, 4, 7);
        SolveReport rep = solve(inst);
        const Weights& w = *inst.weights;
        if (rep.params.q_a) {
            CHECK(feasible(inst, {w.k(), *rep.params.q_a}).first);
            if (*rep.params.q_a > 0)
                CHECK(!feasible(inst, {w.k(), *rep.params.q_a - 1}).first);
        }
        if (rep.params.q_b && *rep.params.q_b > 0)
            CHECK(!feasible(inst, {w.k() + 1, *rep.params.q_b - 1}).first);
    }
}

TEST_CASE("exhaustive mini-suite meets the 3/2 bound everywhere") {
    // all multigraphs on 3 vertices with up to 4 edges, both classes per edge
    const int slots_n = 3;
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < slots_n; ++u)
        for (int v = u; v < slots_n; ++v)
            slots.push_back({u, v});

    for (Weights w : {Weights{1, 2}, Weights{2, 5}}) {
        for (int edges = 0; edges <= 4; ++edges) {
            for_each_multiset(static_cast<int>(slots.size()), edges,
                              [&](const std::vector<int>& pick) {
                for (int mask = 0; mask < (1 << edges); ++mask) {
                    std::vector<Job> jobs;
                    for (int e = 0; e < edges; ++e) {
                        auto [u, v] = slots[pick[e]];
                        jobs.push_back((mask >> e) & 1 ? big_edge(e, u, v)
                                                       : small_edge(e, u, v));
                    }
                    Instance inst = make_instance(slots_n, w, std::move(jobs));
                    SolveReport rep = solve(inst);
                    int64 ms = load_total(inst, rep.makespan);
                    int64 opt = load_total(inst, brute_force_opt(inst).opt);
                    REQUIRE(ms >= opt);
                    REQUIRE(2 * ms <= 3 * opt);
                }
            });
        }
    }
}

TEST_CASE("random instances meet the 3/2 bound") {
    Rng rng(9091);
    for (int t = 0; t < 200; ++t) {
        Instance inst = random_instance(rng, 6, 9);
        SolveReport rep = solve(inst);
        CHECK(load_total(inst, rep.makespan) ==
              load_total(inst, makespan(inst, rep.orientation)));
        int64 ms = load_total(inst, rep.makespan);
        int64 opt = load_total(inst, brute_force_opt(inst).opt);
        CHECK(ms >= opt);
        CHECK(2 * ms <= 3 * opt);
    }
}

TEST_CASE("exact_uniform: unit triangle packs one edge per vertex") {
    Instance inst = make_uniform_instance(3, {small_edge(0, 0, 1), small_edge(1, 1, 2),
                                              small_edge(2, 0, 2)});
    SolveReport rep = exact_uniform(inst);
    CHECK(rep.uniform_target == 1);
    CHECK(load_total(inst, rep.makespan) == 1);
}

TEST_CASE("exact_uniform: unit K4 needs two edges somewhere") {
    std::vector<Job> jobs;
    int id = 0;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            jobs.push_back(small_edge(id++, u, v));
    Instance inst = make_uniform_instance(4, std::move(jobs));
    SolveReport rep = exact_uniform(inst);
    CHECK(rep.uniform_target == 2);
    CHECK(load_total(inst, rep.makespan) ==
          load_total(inst, brute_force_opt(inst).opt));
}

TEST_CASE("exact_uniform: n parallel unit edges split in half") {
    for (int n = 1; n <= 7; ++n) {
        std::vector<Job> jobs;
        for (int i = 0; i < n; ++i)
            jobs.push_back(small_edge(i, 0, 1));
        Instance inst = make_uniform_instance(2, std::move(jobs));
        SolveReport rep = exact_uniform(inst);
        CHECK(rep.uniform_target == (n + 1) / 2);
        CHECK(load_total(inst, rep.makespan) == (n + 1) / 2);
    }
}

TEST_CASE("single-weight instances route through exact_uniform") {
    Rng rng(111);
    for (int t = 0; t < 60; ++t) {
        Instance inst = random_uniform_instance(rng, 5, 8);
        SolveReport rep = solve(inst);
        CHECK(rep.branch == Branch::ExactUniform);
        CHECK(load_total(inst, rep.makespan) ==
              load_total(inst, brute_force_opt(inst).opt));
    }
}

TEST_CASE("empty instances yield an empty orientation") {
    Instance inst = make_uniform_instance(2, {});
    SolveReport rep = solve(inst);
    CHECK(rep.orientation.machine_of.empty());
    CHECK(rep.makespan == LoadValue{0, 0});
}

TEST_CASE("solve is deterministic") {
    Rng rng(2222);
    for (int t = 0; t < 30; ++t) {
        Instance inst = random_instance(rng, 5, 8);
        SolveReport a = solve(inst);
        SolveReport b = solve(inst);
        CHECK(a.orientation == b.orientation);
        CHECK(a.makespan == b.makespan);
        CHECK(a.branch == b.branch);
    }
}
