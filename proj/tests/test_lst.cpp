#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gbal/lst.hpp"
#include "gbal/oracle.hpp"
#include "helpers.hpp"

using namespace gbal;
using namespace gbal::testing;

namespace {

Instance three_parallel_big() {
    return make_instance(2, {2, 5},
                         {big_edge(0, 0, 1), big_edge(1, 0, 1), big_edge(2, 0, 1)});
}

} // namespace

TEST_CASE("a single big edge cannot split below its own weight") {
    Instance inst = make_instance(2, {2, 5}, {big_edge(0, 0, 1)});
    CHECK(lst_threshold(inst) == 5);
}

TEST_CASE("three parallel big edges split fractionally at ceil(15/2)") {
    CHECK(lst_threshold(three_parallel_big()) == 8);
}

TEST_CASE("empty instances have threshold zero") {
    CHECK(lst_threshold(make_instance(3, {1, 2}, {})) == 0);
    Orientation o = lst_round(make_instance(3, {1, 2}, {}), 0);
    CHECK(o.machine_of.empty());
}

TEST_CASE("rounding three parallel big edges stays within T* + w_big") {
    Instance inst = three_parallel_big();
    int64 t = lst_threshold(inst);
    Orientation o = lst_round(inst, t);
    int64 ms = load_total(inst, makespan(inst, o));
    CHECK(ms <= t + 5);            // 13
    OracleResult oracle = brute_force_opt(inst);
    CHECK(load_total(inst, oracle.opt) == 10);
    CHECK(2 * ms <= 3 * load_total(inst, oracle.opt));
}

TEST_CASE("an unsplit flow is read back directly and stays within T*") {
    // two big loops on separate machines: nothing can split
    Instance inst = make_instance(2, {2, 5}, {big_edge(0, 0, 0), big_edge(1, 1, 1)});
    int64 t = lst_threshold(inst);
    CHECK(t == 5);
    Orientation o = lst_round(inst, t);
    CHECK(o.machine_of == std::vector<int>{0, 1});
    CHECK(load_total(inst, makespan(inst, o)) <= t);
}

TEST_CASE("a split small job lands on one machine, overshooting by less than w_small") {
    // big loops pin each machine at 5; the small job must split at T* = 6
    Instance inst = make_instance(2, {2, 5},
                                  {big_edge(0, 0, 0), big_edge(1, 1, 1),
                                   small_edge(2, 0, 1)});
    int64 t = lst_threshold(inst);
    CHECK(t == 6);
    Orientation o = lst_round(inst, t);
    std::vector<LoadValue> loads = machine_loads(inst, o);
    for (const LoadValue& lv : loads)
        CHECK(lv.total(*inst.weights) < t + inst.weights->w_small);
}

TEST_CASE("lst_round rejects thresholds below T*") {
    CHECK_THROWS_AS(lst_round(three_parallel_big(), 7), invariant_error);
}

TEST_CASE("lst properties on random instances") {
    Rng rng(6060);
    for (int t = 0; t < 150; ++t) {
        Instance inst = random_instance(rng, 5, 8);
        int64 threshold = lst_threshold(inst);
        Orientation o = lst_round(inst, threshold);
        int64 ms = load_total(inst, makespan(inst, o));
        CHECK(ms <= threshold + inst.weights->w_big);

        OracleResult oracle = brute_force_opt(inst);
        int64 opt = load_total(inst, oracle.opt);
        CHECK(threshold <= opt);
        if (opt >= 2 * inst.weights->w_big)
            CHECK(2 * ms <= 3 * opt);
    }
}

TEST_CASE("lst properties on single-weight instances") {
    Rng rng(7070);
    for (int t = 0; t < 60; ++t) {
        Instance inst = random_uniform_instance(rng, 5, 8);
        int64 threshold = lst_threshold(inst);
        Orientation o = lst_round(inst, threshold);
        CHECK(load_total(inst, makespan(inst, o)) <= threshold + 1);
        CHECK(threshold <= load_total(inst, brute_force_opt(inst).opt));
    }
}
