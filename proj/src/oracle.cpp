#include "gbal/oracle.hpp"

#include <limits>

namespace gbal {

namespace {

std::uint64_t free_choice_product(const Instance& inst, std::uint64_t cap) {
    std::uint64_t product = 1;
    for (const Job& j : inst.jobs) {
        if (j.allowed.size() <= 1)
            continue; // forced, pre-assigned before enumeration
        product *= j.allowed.size();
        if (product > cap)
            return cap + 1;
    }
    return product;
}

struct Search {
    const Instance& inst;
    std::vector<int> free_jobs;
    std::vector<LoadValue> loads;
    Orientation current;
    OracleResult best;
    int64 best_total = std::numeric_limits<int64>::max();

    explicit Search(const Instance& i) : inst(i) {
        loads.resize(inst.machine_count);
        current.machine_of.assign(inst.jobs.size(), -1);
        for (const Job& j : inst.jobs) {
            if (j.allowed.size() == 1) {
                place(j, j.allowed[0]);
                current.machine_of[j.id] = j.allowed[0];
            } else {
                free_jobs.push_back(j.id);
            }
        }
    }

    void place(const Job& j, int m) {
        if (j.is_big())
            ++loads[m].big_count;
        else
            ++loads[m].small_count;
    }
    void unplace(const Job& j, int m) {
        if (j.is_big())
            --loads[m].big_count;
        else
            --loads[m].small_count;
    }

    int64 current_max() const {
        int64 worst = 0;
        for (const LoadValue& lv : loads)
            worst = std::max(worst, load_total(inst, lv));
        return worst;
    }

    void dfs(size_t depth) {
        if (depth == free_jobs.size()) {
            ++best.explored;
            int64 total = current_max();
            if (total < best_total) {
                best_total = total;
                best.witness = current;
                for (const LoadValue& lv : loads)
                    if (load_total(inst, lv) == total)
                        best.opt = lv;
            }
            return;
        }
        const Job& j = inst.jobs[free_jobs[depth]];
        for (int m : j.allowed) {
            place(j, m);
            // a machine already at or above the incumbent cannot improve
            if (load_total(inst, loads[m]) < best_total) {
                current.machine_of[j.id] = m;
                dfs(depth + 1);
                current.machine_of[j.id] = -1;
            }
            unplace(j, m);
        }
    }
};

} // namespace

bool oracle_within_budget(const Instance& inst, std::uint64_t budget) {
    return free_choice_product(inst, budget) <= budget;
}

OracleResult brute_force_opt(const Instance& inst, std::uint64_t budget) {
    validate(inst);
    if (!oracle_within_budget(inst, budget))
        throw input_error("instance too large for oracle: assignment space exceeds budget " +
                          std::to_string(budget));
    Search s(inst);
    s.dfs(0);
    if (s.best_total == std::numeric_limits<int64>::max())
        throw invariant_error("oracle found no complete assignment");
    return s.best;
}

} // namespace gbal
