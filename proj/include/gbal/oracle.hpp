#pragma once

#include <cstdint>

#include "gbal/model.hpp"

namespace gbal {

struct OracleResult {
    LoadValue opt;
    Orientation witness;
    std::uint64_t explored = 0; // complete assignments evaluated
};

// True iff the assignment space (after pre-assigning forced jobs) is within
// budget, i.e. brute_force_opt will accept the instance.
bool oracle_within_budget(const Instance& inst, std::uint64_t budget = 10'000'000);

// Exact optimum by depth-first enumeration with incumbent pruning. Jobs with
// a single allowed machine are pre-assigned. Throws input_error when the
// assignment space exceeds the budget; never silently approximates.
OracleResult brute_force_opt(const Instance& inst, std::uint64_t budget = 10'000'000);

} // namespace gbal
