#pragma once

#include <optional>
#include <string>

#include "gbal/model.hpp"

namespace gbal {

enum class Branch {
    NetworkA,     // rounded flow on N(k, qA)
    NetworkB,     // rounded flow on N(k+1, qB)
    Lst,          // threshold-search 2-approximation fallback
    ExactUniform, // single-weight instances, solved exactly
};

std::string to_string(Branch b);

// Minimal feasible q found for each network family; empty when the family
// is infeasible throughout its search range.
struct ParamSearch {
    std::optional<int64> q_a;
    std::optional<int64> q_b;
};

struct SolveReport {
    Orientation orientation;
    LoadValue makespan;
    Branch branch = Branch::ExactUniform;
    ParamSearch params;
    std::optional<int64> lst_threshold;   // two-class instances
    std::optional<int64> uniform_target;  // single-weight instances
};

// The 3/2-approximation driver. Single-weight instances go to exact_uniform.
// Otherwise both network families are searched for their minimal feasible q
// (feasibility is monotone in q), each feasible family contributes a rounded
// candidate, the LST fallback contributes a third, and the candidate with
// the smallest exact makespan wins (ties prefer A, then B, then LST).
SolveReport solve(const Instance& inst);

// Exact optimum for single-weight instances: binary-search the smallest
// per-machine job count admitting a unit transportation flow; the integral
// flow is the assignment.
SolveReport exact_uniform(const Instance& inst);

} // namespace gbal
