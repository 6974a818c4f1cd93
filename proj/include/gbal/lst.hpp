#pragma once

#include "gbal/model.hpp"

namespace gbal {

// Weight of one job in base units: w_big / w_small for two-class instances,
// 1 for single-weight ones.
int64 job_weight(const Instance& inst, const Job& j);

// Minimal integer threshold T such that every job can fractionally spread
// its weight across its allowed machines with no machine above T. Found by
// binary search over a transportation network; T = total weight is always
// feasible. T* never exceeds the optimal makespan.
int64 lst_threshold(const Instance& inst);

// Rounds the fractional solution at threshold T into a total assignment with
// makespan at most T + w_big: cancels cycles in the bipartite support graph
// of split jobs (preserving job totals and machine loads exactly), then
// roots each remaining tree at its lowest machine node and hands every split
// job to one of its child machines, so no machine gains more than one extra
// job. Throws invariant_error if T is infeasible.
Orientation lst_round(const Instance& inst, int64 threshold);

} // namespace gbal
