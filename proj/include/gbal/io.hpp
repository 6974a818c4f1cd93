#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "gbal/model.hpp"

namespace gbal {

// Instance file grammar (line-oriented, '#' starts a comment):
//   p <machines> <jobs>
//   e <u> <v> <weight>          edge job; u == v makes a loop
//   j <weight> <m1> <m2> ...    general allowed set
// Weights are positive integers or a/b rationals. Job lines must match the
// header count; machine indices must be in range.
Instance parse(std::string_view text);

// Canonical text form: e-lines for jobs with at most two allowed machines,
// j-lines otherwise; weights from the normalized pair (1 for single-weight
// instances). parse(serialize(i)) == i for every parse-produced instance.
std::string serialize(const Instance& inst);

// Assignment file: one "<job-id> <machine-id>" line per job, '#' comments.
Orientation parse_assignment(std::string_view text, int job_count);

std::string serialize_assignment(const Orientation& o);

enum class Family { Random, Parallel, StarMix, CycleMix };

Family family_from_string(std::string_view name);
std::string to_string(Family f);

// Seed-deterministic instance generators:
//   Random:   m edge jobs, endpoints uniform (loops possible), each big or
//             small with probability 1/2.
//   Parallel: m parallel big edges on machines {0, 1}; trips the gate cut,
//             forcing the LST fallback.
//   StarMix:  big star around machine 0 plus small loops on the leaves.
//   CycleMix: odd cycle of big edges plus random small chords.
// All families carry the given weight pair explicitly, so single-class
// outputs (e.g. Parallel) still solve as two-class instances.
Instance generate(Family family, int machines, int jobs, const Weights& pair,
                  std::uint64_t seed);

} // namespace gbal
