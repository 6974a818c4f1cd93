#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "gbal/errors.hpp"

namespace gbal {

using int64 = std::int64_t;
using Ratio = boost::rational<int64>;

// The two normalized job weights, stored as a coprime integer pair so every
// downstream comparison stays in integer arithmetic.
struct Weights {
    int64 w_small = 1;
    int64 w_big = 2;

    // c = w_small / w_big, the small weight after scaling w_big to 1.
    Ratio c() const { return Ratio(w_small, w_big); }
    // k = floor(w_big / w_small), how many small jobs fit under one big one.
    int64 k() const { return w_big / w_small; }

    bool operator==(const Weights&) const = default;
};

// Validates 0 < w_small < w_big and gcd = 1.
Weights make_weights(int64 w_small, int64 w_big);

enum class SizeClass : unsigned char { Small, Big };

struct Job {
    int id = 0;
    SizeClass size_class = SizeClass::Small;
    std::vector<int> allowed; // sorted, unique, nonempty machine indices

    bool is_big() const { return size_class == SizeClass::Big; }
    bool is_loop() const { return is_big() && allowed.size() == 1; }

    bool operator==(const Job&) const = default;
};

// A two-weight restricted-assignment instance. Machines are the vertices of
// the underlying multigraph; edge jobs carry their two endpoints as the
// allowed set, general small jobs may list any nonempty machine set.
//
// `weights` is empty for single-weight instances (zero or one distinct raw
// value); those are solved exactly instead of approximated. Instances built
// directly (tests, generators) may carry explicit weights even when only one
// class is populated.
struct Instance {
    int machine_count = 0;
    std::vector<Job> jobs;
    std::optional<Weights> weights;

    int job_count() const { return static_cast<int>(jobs.size()); }
    int64 small_count() const;
    int64 big_count() const;

    bool operator==(const Instance&) const = default;
};

// Throws input_error if a job's allowed set is empty, unsorted, out of
// range, or a big job lists more than two machines.
void validate(const Instance& inst);

// Exact machine load: big_count * w_big + small_count * w_small.
struct LoadValue {
    int64 big_count = 0;
    int64 small_count = 0;

    int64 total(const Weights& w) const {
        return big_count * w.w_big + small_count * w.w_small;
    }

    bool operator==(const LoadValue&) const = default;
};

// Load total in the instance's own units: weighted when two classes exist,
// plain job count for single-weight instances.
int64 load_total(const Instance& inst, const LoadValue& lv);

// Total assignment of jobs to machines, indexed by job id.
struct Orientation {
    std::vector<int> machine_of;

    bool operator==(const Orientation&) const = default;
};

struct NormalizeResult {
    std::optional<Weights> weights;  // empty: single-weight (or empty) input
    std::vector<SizeClass> classes;  // one per input weight
};

// Scales raw per-job weights to the canonical coprime pair. Rational inputs
// are cleared to integers over a common denominator first. Rejects
// nonpositive weights and more than two distinct values.
NormalizeResult normalize(const std::vector<Ratio>& raw_weights);

// Per-machine loads of a total orientation; throws input_error (naming the
// job) if an assignment is missing or outside the allowed set.
std::vector<LoadValue> machine_loads(const Instance& inst, const Orientation& o);

// Maximum machine load of the orientation.
LoadValue makespan(const Instance& inst, const Orientation& o);

// True iff den * total(ms) <= num * total(opt), exactly. Throws input_error
// when opt is zero but ms is not (ratio undefined).
bool ratio_within(const Instance& inst, const LoadValue& ms, const LoadValue& opt,
                  int64 num, int64 den);

} // namespace gbal
