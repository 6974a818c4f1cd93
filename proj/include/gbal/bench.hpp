#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbal/io.hpp"
#include "gbal/model.hpp"
#include "gbal/solver.hpp"

namespace gbal {

// One generator sweep: `count` seeds starting at `first_seed`.
struct SuiteEntry {
    Family family = Family::Random;
    int machines = 2;
    int jobs = 1;
    Weights pair;
    std::uint64_t first_seed = 0;
    int count = 1;
};

// Suite file grammar, one sweep per line ('#' comments):
//   s <family> <machines> <jobs> <w_small> <w_big> <first-seed> <count>
std::vector<SuiteEntry> parse_suite(std::string_view text);

struct BenchOptions {
    bool with_oracle = true;
    std::uint64_t oracle_budget = 10'000'000;
};

struct BenchRow {
    std::string id;
    Family family = Family::Random;
    std::uint64_t seed = 0;
    int machines = 0;
    int jobs = 0;
    Branch branch = Branch::ExactUniform;
    int64 makespan_total = 0;
    std::optional<Ratio> makespan_over_big; // empty for single-weight instances
    std::optional<int64> opt_total;         // empty when the oracle was skipped
    std::optional<Ratio> ratio;             // makespan / opt, exact
    double wall_ms = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    int ratio_violations = 0; // rows with ratio > 3/2 (always 0 unless broken)

    // Deterministic: excludes timing, so fixed seeds give identical bytes.
    std::string csv() const;
    // Human-readable table with wall-clock times and aggregates (max and
    // mean ratio as exact fractions).
    std::string summary() const;
};

BenchReport run_bench(const std::vector<SuiteEntry>& suite, const BenchOptions& opt);

} // namespace gbal
