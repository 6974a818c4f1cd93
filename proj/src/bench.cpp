#include "gbal/bench.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "gbal/oracle.hpp"

namespace gbal {

namespace {

// Exact mean of many small fractions needs an unbounded denominator.
using BigRatio = boost::rational<boost::multiprecision::cpp_int>;

std::string decimal(const Ratio& r) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6)
       << static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
    return os.str();
}

std::string fraction(const Ratio& r) {
    std::ostringstream os;
    os << r.numerator() << '/' << r.denominator();
    return os.str();
}

} // namespace

std::vector<SuiteEntry> parse_suite(std::string_view text) {
    std::vector<SuiteEntry> out;
    std::istringstream is{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag))
            continue;
        if (tag != "s")
            throw input_error("suite line " + std::to_string(line_no) +
                              ": expected 's <family> <machines> <jobs> <w_small>"
                              " <w_big> <first-seed> <count>'");
        std::string family;
        SuiteEntry e;
        std::int64_t ws = 0, wb = 0;
        if (!(ls >> family >> e.machines >> e.jobs >> ws >> wb >> e.first_seed >>
              e.count))
            throw input_error("suite line " + std::to_string(line_no) +
                              ": malformed sweep");
        e.family = family_from_string(family);
        e.pair = make_weights(ws, wb);
        if (e.count < 1)
            throw input_error("suite line " + std::to_string(line_no) +
                              ": count must be positive");
        out.push_back(e);
    }
    if (out.empty())
        throw input_error("suite file contains no sweeps");
    return out;
}

BenchReport run_bench(const std::vector<SuiteEntry>& suite, const BenchOptions& opt) {
    BenchReport report;
    for (const SuiteEntry& entry : suite) {
        for (int i = 0; i < entry.count; ++i) {
            std::uint64_t seed = entry.first_seed + static_cast<std::uint64_t>(i);
            Instance inst = generate(entry.family, entry.machines, entry.jobs,
                                     entry.pair, seed);
            BenchRow row;
            row.family = entry.family;
            row.seed = seed;
            row.machines = inst.machine_count;
            row.jobs = inst.job_count();
            row.id = to_string(entry.family) + "-n" + std::to_string(entry.machines) +
                     "-m" + std::to_string(entry.jobs) + "-s" + std::to_string(seed);

            auto t0 = std::chrono::steady_clock::now();
            SolveReport sol = solve(inst);
            auto t1 = std::chrono::steady_clock::now();
            row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

            row.branch = sol.branch;
            row.makespan_total = load_total(inst, sol.makespan);
            if (inst.weights)
                row.makespan_over_big = Ratio(row.makespan_total, inst.weights->w_big);

            if (opt.with_oracle && oracle_within_budget(inst, opt.oracle_budget)) {
                OracleResult oracle = brute_force_opt(inst, opt.oracle_budget);
                row.opt_total = load_total(inst, oracle.opt);
                if (*row.opt_total > 0) {
                    row.ratio = Ratio(row.makespan_total, *row.opt_total);
                    if (*row.ratio > Ratio(3, 2))
                        ++report.ratio_violations;
                }
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

std::string BenchReport::csv() const {
    std::ostringstream os;
    os << "id,family,seed,machines,jobs,branch,makespan,makespan_over_wbig,"
          "makespan_decimal,opt,ratio,ratio_decimal\n";
    for (const BenchRow& r : rows) {
        os << r.id << ',' << to_string(r.family) << ',' << r.seed << ','
           << r.machines << ',' << r.jobs << ',' << to_string(r.branch) << ','
           << r.makespan_total << ',';
        if (r.makespan_over_big)
            os << fraction(*r.makespan_over_big);
        os << ','
           << decimal(r.makespan_over_big ? *r.makespan_over_big
                                          : Ratio(r.makespan_total))
           << ',';
        if (r.opt_total)
            os << *r.opt_total;
        os << ',';
        if (r.ratio)
            os << fraction(*r.ratio);
        os << ',';
        if (r.ratio)
            os << decimal(*r.ratio);
        os << '\n';
    }
    return os.str();
}

std::string BenchReport::summary() const {
    std::ostringstream os;
    std::optional<Ratio> max_ratio;
    BigRatio sum(0);
    int with_ratio = 0;
    double total_ms = 0.0;
    for (const BenchRow& r : rows) {
        total_ms += r.wall_ms;
        if (!r.ratio)
            continue;
        ++with_ratio;
        sum += BigRatio(r.ratio->numerator(), r.ratio->denominator());
        if (!max_ratio || *r.ratio > *max_ratio)
            max_ratio = *r.ratio;
    }
    os << "instances: " << rows.size() << '\n';
    os << "solve time: " << std::fixed << std::setprecision(1) << total_ms
       << " ms total\n";
    if (with_ratio > 0) {
        BigRatio mean = sum / with_ratio;
        os << "oracle-checked: " << with_ratio << '\n';
        os << "max ratio: " << fraction(*max_ratio) << " (" << decimal(*max_ratio)
           << ")\n";
        os << "mean ratio: " << mean.numerator() << '/' << mean.denominator() << " ("
           << std::setprecision(6)
           << mean.numerator().convert_to<double>() /
                  mean.denominator().convert_to<double>()
           << ")\n";
    }
    os << "ratio violations (> 3/2): " << ratio_violations << '\n';
    return os.str();
}

} // namespace gbal
