#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gbal/bench.hpp"
#include "gbal/io.hpp"
#include "gbal/lst.hpp"
#include "gbal/model.hpp"
#include "gbal/network.hpp"
#include "gbal/oracle.hpp"
#include "gbal/solver.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw gbal::input_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw gbal::input_error("cannot write '" + path + "'");
    out << content;
}

void print_makespan_line(std::ostream& os, const gbal::Instance& inst,
                         const gbal::LoadValue& ms) {
    gbal::int64 total = load_total(inst, ms);
    os << total;
    if (inst.weights) {
        gbal::Ratio frac(total, inst.weights->w_big);
        os << " (= " << frac.numerator() << '/' << frac.denominator() << " x w_big)";
    }
}

int cmd_solve(const std::string& instance_path) {
    gbal::Instance inst = gbal::parse(read_file(instance_path));
    gbal::SolveReport rep = gbal::solve(inst);
    std::cout << "# branch: " << to_string(rep.branch) << '\n';
    if (rep.params.q_a)
        std::cout << "# q_A: " << *rep.params.q_a << '\n';
    if (rep.params.q_b)
        std::cout << "# q_B: " << *rep.params.q_b << '\n';
    if (rep.lst_threshold)
        std::cout << "# lst_threshold: " << *rep.lst_threshold << '\n';
    if (rep.uniform_target)
        std::cout << "# uniform_target: " << *rep.uniform_target << '\n';
    std::cout << "# makespan: ";
    print_makespan_line(std::cout, inst, rep.makespan);
    std::cout << '\n' << gbal::serialize_assignment(rep.orientation);
    return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& assignment_path) {
    gbal::Instance inst = gbal::parse(read_file(instance_path));
    gbal::Orientation o =
        gbal::parse_assignment(read_file(assignment_path), inst.job_count());
    gbal::LoadValue ms = gbal::makespan(inst, o); // throws naming the bad job
    std::cout << "ok: makespan ";
    print_makespan_line(std::cout, inst, ms);
    std::cout << '\n';
    return 0;
}

int cmd_oracle(const std::string& instance_path, std::uint64_t budget) {
    gbal::Instance inst = gbal::parse(read_file(instance_path));
    gbal::OracleResult res = gbal::brute_force_opt(inst, budget);
    std::cout << "# explored: " << res.explored << '\n';
    std::cout << "# opt: ";
    print_makespan_line(std::cout, inst, res.opt);
    std::cout << '\n' << gbal::serialize_assignment(res.witness);
    return 0;
}

int cmd_gen(const std::string& family, int machines, int jobs, gbal::int64 w_small,
            gbal::int64 w_big, std::uint64_t seed, const std::string& out_path) {
    gbal::Instance inst =
        gbal::generate(gbal::family_from_string(family), machines, jobs,
                       gbal::make_weights(w_small, w_big), seed);
    write_output(out_path, gbal::serialize(inst));
    return 0;
}

int cmd_bench(const std::string& suite_path, bool no_oracle, std::uint64_t budget,
              const std::string& format, const std::string& out_path) {
    std::vector<gbal::SuiteEntry> suite = gbal::parse_suite(read_file(suite_path));
    gbal::BenchOptions opt;
    opt.with_oracle = !no_oracle;
    opt.oracle_budget = budget;
    gbal::BenchReport report = gbal::run_bench(suite, opt);
    if (format == "csv") {
        write_output(out_path, report.csv());
        std::cerr << report.summary();
    } else {
        write_output(out_path, report.csv() + "\n" + report.summary());
    }
    if (report.ratio_violations > 0)
        throw gbal::invariant_error("approximation guarantee violated on " +
                                    std::to_string(report.ratio_violations) +
                                    " instance(s)");
    return 0;
}

int cmd_network(const std::string& instance_path, gbal::int64 p, gbal::int64 q) {
    gbal::Instance inst = gbal::parse(read_file(instance_path));
    gbal::BalanceNetwork bn = gbal::build_network(inst, {p, q});
    gbal::write_arcs(bn.net, std::cout);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-weight graph balancing: 3/2-approximate orientation solver"};
    app.require_subcommand(1);

    std::string instance_path, assignment_path, out_path, family, format = "csv";
    std::string suite_path;
    std::uint64_t budget = 10'000'000, seed = 0;
    int machines = 4, jobs = 8;
    gbal::int64 w_small = 1, w_big = 2, p = 1, q = 0;

    auto* solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("file", instance_path, "instance file")->required();

    auto* verify = app.add_subcommand("verify", "check a claimed assignment");
    verify->add_option("file", instance_path, "instance file")->required();
    verify->add_option("assignment", assignment_path, "assignment file")->required();

    auto* oracle = app.add_subcommand("oracle", "exact optimum by enumeration");
    oracle->add_option("file", instance_path, "instance file")->required();
    oracle->add_option("--budget", budget, "max assignments to enumerate");

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("family", family, "random|parallel|starmix|cyclemix")->required();
    gen->add_option("--machines", machines, "machine count");
    gen->add_option("--jobs", jobs, "job count");
    gen->add_option("--wsmall", w_small, "small weight");
    gen->add_option("--wbig", w_big, "big weight");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* bench = app.add_subcommand("bench", "run a generator suite");
    bench->add_option("suite", suite_path, "suite spec file")->required();
    bench->add_flag("--no-oracle", "skip the exact oracle");
    bench->add_option("--budget", budget, "oracle budget per instance");
    bench->add_option("--format", format, "csv|text")
        ->check(CLI::IsMember({"csv", "text"}));
    bench->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* network = app.add_subcommand("network", "dump the balance network arcs");
    network->add_option("file", instance_path, "instance file")->required();
    network->add_option("--p", p, "gate capacity parameter")->required();
    network->add_option("--q", q, "sink capacity parameter")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(instance_path);
        if (verify->parsed())
            return cmd_verify(instance_path, assignment_path);
        if (oracle->parsed())
            return cmd_oracle(instance_path, budget);
        if (gen->parsed())
            return cmd_gen(family, machines, jobs, w_small, w_big, seed, out_path);
        if (bench->parsed())
            return cmd_bench(suite_path, bench->count("--no-oracle") > 0, budget,
                             format, out_path);
        if (network->parsed())
            return cmd_network(instance_path, p, q);
    } catch (const gbal::input_error& e) {
        std::cerr << "error: input: " << e.what() << '\n';
        return 1;
    } catch (const gbal::invariant_error& e) {
        std::cerr << "error: invariant: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
