#include "gbal/io.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>
#include <vector>

namespace gbal {

namespace {

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw input_error("line " + std::to_string(line_no) + ": " + msg);
}

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '#')
            break;
        if (c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) {
                out.push_back(std::move(cur));
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

int64 parse_int(const std::string& tok, int line_no, const char* what) {
    int64 v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        fail(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    return v;
}

// "5" or "2/5"
Ratio parse_weight(const std::string& tok, int line_no) {
    auto slash = tok.find('/');
    if (slash == std::string::npos) {
        int64 v = parse_int(tok, line_no, "a weight");
        if (v <= 0)
            fail(line_no, "weights must be positive");
        return Ratio(v);
    }
    int64 num = parse_int(tok.substr(0, slash), line_no, "a weight numerator");
    int64 den = parse_int(tok.substr(slash + 1), line_no, "a weight denominator");
    if (num <= 0 || den <= 0)
        fail(line_no, "weights must be positive");
    return Ratio(num, den);
}

} // namespace

Instance parse(std::string_view text) {
    Instance inst;
    std::vector<Ratio> raw_weights;
    std::vector<std::vector<int>> allowed_sets;
    bool header_seen = false;
    int64 declared_jobs = 0;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty())
            continue;

        if (!header_seen) {
            if (tok[0] != "p" || tok.size() != 3)
                fail(line_no, "expected header 'p <machines> <jobs>'");
            int64 machines = parse_int(tok[1], line_no, "a machine count");
            declared_jobs = parse_int(tok[2], line_no, "a job count");
            if (machines < 0 || declared_jobs < 0)
                fail(line_no, "machine and job counts must be nonnegative");
            inst.machine_count = static_cast<int>(machines);
            header_seen = true;
            continue;
        }

        if (static_cast<int64>(allowed_sets.size()) >= declared_jobs)
            fail(line_no, "more job lines than the header declares");

        auto check_machine = [&](int64 m) {
            if (m < 0 || m >= inst.machine_count)
                fail(line_no, "machine index " + std::to_string(m) + " out of range");
            return static_cast<int>(m);
        };

        if (tok[0] == "e") {
            if (tok.size() != 4)
                fail(line_no, "expected 'e <u> <v> <weight>'");
            int u = check_machine(parse_int(tok[1], line_no, "a machine index"));
            int v = check_machine(parse_int(tok[2], line_no, "a machine index"));
            std::vector<int> allowed{u};
            if (v != u)
                allowed.push_back(v);
            std::sort(allowed.begin(), allowed.end());
            allowed_sets.push_back(std::move(allowed));
            raw_weights.push_back(parse_weight(tok[3], line_no));
        } else if (tok[0] == "j") {
            if (tok.size() < 3)
                fail(line_no, "expected 'j <weight> <m1> [m2 ...]'");
            raw_weights.push_back(parse_weight(tok[1], line_no));
            std::vector<int> allowed;
            for (size_t i = 2; i < tok.size(); ++i)
                allowed.push_back(check_machine(parse_int(tok[i], line_no,
                                                          "a machine index")));
            std::sort(allowed.begin(), allowed.end());
            allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
            allowed_sets.push_back(std::move(allowed));
        } else {
            fail(line_no, "unknown directive '" + tok[0] + "'");
        }
    }

    if (!header_seen)
        throw input_error("empty instance file (missing 'p' header)");
    if (static_cast<int64>(allowed_sets.size()) != declared_jobs)
        throw input_error("header declares " + std::to_string(declared_jobs) +
                          " jobs but file has " + std::to_string(allowed_sets.size()));

    NormalizeResult norm = normalize(raw_weights);
    inst.weights = norm.weights;
    inst.jobs.reserve(allowed_sets.size());
    for (size_t i = 0; i < allowed_sets.size(); ++i)
        inst.jobs.push_back(Job{static_cast<int>(i), norm.classes[i],
                                std::move(allowed_sets[i])});
    validate(inst);
    return inst;
}

std::string serialize(const Instance& inst) {
    std::ostringstream os;
    os << "p " << inst.machine_count << ' ' << inst.jobs.size() << '\n';
    for (const Job& j : inst.jobs) {
        int64 w = 1;
        if (inst.weights)
            w = j.is_big() ? inst.weights->w_big : inst.weights->w_small;
        if (j.allowed.size() == 1)
            os << "e " << j.allowed[0] << ' ' << j.allowed[0] << ' ' << w << '\n';
        else if (j.allowed.size() == 2)
            os << "e " << j.allowed[0] << ' ' << j.allowed[1] << ' ' << w << '\n';
        else {
            os << "j " << w;
            for (int m : j.allowed)
                os << ' ' << m;
            os << '\n';
        }
    }
    return os.str();
}

Orientation parse_assignment(std::string_view text, int job_count) {
    Orientation o;
    o.machine_of.assign(job_count, -1);
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty())
            continue;
        if (tok.size() != 2)
            fail(line_no, "expected '<job-id> <machine-id>'");
        int64 job = parse_int(tok[0], line_no, "a job id");
        int64 machine = parse_int(tok[1], line_no, "a machine id");
        if (job < 0 || job >= job_count)
            fail(line_no, "job id " + std::to_string(job) + " out of range");
        if (o.machine_of[job] != -1)
            fail(line_no, "job " + std::to_string(job) + " assigned twice");
        o.machine_of[job] = static_cast<int>(machine);
    }
    for (int j = 0; j < job_count; ++j)
        if (o.machine_of[j] == -1)
            throw input_error("missing assignment for job " + std::to_string(j));
    return o;
}

std::string serialize_assignment(const Orientation& o) {
    std::ostringstream os;
    for (size_t j = 0; j < o.machine_of.size(); ++j)
        os << j << ' ' << o.machine_of[j] << '\n';
    return os.str();
}

Family family_from_string(std::string_view name) {
    if (name == "random")
        return Family::Random;
    if (name == "parallel")
        return Family::Parallel;
    if (name == "starmix")
        return Family::StarMix;
    if (name == "cyclemix")
        return Family::CycleMix;
    throw input_error("unknown family '" + std::string(name) +
                      "' (expected random|parallel|starmix|cyclemix)");
}

std::string to_string(Family f) {
    switch (f) {
    case Family::Random: return "random";
    case Family::Parallel: return "parallel";
    case Family::StarMix: return "starmix";
    case Family::CycleMix: return "cyclemix";
    }
    return "?";
}

namespace {

// mt19937_64 has a fixed algorithm, and modulo sampling keeps the streams
// identical across standard libraries (std distributions are not portable).
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    int below(int n) { return static_cast<int>(gen() % static_cast<std::uint64_t>(n)); }
    bool coin() { return (gen() & 1) != 0; }
};

} // namespace

Instance generate(Family family, int machines, int jobs, const Weights& pair,
                  std::uint64_t seed) {
    if (machines < 1 || jobs < 0)
        throw input_error("generator needs machines >= 1 and jobs >= 0");
    make_weights(pair.w_small, pair.w_big); // validates the pair
    Rng rng(seed);

    Instance inst;
    inst.machine_count = machines;
    inst.weights = pair;
    auto add_edge = [&](int u, int v, SizeClass cls) {
        std::vector<int> allowed{u};
        if (v != u)
            allowed.push_back(v);
        std::sort(allowed.begin(), allowed.end());
        inst.jobs.push_back(Job{static_cast<int>(inst.jobs.size()), cls,
                                std::move(allowed)});
    };

    switch (family) {
    case Family::Random:
        for (int i = 0; i < jobs; ++i) {
            SizeClass cls = rng.coin() ? SizeClass::Big : SizeClass::Small;
            add_edge(rng.below(machines), rng.below(machines), cls);
        }
        break;
    case Family::Parallel:
        if (machines < 2)
            throw input_error("parallel family needs at least 2 machines");
        for (int i = 0; i < jobs; ++i)
            add_edge(0, 1, SizeClass::Big);
        break;
    case Family::StarMix: {
        if (machines < 2)
            throw input_error("starmix family needs at least 2 machines");
        int leaves = machines - 1;
        int stars = (jobs + 1) / 2;
        for (int i = 0; i < stars; ++i)
            add_edge(0, 1 + i % leaves, SizeClass::Big);
        for (int i = stars; i < jobs; ++i) {
            int leaf = 1 + rng.below(leaves);
            add_edge(leaf, leaf, SizeClass::Small);
        }
        break;
    }
    case Family::CycleMix: {
        if (machines < 3)
            throw input_error("cyclemix family needs at least 3 machines");
        int cycle = (machines % 2 == 1) ? machines : machines - 1;
        if (jobs < cycle)
            throw input_error("cyclemix family needs at least " +
                              std::to_string(cycle) + " jobs for the big cycle");
        for (int i = 0; i < cycle; ++i)
            add_edge(i, (i + 1) % cycle, SizeClass::Big);
        for (int i = cycle; i < jobs; ++i) {
            int u = rng.below(machines);
            int v = rng.below(machines - 1);
            if (v >= u)
                ++v; // distinct endpoints
            add_edge(u, v, SizeClass::Small);
        }
        break;
    }
    }
    validate(inst);
    return inst;
}

} // namespace gbal
