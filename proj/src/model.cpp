#include "gbal/model.hpp"

#include <algorithm>
#include <numeric>

namespace gbal {

Weights make_weights(int64 w_small, int64 w_big) {
    if (w_small <= 0 || w_big <= 0)
        throw input_error("weights must be positive");
    if (w_small >= w_big)
        throw input_error("w_small must be strictly less than w_big");
    if (std::gcd(w_small, w_big) != 1)
        throw input_error("weights must be coprime (canonical form)");
    return Weights{w_small, w_big};
}

int64 Instance::small_count() const {
    return std::count_if(jobs.begin(), jobs.end(),
                         [](const Job& j) { return !j.is_big(); });
}

int64 Instance::big_count() const {
    return std::count_if(jobs.begin(), jobs.end(),
                         [](const Job& j) { return j.is_big(); });
}

void validate(const Instance& inst) {
    if (inst.machine_count < 0)
        throw input_error("negative machine count");
    for (size_t idx = 0; idx < inst.jobs.size(); ++idx) {
        const Job& j = inst.jobs[idx];
        if (j.id != static_cast<int>(idx))
            throw input_error("job ids must be sequential from 0");
        if (j.allowed.empty())
            throw input_error("job " + std::to_string(j.id) + " has an empty allowed set");
        if (!std::is_sorted(j.allowed.begin(), j.allowed.end()) ||
            std::adjacent_find(j.allowed.begin(), j.allowed.end()) != j.allowed.end())
            throw input_error("job " + std::to_string(j.id) +
                              " allowed set must be sorted and duplicate-free");
        if (j.allowed.front() < 0 || j.allowed.back() >= inst.machine_count)
            throw input_error("job " + std::to_string(j.id) +
                              " references a machine outside 0.." +
                              std::to_string(inst.machine_count - 1));
        if (j.is_big() && j.allowed.size() > 2)
            throw input_error("big job " + std::to_string(j.id) +
                              " may have at most two allowed machines");
    }
}

int64 load_total(const Instance& inst, const LoadValue& lv) {
    if (inst.weights)
        return lv.total(*inst.weights);
    return lv.big_count + lv.small_count;
}

NormalizeResult normalize(const std::vector<Ratio>& raw_weights) {
    for (const Ratio& w : raw_weights)
        if (w <= 0)
            throw input_error("job weights must be positive");

    // boost::rational keeps values reduced, so equality finds distinct values.
    std::vector<Ratio> distinct;
    for (const Ratio& w : raw_weights)
        if (std::find(distinct.begin(), distinct.end(), w) == distinct.end())
            distinct.push_back(w);
    if (distinct.size() > 2)
        throw input_error("instances may use at most two distinct job weights");

    NormalizeResult out;
    if (distinct.size() < 2) {
        // Single-weight instance: no big/small split exists.
        out.classes.assign(raw_weights.size(), SizeClass::Small);
        return out;
    }

    Ratio small = std::min(distinct[0], distinct[1]);
    Ratio big = std::max(distinct[0], distinct[1]);

    // Clear denominators, then reduce the integer pair to coprime form.
    int64 lcm = std::lcm(small.denominator(), big.denominator());
    int64 s = small.numerator() * (lcm / small.denominator());
    int64 b = big.numerator() * (lcm / big.denominator());
    int64 g = std::gcd(s, b);
    out.weights = Weights{s / g, b / g};

    out.classes.reserve(raw_weights.size());
    for (const Ratio& w : raw_weights)
        out.classes.push_back(w == big ? SizeClass::Big : SizeClass::Small);
    return out;
}

std::vector<LoadValue> machine_loads(const Instance& inst, const Orientation& o) {
    if (o.machine_of.size() != inst.jobs.size())
        throw input_error("orientation covers " + std::to_string(o.machine_of.size()) +
                          " jobs, instance has " + std::to_string(inst.jobs.size()));
    std::vector<LoadValue> loads(inst.machine_count);
    for (const Job& j : inst.jobs) {
        int m = o.machine_of[j.id];
        if (m < 0 || m >= inst.machine_count)
            throw input_error("job " + std::to_string(j.id) + " is not assigned");
        if (!std::binary_search(j.allowed.begin(), j.allowed.end(), m))
            throw input_error("job " + std::to_string(j.id) + " assigned to machine " +
                              std::to_string(m) + " outside its allowed set");
        if (j.is_big())
            ++loads[m].big_count;
        else
            ++loads[m].small_count;
    }
    return loads;
}

LoadValue makespan(const Instance& inst, const Orientation& o) {
    LoadValue best;
    for (const LoadValue& lv : machine_loads(inst, o))
        if (load_total(inst, lv) > load_total(inst, best))
            best = lv;
    return best;
}

bool ratio_within(const Instance& inst, const LoadValue& ms, const LoadValue& opt,
                  int64 num, int64 den) {
    int64 m = load_total(inst, ms);
    int64 o = load_total(inst, opt);
    if (o == 0 && m != 0)
        throw input_error("ratio against a zero optimum is undefined");
    return den * m <= num * o;
}

} // namespace gbal
