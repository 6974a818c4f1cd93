#include "gbal/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace gbal {

void validate(const DiNetwork& net) {
    if (net.node_count <= 0)
        throw input_error("network needs at least one node");
    auto in_range = [&](int v) { return v >= 0 && v < net.node_count; };
    if (!in_range(net.source) || !in_range(net.sink))
        throw input_error("source or sink node out of range");
    if (net.source == net.sink)
        throw input_error("source and sink must differ");
    for (const Arc& a : net.arcs) {
        if (!in_range(a.from) || !in_range(a.to))
            throw input_error("arc endpoint out of range");
        if (a.cap < 0)
            throw input_error("arc capacities must be nonnegative");
    }
}

namespace {

struct ResidualEdge {
    int to;
    int64 cap; // remaining capacity
    int pair;  // index of the reverse edge
};

struct Residual {
    std::vector<ResidualEdge> edges;       // 2*i forward, 2*i+1 reverse
    std::vector<std::vector<int>> adj;

    explicit Residual(const DiNetwork& net) : adj(net.node_count) {
        edges.reserve(net.arcs.size() * 2);
        for (const Arc& a : net.arcs) {
            int fwd = static_cast<int>(edges.size());
            edges.push_back({a.to, a.cap, fwd + 1});
            edges.push_back({a.from, 0, fwd});
            adj[a.from].push_back(fwd);
            adj[a.to].push_back(fwd + 1);
        }
    }

    // Flow pushed through arc i equals the capacity gained by its reverse.
    FlowResult extract(const DiNetwork& net, int64 value) const {
        FlowResult res;
        res.value = value;
        res.flow.resize(net.arcs.size());
        for (size_t i = 0; i < net.arcs.size(); ++i)
            res.flow[i] = edges[2 * i + 1].cap;
        return res;
    }
};

class Dinic {
public:
    explicit Dinic(const DiNetwork& net)
        : net_(net), r_(net), level_(net.node_count), iter_(net.node_count) {}

    FlowResult run() {
        int64 value = 0;
        while (bfs_levels()) {
            std::fill(iter_.begin(), iter_.end(), 0);
            while (int64 pushed = blocking_path(net_.source,
                                                std::numeric_limits<int64>::max()))
                value += pushed;
        }
        return r_.extract(net_, value);
    }

private:
    bool bfs_levels() {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[net_.source] = 0;
        q.push(net_.source);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : r_.adj[v]) {
                const ResidualEdge& re = r_.edges[e];
                if (re.cap > 0 && level_[re.to] < 0) {
                    level_[re.to] = level_[v] + 1;
                    q.push(re.to);
                }
            }
        }
        return level_[net_.sink] >= 0;
    }

    int64 blocking_path(int v, int64 limit) {
        if (v == net_.sink)
            return limit;
        for (size_t& i = iter_[v]; i < r_.adj[v].size(); ++i) {
            int e = r_.adj[v][i];
            ResidualEdge& re = r_.edges[e];
            if (re.cap <= 0 || level_[re.to] != level_[v] + 1)
                continue;
            int64 pushed = blocking_path(re.to, std::min(limit, re.cap));
            if (pushed > 0) {
                re.cap -= pushed;
                r_.edges[re.pair].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    const DiNetwork& net_;
    Residual r_;
    std::vector<int> level_;
    std::vector<size_t> iter_;
};

} // namespace

FlowResult max_flow(const DiNetwork& net) {
    validate(net);
    return Dinic(net).run();
}

FlowResult reference_max_flow(const DiNetwork& net) {
    validate(net);
    const int n = net.node_count;
    // Aggregated capacity matrix; parallel arcs collapse into one cell and
    // self-arcs are dropped (they can never carry flow).
    std::vector<std::vector<int64>> cap(n, std::vector<int64>(n, 0));
    for (const Arc& a : net.arcs)
        if (a.from != a.to)
            cap[a.from][a.to] += a.cap;
    std::vector<std::vector<int64>> res = cap;

    int64 value = 0;
    std::vector<int> parent(n);
    for (;;) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[net.source] = net.source;
        std::queue<int> q;
        q.push(net.source);
        while (!q.empty() && parent[net.sink] < 0) {
            int v = q.front();
            q.pop();
            for (int u = 0; u < n; ++u)
                if (parent[u] < 0 && res[v][u] > 0) {
                    parent[u] = v;
                    q.push(u);
                }
        }
        if (parent[net.sink] < 0)
            break;
        int64 bottleneck = std::numeric_limits<int64>::max();
        for (int v = net.sink; v != net.source; v = parent[v])
            bottleneck = std::min(bottleneck, res[parent[v]][v]);
        for (int v = net.sink; v != net.source; v = parent[v]) {
            res[parent[v]][v] -= bottleneck;
            res[v][parent[v]] += bottleneck;
        }
        value += bottleneck;
    }

    // Net pair flow is cap - res, clamped at zero where the net direction is
    // reversed; distribute it over parallel arcs in input order.
    std::vector<std::vector<int64>> remaining(n, std::vector<int64>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            remaining[u][v] = std::max<int64>(0, cap[u][v] - res[u][v]);

    FlowResult out;
    out.value = value;
    out.flow.assign(net.arcs.size(), 0);
    for (size_t i = 0; i < net.arcs.size(); ++i) {
        const Arc& a = net.arcs[i];
        if (a.from == a.to)
            continue;
        int64 take = std::min(remaining[a.from][a.to], a.cap);
        out.flow[i] = take;
        remaining[a.from][a.to] -= take;
    }
    return out;
}

void validate_flow(const DiNetwork& net, const FlowResult& res) {
    if (res.flow.size() != net.arcs.size())
        throw invariant_error("flow vector does not match arc count");
    std::vector<int64> net_out(net.node_count, 0);
    for (size_t i = 0; i < net.arcs.size(); ++i) {
        const Arc& a = net.arcs[i];
        int64 f = res.flow[i];
        if (f < 0 || f > a.cap)
            throw invariant_error("arc " + std::to_string(i) + " flow " +
                                  std::to_string(f) + " violates capacity " +
                                  std::to_string(a.cap));
        net_out[a.from] += f;
        net_out[a.to] -= f;
    }
    for (int v = 0; v < net.node_count; ++v) {
        if (v == net.source || v == net.sink)
            continue;
        if (net_out[v] != 0)
            throw invariant_error("flow not conserved at node " + std::to_string(v));
    }
    if (net_out[net.source] != res.value)
        throw invariant_error("flow value does not equal source net out-flow");
}

} // namespace gbal
