#include "mbe/max_flow.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace mbe {

FlowNetwork::FlowNetwork(const WeightedGraph& g)
    : n_(g.vertex_count()), adj_(g.vertex_count()) {
    arcs_.reserve(2 * g.edges().size());
    for (const auto& e : g.edges()) {
        int a = static_cast<int>(arcs_.size());
        arcs_.push_back({e.u, e.v, e.w, 0});
        arcs_.push_back({e.v, e.u, e.w, 0});
        adj_[e.u].push_back(a);
        adj_[e.v].push_back(a + 1);
    }
}

bool FlowNetwork::bfs(int s, int t) {
    level_.assign(n_, -1);
    std::queue<int> q;
    q.push(s);
    level_[s] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int a : adj_[v]) {
            if (residual(a) > 0 && level_[arcs_[a].to] < 0) {
                level_[arcs_[a].to] = level_[v] + 1;
                q.push(arcs_[a].to);
            }
        }
    }
    return level_[t] >= 0;
}

Weight FlowNetwork::dfs(int v, int t, Weight limit) {
    if (v == t) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
        int a = adj_[v][i];
        int to = arcs_[a].to;
        if (residual(a) > 0 && level_[to] == level_[v] + 1) {
            Weight pushed = dfs(to, t, std::min(limit, residual(a)));
            if (pushed > 0) {
                arcs_[a].flow += pushed;
                arcs_[a ^ 1].flow -= pushed;
                return pushed;
            }
        }
    }
    level_[v] = -1;
    return 0;
}

Weight FlowNetwork::max_flow(int s, int t) {
    Weight total = 0;
    while (bfs(s, t)) {
        iter_.assign(n_, 0);
        while (Weight pushed =
                   dfs(s, t, std::numeric_limits<Weight>::max())) {
            total += pushed;
        }
    }
    return total;
}

std::vector<char> FlowNetwork::source_side(int s) const {
    std::vector<char> side(n_, 0);
    std::vector<int> stack{s};
    side[s] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int a : adj_[v]) {
            if (residual(a) > 0 && !side[arcs_[a].to]) {
                side[arcs_[a].to] = 1;
                stack.push_back(arcs_[a].to);
            }
        }
    }
    return side;
}

MinCut min_cut(const WeightedGraph& g, int s, int t) {
    if (s == t) {
        throw std::invalid_argument("min_cut: s == t");
    }
    FlowNetwork net(g);
    MinCut out;
    out.value = net.max_flow(s, t);
    out.side = net.source_side(s);
    return out;
}

} // namespace mbe
