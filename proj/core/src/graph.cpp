#include "mbe/graph.hpp"

#include <numeric>
#include <sstream>
#include <tuple>

#include "mbe/errors.hpp"

namespace mbe {

WeightedGraph::WeightedGraph(int n, std::vector<EdgeRec> edges, int dim)
    : n_(n), dim_(dim), edges_(std::move(edges)), inc_(n) {
    for (int pos = 0; pos < static_cast<int>(edges_.size()); ++pos) {
        inc_[edges_[pos].u].push_back(pos);
        inc_[edges_[pos].v].push_back(pos);
    }
}

Weight WeightedGraph::total_weight() const {
    Weight t = 0;
    for (const auto& e : edges_) t += e.w;
    return t;
}

bool WeightedGraph::connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int pos : inc_[v]) {
            int u = edges_[pos].other(v);
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                stack.push_back(u);
            }
        }
    }
    return visited == n_;
}

BitVec WeightedGraph::cut_edges(const std::vector<char>& side) const {
    BitVec out(dim_);
    for (const auto& e : edges_) {
        if (side[e.u] != side[e.v]) out.set(e.id);
    }
    return out;
}

Weight WeightedGraph::cut_weight(const std::vector<char>& side) const {
    Weight t = 0;
    for (const auto& e : edges_) {
        if (side[e.u] != side[e.v]) t += e.w;
    }
    return t;
}

int WeightedGraph::external_id(int edge_id) const {
    if (external_ids_.empty()) return edge_id + 1;
    return external_ids_[edge_id];
}

VertexPartition VertexPartition::singletons(int n) {
    VertexPartition p;
    p.blocks.resize(n);
    for (int v = 0; v < n; ++v) p.blocks[v] = {v};
    return p;
}

bool VertexPartition::valid(int n) const {
    std::vector<char> seen(n, 0);
    int covered = 0;
    for (const auto& block : blocks) {
        if (block.empty()) return false;
        for (int v : block) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = 1;
            ++covered;
        }
    }
    return covered == n;
}

Contraction contract(const WeightedGraph& g, const VertexPartition& partition) {
    if (!partition.valid(g.vertex_count())) {
        throw std::invalid_argument("contract: invalid vertex partition");
    }
    Contraction c;
    c.block_of.assign(g.vertex_count(), -1);
    c.members = partition.blocks;
    for (int b = 0; b < static_cast<int>(partition.blocks.size()); ++b) {
        for (int v : partition.blocks[b]) c.block_of[v] = b;
    }
    std::vector<EdgeRec> edges;
    for (const auto& e : g.edges()) {
        int bu = c.block_of[e.u], bv = c.block_of[e.v];
        if (bu != bv) edges.push_back({bu, bv, e.w, e.id});
    }
    c.graph = WeightedGraph(static_cast<int>(partition.blocks.size()),
                            std::move(edges), g.dim());
    return c;
}

WeightedGraph parse_graph(std::istream& in) {
    int n = 0;
    long long m = 0;
    if (!(in >> n >> m)) {
        throw ParseError("graph: expected header line `n m`");
    }
    if (n <= 0 || m < 0) {
        throw ParseError("graph: header values out of range");
    }
    std::vector<EdgeRec> edges;
    std::vector<int> external_ids;
    for (long long line = 1; line <= m; ++line) {
        long long u = 0, v = 0, w = 0;
        if (!(in >> u >> v >> w)) {
            throw ParseError("graph: expected `u v w` on edge line " +
                             std::to_string(line));
        }
        if (u < 1 || u > n || v < 1 || v > n) {
            throw ParseError("graph: vertex index out of range on line " +
                             std::to_string(line));
        }
        if (w < 0) {
            throw ParseError("graph: negative weight on line " +
                             std::to_string(line));
        }
        if (u == v) continue; // self-loops dropped
        int id = static_cast<int>(edges.size());
        edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1),
                         static_cast<Weight>(w), id});
        external_ids.push_back(static_cast<int>(line));
    }
    int dim = static_cast<int>(edges.size());
    WeightedGraph g(n, std::move(edges), dim);
    g.set_external_ids(std::move(external_ids));
    return g;
}

WeightedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

WeightedGraph make_graph(int n,
                         const std::vector<std::tuple<int, int, Weight>>& items) {
    std::vector<EdgeRec> edges;
    for (const auto& [u, v, w] : items) {
        int id = static_cast<int>(edges.size());
        edges.push_back({u, v, w, id});
    }
    int dim = static_cast<int>(edges.size());
    return WeightedGraph(n, std::move(edges), dim);
}

} // namespace mbe
