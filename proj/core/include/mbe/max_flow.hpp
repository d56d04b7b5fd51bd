#pragma once

#include <vector>

#include "mbe/graph.hpp"

namespace mbe {

struct MinCut {
    Weight value = 0;
    std::vector<char> side; // side[v] = 1 iff v on the s side
};

/// Dinic's blocking-flow max-flow on an undirected multigraph with exact
/// integer capacities. Residual state is per-instance; build one per query.
class FlowNetwork {
public:
    explicit FlowNetwork(const WeightedGraph& g);

    /// Max s-t flow value; the residual graph is left behind for cut
    /// extraction and Picard-Queyranne style enumeration.
    Weight max_flow(int s, int t);

    /// Vertices reachable from s in the residual graph (call after max_flow).
    std::vector<char> source_side(int s) const;

    /// Residual capacity of arc `a` (2*pos for u->v, 2*pos+1 for v->u,
    /// where pos indexes the underlying graph's edge list).
    Weight residual(int arc) const { return arcs_[arc].cap - arcs_[arc].flow; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    int arc_from(int a) const { return arcs_[a].from; }
    int arc_to(int a) const { return arcs_[a].to; }

private:
    struct Arc {
        int from, to;
        Weight cap, flow;
    };
    bool bfs(int s, int t);
    Weight dfs(int v, int t, Weight limit);

    int n_;
    std::vector<Arc> arcs_;              // paired: a and a^1 are reverses
    std::vector<std::vector<int>> adj_;  // vertex -> arc indices
    std::vector<int> level_, iter_;
};

/// Minimum s,t-cut value and an s-side witness. Throws std::invalid_argument
/// when s == t.
MinCut min_cut(const WeightedGraph& g, int s, int t);

} // namespace mbe
