#pragma once

#include <vector>

#include "mbe/graph.hpp"

namespace mbe {

/// Cut tree of a connected graph: a spanning tree on V(G) such that for all
/// s,t the minimum edge label on the s-t tree path equals lambda(s,t;G), and
/// deleting a tree edge induces a bipartition realizing a minimum cut
/// between its endpoints.
class GomoryHuTree {
public:
    struct TreeEdge {
        int u, v;
        Weight lambda;
    };

    GomoryHuTree(int n, std::vector<TreeEdge> edges);

    int vertex_count() const { return n_; }
    const std::vector<TreeEdge>& edges() const { return edges_; }

    /// lambda(s,t;G) = min edge label on the tree path.
    Weight lambda(int s, int t) const;

    /// Max over a in S, b in T (a != b) of lambda(a,b).
    Weight lambda_max(const std::vector<int>& s_set,
                      const std::vector<int>& t_set) const;

    /// Bipartition induced by deleting tree edge `idx`: side[v] = 1 iff v is
    /// in the component of edges()[idx].u.
    std::vector<char> edge_side(int idx) const;

private:
    int n_;
    std::vector<TreeEdge> edges_;
    std::vector<std::vector<int>> adj_; // vertex -> edge indices
};

/// Build the cut tree with n-1 max-flow computations, contracting the far
/// side of each split (the flow-equivalent shortcut is not enough here: the
/// tree bipartitions themselves are consumed downstream).
GomoryHuTree gomory_hu(const WeightedGraph& g);

} // namespace mbe
