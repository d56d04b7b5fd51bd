#include "mbe/gomory_hu.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "mbe/errors.hpp"
#include "mbe/max_flow.hpp"

namespace mbe {

GomoryHuTree::GomoryHuTree(int n, std::vector<TreeEdge> edges)
    : n_(n), edges_(std::move(edges)), adj_(n) {
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        adj_[edges_[i].u].push_back(i);
        adj_[edges_[i].v].push_back(i);
    }
}

Weight GomoryHuTree::lambda(int s, int t) const {
    if (s == t) {
        throw std::invalid_argument("GomoryHuTree::lambda: s == t");
    }
    // DFS from s tracking the minimum label along the path.
    std::vector<Weight> best(n_, -1);
    std::vector<int> stack{s};
    best[s] = std::numeric_limits<Weight>::max();
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int idx : adj_[v]) {
            const auto& e = edges_[idx];
            int u = (e.u == v) ? e.v : e.u;
            if (best[u] < 0) {
                best[u] = std::min(best[v], e.lambda);
                stack.push_back(u);
            }
        }
    }
    return best[t];
}

Weight GomoryHuTree::lambda_max(const std::vector<int>& s_set,
                                const std::vector<int>& t_set) const {
    Weight m = -1;
    for (int a : s_set) {
        for (int b : t_set) {
            if (a != b) m = std::max(m, lambda(a, b));
        }
    }
    return m;
}

std::vector<char> GomoryHuTree::edge_side(int idx) const {
    std::vector<char> side(n_, 0);
    std::vector<int> stack{edges_[idx].u};
    side[edges_[idx].u] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int i : adj_[v]) {
            if (i == idx) continue;
            const auto& e = edges_[i];
            int u = (e.u == v) ? e.v : e.u;
            if (!side[u]) {
                side[u] = 1;
                stack.push_back(u);
            }
        }
    }
    return side;
}

namespace {

// Supernode state: the evolving tree lives on supernodes (vertex sets);
// splitting one supernode with a min cut reattaches the neighbor subtrees
// to whichever half their contracted block fell on.
struct SuperNode {
    std::vector<int> members;
};

struct SuperEdge {
    int a, b;
    Weight lambda;
};

} // namespace

GomoryHuTree gomory_hu(const WeightedGraph& g) {
    const int n = g.vertex_count();
    if (n == 0 || !g.connected()) {
        throw DisconnectedGraphError("gomory_hu: graph must be connected");
    }
    std::vector<SuperNode> nodes{SuperNode{{}}};
    nodes[0].members.resize(n);
    for (int v = 0; v < n; ++v) nodes[0].members[v] = v;
    std::vector<SuperEdge> tree;

    // Collect supernodes of each subtree hanging off `x` (excluding x).
    auto subtree_nodes = [&](int x) {
        std::vector<std::pair<int, std::vector<int>>> out; // (tree edge, node ids)
        for (int ei = 0; ei < static_cast<int>(tree.size()); ++ei) {
            if (tree[ei].a != x && tree[ei].b != x) continue;
            int start = (tree[ei].a == x) ? tree[ei].b : tree[ei].a;
            std::vector<int> comp{start};
            std::vector<char> seen(nodes.size(), 0);
            seen[x] = 1;
            seen[start] = 1;
            std::vector<int> stack{start};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (const auto& te : tree) {
                    int o = -1;
                    if (te.a == v) o = te.b;
                    if (te.b == v) o = te.a;
                    if (o >= 0 && !seen[o]) {
                        seen[o] = 1;
                        comp.push_back(o);
                        stack.push_back(o);
                    }
                }
            }
            out.emplace_back(ei, std::move(comp));
        }
        return out;
    };

    for (;;) {
        int x = -1;
        for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
            if (nodes[i].members.size() >= 2) {
                x = i;
                break;
            }
        }
        if (x < 0) break;

        int s = nodes[x].members[0];
        int t = nodes[x].members[1];

        // Partition: singletons for members of x, one block per subtree.
        VertexPartition part;
        for (int v : nodes[x].members) part.blocks.push_back({v});
        auto subtrees = subtree_nodes(x);
        std::vector<int> subtree_block(subtrees.size());
        for (std::size_t si = 0; si < subtrees.size(); ++si) {
            std::vector<int> block;
            for (int nid : subtrees[si].second) {
                block.insert(block.end(), nodes[nid].members.begin(),
                             nodes[nid].members.end());
            }
            subtree_block[si] = static_cast<int>(part.blocks.size());
            part.blocks.push_back(std::move(block));
        }
        Contraction c = contract(g, part);
        MinCut cut = min_cut(c.graph, c.block_of[s], c.block_of[t]);

        // Split x by the cut.
        SuperNode xs, xt;
        for (int v : nodes[x].members) {
            (cut.side[c.block_of[v]] ? xs : xt).members.push_back(v);
        }
        int xs_id = x;
        nodes[x] = xs;
        int xt_id = static_cast<int>(nodes.size());
        nodes.push_back(xt);

        // Reattach subtrees on t's side to the new node.
        for (std::size_t si = 0; si < subtrees.size(); ++si) {
            if (!cut.side[subtree_block[si]]) {
                auto& te = tree[subtrees[si].first];
                if (te.a == x) te.a = xt_id;
                if (te.b == x) te.b = xt_id;
            }
        }
        tree.push_back({xs_id, xt_id, cut.value});
    }

    std::vector<GomoryHuTree::TreeEdge> out;
    out.reserve(tree.size());
    for (const auto& te : tree) {
        out.push_back({nodes[te.a].members[0], nodes[te.b].members[0], te.lambda});
    }
    return GomoryHuTree(n, std::move(out));
}

} // namespace mbe
