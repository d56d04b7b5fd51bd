#include "mbe/min_st_cuts.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "mbe/max_flow.hpp"

namespace mbe {

namespace {

// Condensation of the residual graph: scc ids, then DAG arcs scc(u)->scc(v)
// for residual arcs u->v.
struct Condensation {
    int count = 0;
    std::vector<int> comp;                 // vertex -> scc id
    std::vector<std::vector<int>> succ;    // scc -> residual successors
    std::vector<std::vector<int>> pred;
};

Condensation condense(int n, const std::vector<std::pair<int, int>>& arcs) {
    // Iterative Tarjan.
    Condensation c;
    c.comp.assign(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : arcs) adj[u].push_back(v);

    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<char> on_stack(n, 0);
    int next_index = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            auto& f = frames.back();
            if (f.child < adj[f.v].size()) {
                int w = adj[f.v][f.child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    int id = c.count++;
                    for (;;) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        c.comp[w] = id;
                        if (w == f.v) break;
                    }
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) {
                    low[frames.back().v] =
                        std::min(low[frames.back().v], low[v]);
                }
            }
        }
    }

    c.succ.assign(c.count, {});
    c.pred.assign(c.count, {});
    for (const auto& [u, v] : arcs) {
        int a = c.comp[u], b = c.comp[v];
        if (a != b) {
            c.succ[a].push_back(b);
            c.pred[b].push_back(a);
        }
    }
    for (auto& v : c.succ) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    for (auto& v : c.pred) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return c;
}

} // namespace

std::vector<CutSet> all_min_st_cuts(const WeightedGraph& g, int s, int t) {
    if (s == t) {
        throw std::invalid_argument("all_min_st_cuts: s == t");
    }
    FlowNetwork net(g);
    Weight value = net.max_flow(s, t);

    std::vector<std::pair<int, int>> residual_arcs;
    for (int a = 0; a < net.arc_count(); ++a) {
        if (net.residual(a) > 0) {
            residual_arcs.emplace_back(net.arc_from(a), net.arc_to(a));
        }
    }
    Condensation dag = condense(g.vertex_count(), residual_arcs);

    const int cs = dag.comp[s], ct = dag.comp[t];

    // Mandatory in: sccs residual-reachable from s (closure forces them).
    // Mandatory out: sccs that reach t. Free: the rest.
    std::vector<char> in_w(dag.count, 0), out_w(dag.count, 0);
    {
        std::vector<int> stack{cs};
        in_w[cs] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : dag.succ[v]) {
                if (!in_w[u]) {
                    in_w[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        stack = {ct};
        out_w[ct] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : dag.pred[v]) {
                if (!out_w[u]) {
                    out_w[u] = 1;
                    stack.push_back(u);
                }
            }
        }
    }

    std::vector<int> free_sccs;
    for (int i = 0; i < dag.count; ++i) {
        if (!in_w[i] && !out_w[i]) free_sccs.push_back(i);
    }
    // Deterministic processing order: by smallest contained vertex.
    std::vector<int> smallest(dag.count, g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        smallest[dag.comp[v]] = std::min(smallest[dag.comp[v]], v);
    }
    std::sort(free_sccs.begin(), free_sccs.end(),
              [&](int a, int b) { return smallest[a] < smallest[b]; });

    std::vector<CutSet> out;
    std::vector<int> choice(free_sccs.size(), -1); // -1 undecided, 0 out, 1 in
    std::vector<int> pos_of(dag.count, -1);
    for (std::size_t i = 0; i < free_sccs.size(); ++i) {
        pos_of[free_sccs[i]] = static_cast<int>(i);
    }

    auto emit = [&]() {
        std::vector<char> side(g.vertex_count(), 0);
        for (int v = 0; v < g.vertex_count(); ++v) {
            int cc = dag.comp[v];
            if (in_w[cc]) {
                side[v] = 1;
            } else if (!out_w[cc]) {
                side[v] = static_cast<char>(choice[pos_of[cc]] == 1);
            }
        }
        CutSet cut;
        cut.edges = g.cut_edges(side);
        cut.weight = g.cut_weight(side);
        cut.side = std::move(side);
        out.push_back(std::move(cut));
    };

    // Enumerate residual-closed subsets of the free sccs: including a node
    // forces its successors in; excluding it forces its predecessors out.
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == free_sccs.size()) {
            emit();
            return;
        }
        int node = free_sccs[i];
        if (choice[i] != -1) {
            rec(i + 1);
            return;
        }
        // Try node in W: propagate closure to free successors.
        std::vector<std::size_t> forced;
        std::function<bool(int, int)> force = [&](int v, int val) {
            int p = pos_of[v];
            if (p < 0) return true; // mandatory nodes were screened already
            if (choice[p] != -1) return choice[p] == val;
            choice[p] = val;
            forced.push_back(static_cast<std::size_t>(p));
            const auto& next = (val == 1) ? dag.succ[v] : dag.pred[v];
            for (int u : next) {
                if (val == 1 && out_w[u]) return false;
                if (val == 0 && in_w[u]) return false;
                if (!force(u, val)) return false;
            }
            return true;
        };
        auto undo = [&]() {
            for (auto p : forced) choice[p] = -1;
            forced.clear();
        };

        if (force(node, 1)) rec(i + 1);
        undo();
        if (force(node, 0)) rec(i + 1);
        undo();
    };
    rec(0);

    for (const auto& c : out) {
        if (c.weight != value) {
            throw std::logic_error("all_min_st_cuts: enumerated cut weight "
                                   "does not match the max-flow value");
        }
    }
    return out;
}

} // namespace mbe
