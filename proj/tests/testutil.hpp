#pragma once

#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "mbe/graph.hpp"
#include "mbe/matroid.hpp"

namespace mbe::test {

inline WeightedGraph triangle(Weight w = 1) {
    return make_graph(3, {{0, 1, w}, {1, 2, w}, {0, 2, w}});
}

inline WeightedGraph path3(Weight w1 = 1, Weight w2 = 2) {
    return make_graph(3, {{0, 1, w1}, {1, 2, w2}});
}

inline WeightedGraph complete(int n, Weight w = 1) {
    std::vector<std::tuple<int, int, Weight>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v, w);
    }
    return make_graph(n, edges);
}

/// Random connected graph: a random spanning tree plus extra random edges,
/// weights uniform in [wlo, whi]. Simple (no multi-edges).
inline WeightedGraph random_connected_graph(std::mt19937& rng, int n,
                                            int extra_edges, Weight wlo,
                                            Weight whi) {
    std::vector<std::tuple<int, int, Weight>> edges;
    std::set<std::pair<int, int>> used;
    std::uniform_int_distribution<Weight> weight(wlo, whi);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        int u = parent(rng);
        edges.emplace_back(u, v, weight(rng));
        used.insert({u, v});
    }
    std::uniform_int_distribution<int> vert(0, n - 1);
    for (int k = 0; k < extra_edges; ++k) {
        int u = vert(rng), v = vert(rng);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (used.count({u, v})) continue;
        used.insert({u, v});
        edges.emplace_back(u, v, weight(rng));
    }
    return make_graph(n, edges);
}

/// Complete graph with uniformly random weights in [wlo, whi].
inline WeightedGraph random_complete(std::mt19937& rng, int n, Weight wlo,
                                     Weight whi) {
    std::uniform_int_distribution<Weight> weight(wlo, whi);
    std::vector<std::tuple<int, int, Weight>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v, weight(rng));
    }
    return make_graph(n, edges);
}

/// Canonical representation of a basis for set comparisons.
inline std::vector<std::vector<std::size_t>> canon(const Basis& b) {
    std::vector<std::vector<std::size_t>> lists;
    for (const auto& e : b.elements) lists.push_back(e.incidence.set_bits());
    std::sort(lists.begin(), lists.end());
    return lists;
}

using CanonBasis = std::vector<std::vector<std::size_t>>;

inline std::set<CanonBasis> canon_set(const std::vector<Basis>& bases) {
    std::set<CanonBasis> s;
    for (const auto& b : bases) s.insert(canon(b));
    return s;
}

} // namespace mbe::test
