#pragma once

#include <vector>

#include "mbe/bitvec.hpp"
#include "mbe/graph.hpp"
#include "mbe/matroid.hpp"

namespace mbe::brute {

/// Exhaustive oracles refuse instances beyond these bounds.
struct SmallInstanceGuard {
    int max_vertices = 8;
    int max_cyclomatic = 12;

    void check_cuts(const WeightedGraph& g) const;
    void check_cycles(const WeightedGraph& g) const;
};

struct EdgeSet {
    BitVec edges;
    Weight weight = 0;
};

/// All 2^mu - 1 nonzero vectors of the cycle space (every nonzero xor of
/// fundamental cycles; each is an even-degree edge set).
std::vector<EdgeSet> all_cycles(const WeightedGraph& g,
                                const SmallInstanceGuard& guard = {});

/// All distinct cuts E(W;G) over the proper nonempty vertex subsets,
/// deduplicated by complement symmetry (sides avoiding vertex 0).
std::vector<EdgeSet> all_cuts(const WeightedGraph& g,
                              const SmallInstanceGuard& guard = {});

/// All independent r-subsets of minimum total weight, by exhaustive search
/// over the ground set sorted by weight. Subtrees that can no longer reach
/// the optimum are abandoned (a lossless bound, not a heuristic).
std::vector<Basis> brute_min_bases(const std::vector<Element>& ground, int r);

/// Union of all brute-force minimum bases.
std::vector<Element> brute_relevant(const std::vector<Element>& ground, int r);

/// Elements independent of the span of all strictly lighter ground
/// elements. Agrees with brute_relevant on matroid ground sets.
std::vector<Element> span_relevant(const std::vector<Element>& ground);

} // namespace mbe::brute
