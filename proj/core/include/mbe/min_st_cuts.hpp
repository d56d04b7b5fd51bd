#pragma once

#include <cstdint>
#include <vector>

#include "mbe/bitvec.hpp"
#include "mbe/graph.hpp"

namespace mbe {

struct CutSet {
    BitVec edges;            // incidence over original edge ids
    Weight weight = 0;
    std::vector<char> side;  // witness side W (s in W), over g's vertices
};

/// All minimum s,t-cuts of g, each reported once as an edge-id set.
///
/// After a max flow, the source sides of minimum cuts are exactly the
/// residual-closed vertex sets containing s and avoiding t; enumerating
/// closed sets of the condensed residual DAG yields each cut once with
/// polynomial delay.
std::vector<CutSet> all_min_st_cuts(const WeightedGraph& g, int s, int t);

} // namespace mbe
