#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "mbe/gomory_hu.hpp"
#include "mbe/graph.hpp"
#include "mbe/matroid.hpp"
#include "mbe/min_st_cuts.hpp"

namespace mbe {

struct Cut {
    BitVec edges;
    Weight weight = 0;
    std::vector<char> side; // witness (may be empty when unknown)
};

/// Vertex partition plus the table of lambda_max values between blocks,
/// keyed by unordered block-id pairs. Merged blocks get fresh ids.
class ContractionState {
public:
    explicit ContractionState(const WeightedGraph& g);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block_ids() const { return ids_; }
    std::size_t block_count() const { return blocks_.size(); }

    Weight lambda_max(std::size_t i, std::size_t j) const;

    /// Merge blocks i and j (positions); the new block gets a fresh id and
    /// the table rows fold together by max.
    void merge(std::size_t i, std::size_t j);

    VertexPartition partition() const;

private:
    std::map<std::pair<int, int>, Weight> table_; // key: (min id, max id)
    std::vector<std::vector<int>> blocks_;        // position -> vertices
    std::vector<int> ids_;                        // position -> stable id
    int next_id_ = 0;
};

/// Pairs (i,j) of block positions with lambda(x_i,x_j; G/X) equal to the
/// stored lambda_max — the pairs whose minimum cuts in the contracted graph
/// are relevant for G. Computed from a fresh Gomory-Hu tree of G/X.
std::vector<std::pair<std::size_t, std::size_t>> compute_lambda_pairs(
    const WeightedGraph& g, const ContractionState& state);

struct RelevantCutStats {
    std::uint64_t flow_computations = 0;
    std::uint64_t probes = 0; // per-cut bookkeeping steps
    std::vector<std::uint64_t> per_level_counts;
};

/// All relevant cuts of g in non-decreasing order of weight, each exactly
/// once. The descent repeatedly merges the block pair maximizing the
/// lambda_max table among the qualifying pairs (ties: lexicographically
/// smallest pair by block order), then emits the minimum cuts of each level
/// while unwinding.
class RelevantCutEnumerator {
public:
    explicit RelevantCutEnumerator(const WeightedGraph& g,
                                   std::optional<std::uint64_t> limit = std::nullopt);

    std::optional<Cut> next();
    const RelevantCutStats& stats() const { return stats_; }

private:
    struct Level {
        WeightedGraph contracted;
        int s, t; // contracted vertices chosen at this level
    };
    void descend();
    bool load_level(); // fill pending_ from the next level

    WeightedGraph g_;
    std::optional<std::uint64_t> limit_;
    std::vector<Level> levels_;
    std::size_t unwound_ = 0; // levels emitted so far (from the back)
    std::deque<Cut> pending_;
    std::uint64_t emitted_ = 0;
    bool descended_ = false;
    RelevantCutStats stats_;
};

/// IND-oracle: cuts are independent iff their incidence vectors are.
bool cut_ind_oracle(const std::vector<Cut>& cuts);

/// Minimum cut basis: one cut per Gomory-Hu tree edge (the bipartition
/// induced by deleting it). Requires a connected graph.
std::vector<Cut> cut_minb_oracle(const WeightedGraph& g);

/// True iff some vertex pair s,t has w(C) = lambda(s,t;G) with C an
/// s,t-cut. Throws std::invalid_argument when C is not a cut at all.
bool is_relevant_cut(const WeightedGraph& g, const Cut& c);

/// Oracle bundle for the cut-space matroid of g (rank n-1).
OracleBundle make_cut_oracles(const WeightedGraph& g,
                              std::shared_ptr<ElementPool> pool = nullptr);

} // namespace mbe
