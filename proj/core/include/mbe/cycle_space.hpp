#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <vector>

#include "mbe/brute_force.hpp"
#include "mbe/gf2.hpp"
#include "mbe/graph.hpp"
#include "mbe/matroid.hpp"

namespace mbe {

struct Cycle {
    BitVec edges;
    Weight weight = 0;
};

/// Every vertex degree in the spanned subgraph is even.
bool is_even_edge_set(const WeightedGraph& g, const BitVec& edges);

/// Fundamental cycles of a DFS spanning tree, one per non-tree edge; they
/// span the cycle space of a connected graph.
std::vector<BitVec> fundamental_cycles(const WeightedGraph& g);

/// Candidate cycles SP(v,x) + SP(v,y) + {xy} over all roots v and edges xy,
/// kept when the union is a simple circuit, deduplicated. Shortest paths
/// come from one canonical tree per root (ties broken by hop count, then by
/// the edge-id sequence), so the candidate set is deterministic.
std::vector<Cycle> horton_candidates(const WeightedGraph& g);

/// Minimum cycle basis: candidates sorted by weight, kept while independent.
/// Requires a connected graph with positive weights.
std::vector<Cycle> min_cycle_basis(const WeightedGraph& g);

/// Equal-weight family of relevant cycles sharing one generator: a root
/// vertex, a bridging edge, and the root's shortest-path DAG restricted to
/// vertices not exceeding the root.
struct PrototypeFamily {
    int root = 0;
    int bridge_edge = 0; // position into g.edges()
    Weight weight = 0;
    Cycle prototype;
    std::size_t member_count = 0;
};

struct RelevantCycleStats {
    std::uint64_t members_generated = 0;
    std::uint64_t span_checks = 0;
};

/// All relevant cycles of g, exactly once each, in non-decreasing order of
/// weight: prototype families are expanded level by level against the span
/// of the strictly lighter relevant cycles.
class RelevantCycleEnumerator {
public:
    explicit RelevantCycleEnumerator(const WeightedGraph& g,
                                     std::optional<std::uint64_t> limit = std::nullopt);
    ~RelevantCycleEnumerator();

    std::optional<Cycle> next();

    /// Family tag (root, bridge edge) of the cycle last returned by next().
    std::pair<int, int> last_family() const { return last_family_; }

    const RelevantCycleStats& stats() const { return stats_; }

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::pair<int, int> last_family_{-1, -1};
    RelevantCycleStats stats_;
    std::optional<std::uint64_t> limit_;
    std::uint64_t emitted_ = 0;
};

/// The family decomposition behind the stream: each family's weight, its
/// first member as the prototype, and how many members it contributed.
std::vector<PrototypeFamily> relevant_cycle_families(const WeightedGraph& g);

/// Test oracle: true iff c lies in some minimum cycle basis, decided by
/// independence from the span of all strictly lighter cycles. Exhausts the
/// whole cycle space, so the instance guard applies.
bool is_relevant_cycle_bruteforce(const WeightedGraph& g, const Cycle& c,
                                  const brute::SmallInstanceGuard& guard = {});

/// Oracle bundle for the cycle-space matroid of g (rank m - n + 1).
/// Requires a connected graph with positive weights.
OracleBundle make_cycle_oracles(const WeightedGraph& g,
                                std::shared_ptr<ElementPool> pool = nullptr);

} // namespace mbe
