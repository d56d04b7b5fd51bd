#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mbe/bitvec.hpp"

namespace mbe {

using Weight = std::int64_t;

/// One edge of a weighted undirected multigraph. `id` indexes the edge
/// universe of the *original* graph, so contracted graphs keep referring to
/// the same incidence-vector dimension.
struct EdgeRec {
    int u = 0;
    int v = 0;
    Weight w = 0;
    int id = 0;

    int other(int x) const { return x == u ? v : u; }
};

/// Weighted undirected multigraph. Vertices are 0..n-1. Self-loops are not
/// representable (they are dropped on parse). Multi-edges are kept.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(int n, std::vector<EdgeRec> edges, int dim);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    /// Dimension of incidence vectors (edge-universe size of the root graph).
    int dim() const { return dim_; }

    const std::vector<EdgeRec>& edges() const { return edges_; }
    const EdgeRec& edge(int pos) const { return edges_[pos]; }
    /// Positions into edges() incident to vertex v.
    const std::vector<int>& incident(int v) const { return inc_[v]; }

    Weight total_weight() const;
    bool connected() const;

    /// Incidence vector (over original edge ids) of E(W;G) for side W.
    BitVec cut_edges(const std::vector<char>& side) const;
    Weight cut_weight(const std::vector<char>& side) const;

    /// External (1-based input file) id for an original edge id; identity
    /// mapping when the graph was built programmatically.
    int external_id(int edge_id) const;
    void set_external_ids(std::vector<int> ids) { external_ids_ = std::move(ids); }

private:
    int n_ = 0;
    int dim_ = 0;
    std::vector<EdgeRec> edges_;
    std::vector<std::vector<int>> inc_;
    std::vector<int> external_ids_;
};

/// Blocks are disjoint vertex sets covering V(G).
struct VertexPartition {
    std::vector<std::vector<int>> blocks;

    static VertexPartition singletons(int n);
    bool valid(int n) const;
    std::size_t size() const { return blocks.size(); }
};

struct Contraction {
    WeightedGraph graph;            // one vertex per block
    std::vector<int> block_of;      // original vertex -> contracted vertex
    std::vector<std::vector<int>> members; // contracted vertex -> originals
};

/// Contract each block of the partition into a single vertex. Multi-edges
/// are kept; edges inside one block disappear. Edge ids stay those of `g`.
Contraction contract(const WeightedGraph& g, const VertexPartition& partition);

/// Parse the graph text format: first line `n m`, then m lines `u v w`
/// (1-based endpoints, nonnegative integer weight; edge id = line order).
/// Self-loops are silently dropped. Throws ParseError on malformed input.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph(const std::string& text);

/// Convenience builders used throughout the tests.
WeightedGraph make_graph(int n, const std::vector<std::tuple<int, int, Weight>>& edges);

} // namespace mbe
