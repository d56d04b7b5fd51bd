#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mbe/bitvec.hpp"
#include "mbe/graph.hpp"

namespace mbe {

/// Coefficient vector in GF(2)^r, stored as its bin value: bit (r-j) of
/// `bin` is coordinate c_j, so the numeric order of bin values is the
/// strict total order on vectors. The unit vector with coordinate i set
/// has bin 2^(r-i). Supports r up to 62.
struct RVector {
    std::uint64_t bin = 0;

    auto operator<=>(const RVector&) const = default;
};

inline RVector rv_unit(int r, int i) { // c*_i, 1-based i
    return {std::uint64_t{1} << (r - i)};
}
inline RVector rv_ones(int r) {
    return {(std::uint64_t{1} << r) - 1};
}
inline bool rv_is_unit(RVector c) { return c.bin != 0 && (c.bin & (c.bin - 1)) == 0; }

/// bin + 1, except that the all-ones and all-zero vectors map to zero.
RVector succ(RVector c, int r);

/// Succ iterated 2^(r-i) times: adds 2^(r-i) to bin unless the increment
/// sequence passes through the all-ones vector, in which case the result is
/// zero (zero is absorbing). O(1) arithmetic.
RVector succ_pow(RVector c, int r, int i);

/// Set of r linearly independent RVectors (det of the row matrix is 1).
struct RBasis {
    std::vector<RVector> rows; // sorted by bin, ascending

    bool operator==(const RBasis&) const = default;
    bool contains(RVector c) const;
};

RBasis make_rbasis(std::vector<RVector> rows);
RBasis root_rbasis(int r);

/// Determinant over GF(2) of the r x r matrix whose rows are the vectors.
int rbasis_det(const std::vector<RVector>& rows, int r);

/// Parent of a non-root basis: remove y = min(B \ R), add the smallest
/// root vector z with (B \ {y}) u {z} a basis. Returns nullopt for the root.
std::optional<RBasis> rbasis_parent(const RBasis& b, int r);

/// All bases whose parent is p, in the order the reverse search visits them.
std::vector<RBasis> rbasis_children(const RBasis& p, int r);

/// Depth-first reverse search from the root basis; a node is emitted before
/// its children at even depth and after them at odd depth, which bounds the
/// delay by the per-node work. The full stream is every basis of GF(2)^r
/// exactly once.
class AllRBasesEnumerator {
public:
    explicit AllRBasesEnumerator(int r,
                                 std::optional<std::uint64_t> limit = std::nullopt);
    ~AllRBasesEnumerator();
    AllRBasesEnumerator(AllRBasesEnumerator&&) noexcept;
    AllRBasesEnumerator& operator=(AllRBasesEnumerator&&) noexcept;

    std::optional<RBasis> next();

    std::uint64_t det_probes() const { return det_probes_; }

private:
    struct Frame;
    bool step(); // advance the traversal until something is emitted

    int r_;
    std::optional<std::uint64_t> limit_;
    std::vector<Frame> stack_;
    std::vector<RBasis> out_;
    std::uint64_t emitted_ = 0;
    std::uint64_t det_probes_ = 0;
    bool done_ = false;
};

/// Number of bases of GF(2)^r: prod_{i<r} (2^r - 2^i) / r!.
std::uint64_t rbasis_count(int r);

/// Anchor basis of a concrete binary matroid; lifting maps coefficient
/// vectors to xors of anchor rows. The lift is injective on bases.
struct LiftContext {
    std::vector<BitVec> anchor; // r rows of length d, independent
};

/// {c . X : c in B}: one d-length vector per basis element.
std::vector<BitVec> lift(const RBasis& b, const LiftContext& ctx);

/// Anchor from the fundamental cycles of a spanning tree.
LiftContext cycle_anchor(const WeightedGraph& g);
/// Anchor from the n-1 single-vertex cuts E({v}), v = 0..n-2.
LiftContext cut_anchor(const WeightedGraph& g);

} // namespace mbe
