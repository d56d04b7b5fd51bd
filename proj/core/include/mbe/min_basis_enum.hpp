#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "mbe/matroid.hpp"

namespace mbe {

/// Search-tree node: mandatory set I, forbidden set O, and the
/// representative minimum basis of the subfamily it stands for.
struct SearchNode {
    std::vector<std::uint32_t> mandatory; // sorted ids (I)
    std::vector<std::uint32_t> forbidden; // sorted ids (O)
    Basis representative;                 // R*_{I,O}
    int depth = 0;                        // |O|
};

struct BranchResult {
    SearchNode eldest;              // keeps the parent's representative
    std::vector<SearchNode> others; // fresh representatives, output-worthy
};

/// Split a node on branching element y (relevant, outside representative
/// and O). With {x_1..x_b} = ex_zero_out(rep, y) \ I, the eldest child is
/// <I u {x_1..x_b}, O u {y}> and child a is <I u {x_1..x_{a-1}}, O u {x_a}>
/// with representative (rep \ {x_a}) u {y}.
BranchResult branch_node(const SearchNode& node, const Element& y,
                         const OracleBundle& oracles);

struct EnumStats {
    std::uint64_t emitted = 0;
    std::uint64_t nodes_processed = 0;
};

/// Breadth-first enumeration of all minimum bases through the oracles.
/// Pull-based single-consumer stream: next() yields pairwise distinct
/// minimum bases, starting with minb(), until the relevant-element stream
/// is exhausted or `limit` outputs were produced.
///
/// Per-depth node lists are kept for the whole run (the space cost grows
/// with the output count).
class MinBasisEnumerator {
public:
    explicit MinBasisEnumerator(OracleBundle oracles,
                                std::optional<std::uint64_t> limit = std::nullopt);

    std::optional<Basis> next();

    int current_depth() const { return depth_; }
    const EnumStats& stats() const { return stats_; }
    const Basis& root_basis() const { return root_; }

private:
    std::optional<Element> pull_branching_element();
    bool advance(); // process nodes until something lands in pending_

    OracleBundle oracles_;
    std::optional<std::uint64_t> limit_;
    Basis root_;
    std::vector<SearchNode> current_, next_level_;
    std::size_t node_idx_ = 0;
    int depth_ = 0;
    std::optional<Element> branching_; // y_{h+1} for the running depth
    std::deque<Basis> pending_;
    bool rel_done_ = false;
    Weight last_rel_weight_ = 0;
    bool rel_seen_any_ = false;
    EnumStats stats_;
};

/// Maximal groups of equal-weight elements of a minimum basis, in
/// increasing weight; multiplicities sum to the rank.
struct WeightClass {
    Weight weight = 0;
    int multiplicity = 0;
    std::vector<Element> basis_elements; // B* intersected with the class
};

std::vector<WeightClass> discover_weight_classes(const Basis& min_basis);

/// Adapters exposing each weight class of the solution space as a matroid
/// of its own, sharing the master relevant-element stream. Classes must be
/// consumed in increasing order; bundle(j) pulls from the shared stream and
/// throws StreamContractError on out-of-order use.
class ClassOracleContext {
public:
    ClassOracleContext(OracleBundle master, Basis min_basis);

    std::size_t class_count() const { return classes_.size(); }
    const WeightClass& weight_class(std::size_t j) const { return classes_[j]; }

    /// Oracle bundle for class j (0-based). IND answers by substituting the
    /// candidate block into the anchor minimum basis; MinB returns the
    /// anchor's block; REL filters the master stream to this class's weight.
    OracleBundle bundle(std::size_t j);

private:
    struct SharedState {
        OracleBundle master;
        std::optional<Element> peeked;
        bool exhausted = false;
        std::size_t active_class = 0;
    };
    std::shared_ptr<SharedState> shared_;
    Basis min_basis_;
    std::vector<WeightClass> classes_;
};

struct FastEnumStats {
    std::uint64_t emitted = 0;
    std::uint64_t phase1_emitted = 0;
    std::uint64_t phase2_emitted = 0;
    // Element writes into the assembled output (sampled by delay tests).
    std::uint64_t element_updates = 0;
};

/// Two-phase driver: phase 1 emits the anchor minimum basis and then, class
/// by class, every single-class deviation found by the search-tree
/// enumerator run on the class matroid. Phase 2 emits every combination of
/// stored class bases deviating in at least two classes, odometer order,
/// O(r) element updates per output. The union over both phases is exactly
/// the set of minimum bases, duplicate-free.
class FastMinBasisEnumerator {
public:
    explicit FastMinBasisEnumerator(OracleBundle oracles,
                                    std::optional<std::uint64_t> limit = std::nullopt);

    std::optional<Basis> next();

    const FastEnumStats& stats() const { return stats_; }
    bool in_phase2() const { return phase_ == Phase::Combine; }

private:
    enum class Phase { EmitRoot, PerClass, Combine, Done };

    Basis assemble_current();
    bool advance_odometer();

    OracleBundle oracles_;
    std::optional<std::uint64_t> limit_;
    Basis root_;
    std::unique_ptr<ClassOracleContext> context_;
    Phase phase_ = Phase::EmitRoot;

    // Phase 1 state.
    std::size_t class_idx_ = 0;
    std::unique_ptr<MinBasisEnumerator> class_enum_;
    bool class_root_skipped_ = false;

    // Stored class bases; entry 0 of each list is the anchor block.
    std::vector<std::vector<Basis>> class_bases_;

    // Phase 2 odometer.
    std::vector<std::size_t> digits_;
    std::size_t deviations_ = 0;
    bool odometer_started_ = false;

    FastEnumStats stats_;
};

} // namespace mbe
