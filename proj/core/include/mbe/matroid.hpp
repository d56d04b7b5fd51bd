#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mbe/bitvec.hpp"
#include "mbe/graph.hpp"

namespace mbe {

/// Ground-set member of a binary matroid: a stable id, an exact nonnegative
/// integer weight, and the incidence vector. Within one matroid instance the
/// id determines the incidence (ids are interned by incidence vector).
struct Element {
    std::uint32_t id = 0;
    Weight weight = 0;
    BitVec incidence;

    bool operator==(const Element& other) const { return id == other.id; }
};

/// Independent set of exactly r elements.
struct Basis {
    std::vector<Element> elements; // sorted by id
    Weight total_weight = 0;

    std::size_t size() const { return elements.size(); }
    bool contains(std::uint32_t id) const;
    std::size_t hash() const;
    bool operator==(const Basis& other) const;
};

Basis make_basis(std::vector<Element> elements);

struct BasisHash {
    std::size_t operator()(const Basis& b) const { return b.hash(); }
};

/// Assigns stable ids to elements by incidence vector.
class ElementPool {
public:
    Element intern(const BitVec& incidence, Weight w);
    std::optional<Element> find(const BitVec& incidence) const;
    std::size_t size() const { return elements_.size(); }

private:
    std::unordered_map<BitVec, std::uint32_t, BitVecHash> index_;
    std::vector<Element> elements_;
};

/// Oracle-call counters, shared so adapters and drivers see one tally.
struct OracleCounters {
    std::uint64_t ind_calls = 0;
    std::uint64_t rel_calls = 0;
    std::uint64_t minb_calls = 0;
};

/// The three oracles a matroid is implicitly given by, plus its rank.
/// `rel` is a stateful single-consumer stream yielding relevant elements in
/// non-decreasing weight order, each exactly once; nullopt marks the end.
struct OracleBundle {
    std::function<bool(const std::vector<Element>&)> ind_fn;
    std::function<Basis()> minb_fn;
    std::function<std::optional<Element>()> rel_fn;
    int rank = 0;
    std::shared_ptr<OracleCounters> counters = std::make_shared<OracleCounters>();

    bool ind(const std::vector<Element>& s) const {
        ++counters->ind_calls;
        return ind_fn(s);
    }
    Basis minb() const {
        ++counters->minb_calls;
        return minb_fn();
    }
    std::optional<Element> rel() const {
        ++counters->rel_calls;
        return rel_fn();
    }
};

/// w(y) - w(x); the pair is a zero-exchange iff this is 0.
inline Weight exchange_weight(const Element& x, const Element& y) {
    return y.weight - x.weight;
}

/// {x in B | w(x) = w(y) and (B \ {x}) u {y} independent}. At most r
/// IND-oracle calls. Throws std::invalid_argument when y is in B.
std::vector<Element> ex_zero_out(const Basis& b, const Element& y,
                                 const OracleBundle& oracles);

} // namespace mbe
