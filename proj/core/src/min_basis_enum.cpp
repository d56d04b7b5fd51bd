#include "mbe/min_basis_enum.hpp"

#include <algorithm>
#include <stdexcept>

#include "mbe/errors.hpp"

namespace mbe {

namespace {

std::vector<std::uint32_t> with_id(std::vector<std::uint32_t> ids,
                                   std::uint32_t id) {
    ids.insert(std::upper_bound(ids.begin(), ids.end(), id), id);
    return ids;
}

bool id_in(const std::vector<std::uint32_t>& ids, std::uint32_t id) {
    return std::binary_search(ids.begin(), ids.end(), id);
}

Basis swap_element(const Basis& b, std::uint32_t out_id, const Element& in) {
    std::vector<Element> elems;
    elems.reserve(b.elements.size());
    for (const auto& e : b.elements) {
        if (e.id != out_id) elems.push_back(e);
    }
    elems.push_back(in);
    return make_basis(std::move(elems));
}

} // namespace

BranchResult branch_node(const SearchNode& node, const Element& y,
                         const OracleBundle& oracles) {
    if (node.representative.contains(y.id) || id_in(node.forbidden, y.id)) {
        throw std::invalid_argument(
            "branch_node: branching element must lie outside the "
            "representative and the forbidden set");
    }
    std::vector<Element> xs;
    for (const auto& x : ex_zero_out(node.representative, y, oracles)) {
        if (!id_in(node.mandatory, x.id)) xs.push_back(x);
    }

    BranchResult result;
    std::vector<std::uint32_t> mandatory = node.mandatory;
    for (std::size_t a = 0; a < xs.size(); ++a) {
        SearchNode child;
        child.mandatory = mandatory; // I u {x_1..x_{a-1}}
        child.forbidden = with_id(node.forbidden, xs[a].id);
        child.representative = swap_element(node.representative, xs[a].id, y);
        child.depth = node.depth + 1;
        result.others.push_back(std::move(child));
        mandatory = with_id(std::move(mandatory), xs[a].id);
    }
    result.eldest.mandatory = std::move(mandatory); // I u {x_1..x_b}
    result.eldest.forbidden = with_id(node.forbidden, y.id);
    result.eldest.representative = node.representative;
    result.eldest.depth = node.depth + 1;
    return result;
}

MinBasisEnumerator::MinBasisEnumerator(OracleBundle oracles,
                                       std::optional<std::uint64_t> limit)
    : oracles_(std::move(oracles)), limit_(limit) {
    root_ = oracles_.minb();
    pending_.push_back(root_);
    SearchNode rootNode;
    rootNode.representative = root_;
    current_.push_back(std::move(rootNode));
}

std::optional<Element> MinBasisEnumerator::pull_branching_element() {
    while (!rel_done_) {
        std::optional<Element> e = oracles_.rel();
        if (!e) {
            rel_done_ = true;
            break;
        }
        if (rel_seen_any_ && e->weight < last_rel_weight_) {
            throw StreamContractError(
                "relevant-element stream yielded decreasing weights");
        }
        rel_seen_any_ = true;
        last_rel_weight_ = e->weight;
        if (!root_.contains(e->id)) return e;
    }
    return std::nullopt;
}

bool MinBasisEnumerator::advance() {
    for (;;) {
        if (!branching_) {
            branching_ = pull_branching_element();
            if (!branching_) return false;
            node_idx_ = 0;
            next_level_.clear();
        }
        while (node_idx_ < current_.size()) {
            const SearchNode& node = current_[node_idx_];
            BranchResult children = branch_node(node, *branching_, oracles_);
            ++node_idx_;
            ++stats_.nodes_processed;
            bool produced = !children.others.empty();
            for (auto& child : children.others) {
                pending_.push_back(child.representative);
                next_level_.push_back(std::move(child));
            }
            next_level_.push_back(std::move(children.eldest));
            if (produced) return true;
        }
        current_ = std::move(next_level_);
        next_level_.clear();
        ++depth_;
        branching_.reset();
    }
}

std::optional<Basis> MinBasisEnumerator::next() {
    if (limit_ && stats_.emitted >= *limit_) return std::nullopt;
    if (pending_.empty() && !advance()) return std::nullopt;
    Basis out = std::move(pending_.front());
    pending_.pop_front();
    ++stats_.emitted;
    return out;
}

std::vector<WeightClass> discover_weight_classes(const Basis& min_basis) {
    std::vector<Element> sorted = min_basis.elements;
    std::sort(sorted.begin(), sorted.end(),
              [](const Element& a, const Element& b) {
                  if (a.weight != b.weight) return a.weight < b.weight;
                  return a.id < b.id;
              });
    std::vector<WeightClass> classes;
    for (const auto& e : sorted) {
        if (classes.empty() || classes.back().weight != e.weight) {
            classes.push_back({e.weight, 0, {}});
        }
        classes.back().multiplicity += 1;
        classes.back().basis_elements.push_back(e);
    }
    return classes;
}

ClassOracleContext::ClassOracleContext(OracleBundle master, Basis min_basis)
    : shared_(std::make_shared<SharedState>()),
      min_basis_(std::move(min_basis)) {
    shared_->master = std::move(master);
    classes_ = discover_weight_classes(min_basis_);
}

OracleBundle ClassOracleContext::bundle(std::size_t j) {
    if (j >= classes_.size()) {
        throw std::invalid_argument("ClassOracleContext: no such class");
    }
    const Weight class_weight = classes_[j].weight;
    std::vector<Element> rest; // B* minus the class block
    for (const auto& e : min_basis_.elements) {
        if (e.weight != class_weight) rest.push_back(e);
    }

    OracleBundle b;
    b.rank = classes_[j].multiplicity;
    b.counters = shared_->master.counters;
    auto shared = shared_;

    b.ind_fn = [shared, rest](const std::vector<Element>& s) {
        std::vector<Element> full = rest;
        full.insert(full.end(), s.begin(), s.end());
        return shared->master.ind_fn(full);
    };
    Basis block = make_basis(classes_[j].basis_elements);
    b.minb_fn = [block]() { return block; };
    b.rel_fn = [shared, j, class_weight]() -> std::optional<Element> {
        if (j < shared->active_class) {
            throw StreamContractError("weight classes consumed out of order");
        }
        shared->active_class = j;
        if (!shared->peeked && !shared->exhausted) {
            shared->peeked = shared->master.rel_fn();
            if (!shared->peeked) shared->exhausted = true;
        }
        if (shared->exhausted || !shared->peeked) return std::nullopt;
        if (shared->peeked->weight < class_weight) {
            throw StreamContractError("weight classes consumed out of order");
        }
        if (shared->peeked->weight > class_weight) return std::nullopt;
        Element out = *shared->peeked;
        shared->peeked.reset();
        return out;
    };
    return b;
}

FastMinBasisEnumerator::FastMinBasisEnumerator(
    OracleBundle oracles, std::optional<std::uint64_t> limit)
    : oracles_(std::move(oracles)), limit_(limit) {
    root_ = oracles_.minb();
    context_ = std::make_unique<ClassOracleContext>(oracles_, root_);
    class_bases_.resize(context_->class_count());
}

Basis FastMinBasisEnumerator::assemble_current() {
    std::vector<Element> elems;
    elems.reserve(root_.size());
    for (std::size_t j = 0; j < class_bases_.size(); ++j) {
        const Basis& block = class_bases_[j][digits_[j]];
        elems.insert(elems.end(), block.elements.begin(),
                     block.elements.end());
        stats_.element_updates += block.elements.size();
    }
    return make_basis(std::move(elems));
}

bool FastMinBasisEnumerator::advance_odometer() {
    if (digits_.empty()) return false;
    for (std::size_t pos = digits_.size(); pos-- > 0;) {
        if (digits_[pos] + 1 < class_bases_[pos].size()) {
            if (digits_[pos] == 0) ++deviations_;
            ++digits_[pos];
            return true;
        }
        if (digits_[pos] != 0) {
            --deviations_;
            digits_[pos] = 0;
        }
    }
    return false;
}

std::optional<Basis> FastMinBasisEnumerator::next() {
    if (limit_ && stats_.emitted >= *limit_) return std::nullopt;
    for (;;) {
        switch (phase_) {
        case Phase::EmitRoot: {
            phase_ = Phase::PerClass;
            class_idx_ = 0;
            if (context_->class_count() > 0) {
                class_enum_ = std::make_unique<MinBasisEnumerator>(
                    context_->bundle(0));
            }
            ++stats_.emitted;
            ++stats_.phase1_emitted;
            stats_.element_updates += root_.size();
            return root_;
        }
        case Phase::PerClass: {
            if (class_idx_ >= context_->class_count()) {
                digits_.assign(class_bases_.size(), 0);
                deviations_ = 0;
                phase_ = Phase::Combine;
                break;
            }
            std::optional<Basis> block = class_enum_->next();
            if (!block) {
                ++class_idx_;
                if (class_idx_ < context_->class_count()) {
                    class_enum_ = std::make_unique<MinBasisEnumerator>(
                        context_->bundle(class_idx_));
                }
                break;
            }
            bool is_anchor_block = class_bases_[class_idx_].empty();
            class_bases_[class_idx_].push_back(*block);
            if (is_anchor_block) break; // the anchor basis was emitted already
            // Single-class deviation: substitute the block into the anchor.
            std::vector<Element> elems;
            elems.reserve(root_.size());
            Weight cw = context_->weight_class(class_idx_).weight;
            for (const auto& e : root_.elements) {
                if (e.weight != cw) elems.push_back(e);
            }
            elems.insert(elems.end(), block->elements.begin(),
                         block->elements.end());
            stats_.element_updates += elems.size();
            ++stats_.emitted;
            ++stats_.phase1_emitted;
            return make_basis(std::move(elems));
        }
        case Phase::Combine: {
            for (;;) {
                if (!advance_odometer()) {
                    phase_ = Phase::Done;
                    break;
                }
                if (deviations_ >= 2) {
                    Basis out = assemble_current();
                    ++stats_.emitted;
                    ++stats_.phase2_emitted;
                    return out;
                }
            }
            break;
        }
        case Phase::Done:
            return std::nullopt;
        }
    }
}

} // namespace mbe
