#include "mbe/matroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbe {

bool Basis::contains(std::uint32_t id) const {
    auto it = std::lower_bound(
        elements.begin(), elements.end(), id,
        [](const Element& e, std::uint32_t v) { return e.id < v; });
    return it != elements.end() && it->id == id;
}

std::size_t Basis::hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& e : elements) {
        h ^= e.id + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

bool Basis::operator==(const Basis& other) const {
    if (elements.size() != other.elements.size()) return false;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].id != other.elements[i].id) return false;
    }
    return true;
}

Basis make_basis(std::vector<Element> elements) {
    std::sort(elements.begin(), elements.end(),
              [](const Element& a, const Element& b) { return a.id < b.id; });
    Basis b;
    b.total_weight = 0;
    for (const auto& e : elements) b.total_weight += e.weight;
    b.elements = std::move(elements);
    return b;
}

Element ElementPool::intern(const BitVec& incidence, Weight w) {
    auto it = index_.find(incidence);
    if (it != index_.end()) return elements_[it->second];
    Element e;
    e.id = static_cast<std::uint32_t>(elements_.size());
    e.weight = w;
    e.incidence = incidence;
    index_.emplace(incidence, e.id);
    elements_.push_back(e);
    return e;
}

std::optional<Element> ElementPool::find(const BitVec& incidence) const {
    auto it = index_.find(incidence);
    if (it == index_.end()) return std::nullopt;
    return elements_[it->second];
}

std::vector<Element> ex_zero_out(const Basis& b, const Element& y,
                                 const OracleBundle& oracles) {
    if (b.contains(y.id)) {
        throw std::invalid_argument("ex_zero_out: y already in basis");
    }
    std::vector<Element> out;
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
        if (b.elements[i].weight != y.weight) continue;
        std::vector<Element> swapped;
        swapped.reserve(b.elements.size());
        for (std::size_t j = 0; j < b.elements.size(); ++j) {
            if (j != i) swapped.push_back(b.elements[j]);
        }
        swapped.push_back(y);
        if (oracles.ind(swapped)) out.push_back(b.elements[i]);
    }
    return out;
}

} // namespace mbe
