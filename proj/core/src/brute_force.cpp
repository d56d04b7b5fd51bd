#include "mbe/brute_force.hpp"

#include <algorithm>
#include <functional>

#include "mbe/cycle_space.hpp"
#include "mbe/errors.hpp"
#include "mbe/gf2.hpp"

namespace mbe::brute {

void SmallInstanceGuard::check_cuts(const WeightedGraph& g) const {
    if (g.vertex_count() > max_vertices) {
        throw GuardExceededError("brute-force cut oracle: too many vertices");
    }
}

void SmallInstanceGuard::check_cycles(const WeightedGraph& g) const {
    int mu = g.edge_count() - g.vertex_count() + 1;
    if (mu > max_cyclomatic) {
        throw GuardExceededError(
            "brute-force cycle oracle: cyclomatic number too large");
    }
}

namespace {

Weight edge_set_weight(const WeightedGraph& g, const BitVec& edges) {
    Weight w = 0;
    for (const auto& e : g.edges()) {
        if (edges.test(e.id)) w += e.w;
    }
    return w;
}

} // namespace

std::vector<EdgeSet> all_cycles(const WeightedGraph& g,
                                const SmallInstanceGuard& guard) {
    guard.check_cycles(g);
    auto fundamentals = fundamental_cycles(g);
    const std::size_t mu = fundamentals.size();
    std::vector<EdgeSet> out;
    out.reserve((std::size_t{1} << mu) - 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << mu); ++mask) {
        BitVec c(g.dim());
        for (std::size_t i = 0; i < mu; ++i) {
            if (mask & (std::uint64_t{1} << i)) c ^= fundamentals[i];
        }
        out.push_back({c, edge_set_weight(g, c)});
    }
    return out;
}

std::vector<EdgeSet> all_cuts(const WeightedGraph& g,
                              const SmallInstanceGuard& guard) {
    guard.check_cuts(g);
    const int n = g.vertex_count();
    std::vector<EdgeSet> out;
    if (n < 2) return out;
    // Enumerate sides not containing vertex 0; complement symmetry makes
    // each cut appear exactly once.
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        std::vector<char> side(n, 0);
        for (int v = 1; v < n; ++v) {
            if (mask & (1u << (v - 1))) side[v] = 1;
        }
        out.push_back({g.cut_edges(side), g.cut_weight(side)});
    }
    return out;
}

std::vector<Basis> brute_min_bases(const std::vector<Element>& ground, int r) {
    std::vector<Element> sorted = ground;
    std::sort(sorted.begin(), sorted.end(),
              [](const Element& a, const Element& b) {
                  if (a.weight != b.weight) return a.weight < b.weight;
                  return a.id < b.id;
              });

    // Optimum weight by matroid greedy.
    Weight best = 0;
    {
        gf2::EliminationBasis span(sorted.empty() ? 0 : sorted[0].incidence.size());
        int taken = 0;
        for (const auto& e : sorted) {
            if (taken == r) break;
            if (span.insert(e.incidence)) {
                best += e.weight;
                ++taken;
            }
        }
        if (taken < r) return {};
    }

    std::vector<Basis> out;
    std::vector<Element> chosen;
    std::function<void(std::size_t, Weight, gf2::EliminationBasis&)> rec =
        [&](std::size_t idx, Weight w, gf2::EliminationBasis& span) {
            if (static_cast<int>(chosen.size()) == r) {
                if (w == best) out.push_back(make_basis(chosen));
                return;
            }
            int need = r - static_cast<int>(chosen.size());
            if (idx + need > sorted.size()) return;
            // Lightest possible completion from here.
            Weight lb = w;
            for (int k = 0; k < need; ++k) lb += sorted[idx + k].weight;
            if (lb > best) return;

            // Take sorted[idx] if it stays independent.
            gf2::EliminationBasis next = span;
            if (next.insert(sorted[idx].incidence)) {
                chosen.push_back(sorted[idx]);
                rec(idx + 1, w + sorted[idx].weight, next);
                chosen.pop_back();
            }
            rec(idx + 1, w, span);
        };
    if (!sorted.empty()) {
        gf2::EliminationBasis span(sorted[0].incidence.size());
        rec(0, 0, span);
    } else if (r == 0) {
        out.push_back(Basis{});
    }
    return out;
}

std::vector<Element> brute_relevant(const std::vector<Element>& ground, int r) {
    auto bases = brute_min_bases(ground, r);
    std::vector<char> in_union;
    std::vector<Element> out;
    for (const auto& b : bases) {
        for (const auto& e : b.elements) {
            if (e.id >= in_union.size()) in_union.resize(e.id + 1, 0);
            if (!in_union[e.id]) {
                in_union[e.id] = 1;
                out.push_back(e);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Element& a, const Element& b) { return a.id < b.id; });
    return out;
}

std::vector<Element> span_relevant(const std::vector<Element>& ground) {
    std::vector<Element> sorted = ground;
    std::sort(sorted.begin(), sorted.end(),
              [](const Element& a, const Element& b) {
                  if (a.weight != b.weight) return a.weight < b.weight;
                  return a.id < b.id;
              });
    std::vector<Element> out;
    if (sorted.empty()) return out;
    gf2::EliminationBasis lighter(sorted[0].incidence.size());
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j].weight == sorted[i].weight) ++j;
        for (std::size_t k = i; k < j; ++k) {
            if (!lighter.contains(sorted[k].incidence)) {
                out.push_back(sorted[k]);
            }
        }
        for (std::size_t k = i; k < j; ++k) lighter.insert(sorted[k].incidence);
        i = j;
    }
    std::sort(out.begin(), out.end(),
              [](const Element& a, const Element& b) { return a.id < b.id; });
    return out;
}

} // namespace mbe::brute
