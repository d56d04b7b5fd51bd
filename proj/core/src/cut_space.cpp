#include "mbe/cut_space.hpp"

#include <algorithm>
#include <stdexcept>

#include "mbe/errors.hpp"
#include "mbe/gf2.hpp"
#include "mbe/max_flow.hpp"

namespace mbe {

namespace {

std::pair<int, int> ordered(int a, int b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

} // namespace

ContractionState::ContractionState(const WeightedGraph& g) {
    const int n = g.vertex_count();
    blocks_.resize(n);
    ids_.resize(n);
    for (int v = 0; v < n; ++v) {
        blocks_[v] = {v};
        ids_[v] = next_id_++;
    }
    if (n < 2) return;
    GomoryHuTree tree = gomory_hu(g);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            table_[ordered(ids_[u], ids_[v])] = tree.lambda(u, v);
        }
    }
}

Weight ContractionState::lambda_max(std::size_t i, std::size_t j) const {
    return table_.at(ordered(ids_[i], ids_[j]));
}

void ContractionState::merge(std::size_t i, std::size_t j) {
    if (i == j || i >= blocks_.size() || j >= blocks_.size()) {
        throw std::invalid_argument("ContractionState::merge: bad positions");
    }
    if (i > j) std::swap(i, j);
    int fresh = next_id_++;
    for (std::size_t r = 0; r < blocks_.size(); ++r) {
        if (r == i || r == j) continue;
        Weight m = std::max(table_.at(ordered(ids_[r], ids_[i])),
                            table_.at(ordered(ids_[r], ids_[j])));
        table_[ordered(ids_[r], fresh)] = m;
    }
    blocks_[i].insert(blocks_[i].end(), blocks_[j].begin(), blocks_[j].end());
    std::sort(blocks_[i].begin(), blocks_[i].end());
    ids_[i] = fresh;
    blocks_.erase(blocks_.begin() + static_cast<std::ptrdiff_t>(j));
    ids_.erase(ids_.begin() + static_cast<std::ptrdiff_t>(j));
}

VertexPartition ContractionState::partition() const {
    VertexPartition p;
    p.blocks = blocks_;
    return p;
}

std::vector<std::pair<std::size_t, std::size_t>> compute_lambda_pairs(
    const WeightedGraph& g, const ContractionState& state) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t k = state.block_count();
    if (k < 2) return out;
    Contraction c = contract(g, state.partition());
    GomoryHuTree tree = gomory_hu(c.graph);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (tree.lambda(static_cast<int>(i), static_cast<int>(j)) ==
                state.lambda_max(i, j)) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

RelevantCutEnumerator::RelevantCutEnumerator(const WeightedGraph& g,
                                             std::optional<std::uint64_t> limit)
    : g_(g), limit_(limit) {
    if (!g.connected()) {
        throw DisconnectedGraphError(
            "relevant-cut enumeration requires a connected graph");
    }
}

void RelevantCutEnumerator::descend() {
    descended_ = true;
    if (g_.vertex_count() < 2) return;
    ContractionState state(g_);
    stats_.flow_computations += g_.vertex_count() - 1; // initial table
    for (;;) {
        auto lambda_pairs = compute_lambda_pairs(g_, state);
        if (state.block_count() >= 2) {
            stats_.flow_computations += state.block_count() - 1;
        }
        if (lambda_pairs.empty()) break;
        // arg max of the stored lambda_max; ties -> lexicographically
        // smallest pair (block order = ascending smallest member).
        std::pair<std::size_t, std::size_t> pick = lambda_pairs[0];
        Weight best = state.lambda_max(pick.first, pick.second);
        for (const auto& pr : lambda_pairs) {
            Weight w = state.lambda_max(pr.first, pr.second);
            if (w > best) {
                best = w;
                pick = pr;
            }
        }
        Contraction c = contract(g_, state.partition());
        levels_.push_back({c.graph, static_cast<int>(pick.first),
                           static_cast<int>(pick.second)});
        state.merge(pick.first, pick.second);
    }
}

bool RelevantCutEnumerator::load_level() {
    while (unwound_ < levels_.size()) {
        // Unwind from the deepest level (lightest cuts) outward.
        const Level& level = levels_[levels_.size() - 1 - unwound_];
        ++unwound_;
        auto cuts = all_min_st_cuts(level.contracted, level.s, level.t);
        stats_.flow_computations += 1;
        stats_.per_level_counts.push_back(cuts.size());
        for (auto& cs : cuts) {
            ++stats_.probes;
            Cut cut;
            cut.edges = std::move(cs.edges);
            cut.weight = cs.weight;
            pending_.push_back(std::move(cut));
        }
        if (!pending_.empty()) return true;
    }
    return false;
}

std::optional<Cut> RelevantCutEnumerator::next() {
    if (limit_ && emitted_ >= *limit_) return std::nullopt;
    if (!descended_) descend();
    if (pending_.empty() && !load_level()) return std::nullopt;
    Cut out = std::move(pending_.front());
    pending_.pop_front();
    ++emitted_;
    return out;
}

bool cut_ind_oracle(const std::vector<Cut>& cuts) {
    std::vector<BitVec> rows;
    rows.reserve(cuts.size());
    for (const auto& c : cuts) rows.push_back(c.edges);
    return gf2::is_independent(rows);
}

std::vector<Cut> cut_minb_oracle(const WeightedGraph& g) {
    if (!g.connected()) {
        throw DisconnectedGraphError("cut_minb_oracle: graph must be connected");
    }
    GomoryHuTree tree = gomory_hu(g);
    std::vector<Cut> out;
    for (int i = 0; i < static_cast<int>(tree.edges().size()); ++i) {
        std::vector<char> side = tree.edge_side(i);
        Cut c;
        c.edges = g.cut_edges(side);
        c.weight = g.cut_weight(side);
        c.side = std::move(side);
        out.push_back(std::move(c));
    }
    return out;
}

bool is_relevant_cut(const WeightedGraph& g, const Cut& c) {
    const int n = g.vertex_count();
    // Components of G minus the cut's edges.
    std::vector<int> comp(n, -1);
    int comps = 0;
    for (int v = 0; v < n; ++v) {
        if (comp[v] != -1) continue;
        std::vector<int> stack{v};
        comp[v] = comps;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int pos : g.incident(x)) {
                const auto& e = g.edge(pos);
                if (c.edges.test(e.id)) continue;
                int u = e.other(x);
                if (comp[u] == -1) {
                    comp[u] = comps;
                    stack.push_back(u);
                }
            }
        }
        ++comps;
    }
    if (comps < 2) {
        throw std::invalid_argument("is_relevant_cut: edge set is not a cut");
    }
    if (comps > 30) {
        throw std::invalid_argument("is_relevant_cut: too many components");
    }
    GomoryHuTree tree = gomory_hu(g);
    // Sides realizable as unions of components; C must equal E(W;G) exactly
    // and be a minimum s,t-cut for some separated pair.
    for (std::uint32_t mask = 1; mask + 1 < (1u << comps); ++mask) {
        std::vector<char> side(n, 0);
        for (int v = 0; v < n; ++v) {
            if (mask & (1u << comp[v])) side[v] = 1;
        }
        if (!(g.cut_edges(side) == c.edges)) continue;
        for (int s = 0; s < n; ++s) {
            if (!side[s]) continue;
            for (int t = 0; t < n; ++t) {
                if (side[t]) continue;
                if (tree.lambda(s, t) == c.weight) return true;
            }
        }
    }
    return false;
}

OracleBundle make_cut_oracles(const WeightedGraph& g,
                              std::shared_ptr<ElementPool> pool) {
    if (!g.connected()) {
        throw DisconnectedGraphError("make_cut_oracles: graph must be connected");
    }
    if (!pool) pool = std::make_shared<ElementPool>();
    auto graph = std::make_shared<const WeightedGraph>(g);

    OracleBundle b;
    b.rank = g.vertex_count() - 1;
    b.ind_fn = [](const std::vector<Element>& s) {
        std::vector<BitVec> rows;
        rows.reserve(s.size());
        for (const auto& e : s) rows.push_back(e.incidence);
        return gf2::is_independent(rows);
    };
    b.minb_fn = [graph, pool]() {
        std::vector<Element> elems;
        for (const auto& c : cut_minb_oracle(*graph)) {
            elems.push_back(pool->intern(c.edges, c.weight));
        }
        return make_basis(std::move(elems));
    };
    auto stream = std::make_shared<RelevantCutEnumerator>(*graph);
    b.rel_fn = [stream, pool, graph]() -> std::optional<Element> {
        std::optional<Cut> c = stream->next();
        if (!c) return std::nullopt;
        return pool->intern(c->edges, c->weight);
    };
    return b;
}

} // namespace mbe
