#include "mbe/cycle_space.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "mbe/errors.hpp"

namespace mbe {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

void require_cycle_weights(const WeightedGraph& g) {
    for (const auto& e : g.edges()) {
        if (e.w <= 0) {
            throw std::invalid_argument(
                "cycle space requires positive edge weights");
        }
    }
}

// Canonical shortest-path tree from one root over the whole graph.
// Tie-break: fewer hops, then lexicographically smaller edge-id sequence
// read from the root, so the tree (and every Horton candidate) is unique.
struct CanonicalSpt {
    std::vector<Weight> dist;
    std::vector<int> hops;
    std::vector<int> parent_edge;   // position into g.edges(), -1 at root
    std::vector<int> parent_vertex; // -1 at root
};

std::vector<int> spt_edge_seq(const CanonicalSpt& spt, int v) {
    std::vector<int> seq;
    while (spt.parent_edge[v] >= 0) {
        seq.push_back(spt.parent_edge[v]);
        v = spt.parent_vertex[v];
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

CanonicalSpt canonical_spt(const WeightedGraph& g, int root) {
    const int n = g.vertex_count();
    CanonicalSpt spt;
    spt.dist.assign(n, kInf);
    spt.hops.assign(n, 0);
    spt.parent_edge.assign(n, -1);
    spt.parent_vertex.assign(n, -1);
    spt.dist[root] = 0;

    using Key = std::pair<Weight, int>; // (dist, hops)
    using Entry = std::pair<Key, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    pq.push({{0, 0}, root});
    std::vector<char> settled(n, 0);

    auto lex_better = [&](int z, int e, int y) {
        // Is path(z)+e lexicographically smaller than the current path(y)?
        std::vector<int> cand = spt_edge_seq(spt, z);
        cand.push_back(e);
        std::vector<int> cur = spt_edge_seq(spt, y);
        return std::lexicographical_compare(cand.begin(), cand.end(),
                                            cur.begin(), cur.end());
    };

    while (!pq.empty()) {
        auto [key, v] = pq.top();
        pq.pop();
        if (settled[v]) continue;
        settled[v] = 1;
        for (int pos : g.incident(v)) {
            const auto& edge = g.edge(pos);
            int u = edge.other(v);
            if (settled[u]) continue;
            Weight nd = spt.dist[v] + edge.w;
            int nh = spt.hops[v] + 1;
            bool better = false;
            if (nd < spt.dist[u] ||
                (nd == spt.dist[u] && nh < spt.hops[u])) {
                better = true;
            } else if (nd == spt.dist[u] && nh == spt.hops[u]) {
                better = lex_better(v, pos, u);
            }
            if (better) {
                spt.dist[u] = nd;
                spt.hops[u] = nh;
                spt.parent_edge[u] = pos;
                spt.parent_vertex[u] = v;
                pq.push({{nd, nh}, u});
            }
        }
    }
    return spt;
}

// Shortest-path DAG from `root` in the subgraph induced by vertices <= root:
// distances plus every tight incoming arc per vertex.
struct RestrictedDag {
    std::vector<Weight> dist;
    // preds[v]: (predecessor vertex, edge position) with
    // dist[pred] + w(edge) == dist[v].
    std::vector<std::vector<std::pair<int, int>>> preds;
};

RestrictedDag restricted_dag(const WeightedGraph& g, int root) {
    const int n = g.vertex_count();
    RestrictedDag dag;
    dag.dist.assign(n, kInf);
    dag.preds.assign(n, {});
    dag.dist[root] = 0;

    using Entry = std::pair<Weight, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    pq.push({0, root});
    std::vector<char> settled(n, 0);
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (settled[v]) continue;
        settled[v] = 1;
        for (int pos : g.incident(v)) {
            const auto& edge = g.edge(pos);
            int u = edge.other(v);
            if (u > root || settled[u]) continue;
            Weight nd = d + edge.w;
            if (nd < dag.dist[u]) {
                dag.dist[u] = nd;
                pq.push({nd, u});
            }
        }
    }
    for (int pos = 0; pos < g.edge_count(); ++pos) {
        const auto& edge = g.edge(pos);
        if (edge.u > root || edge.v > root) continue;
        for (auto [a, b] : {std::pair{edge.u, edge.v}, std::pair{edge.v, edge.u}}) {
            if (dag.dist[a] < kInf && dag.dist[a] + edge.w == dag.dist[b]) {
                dag.preds[b].emplace_back(a, pos);
            }
        }
    }
    for (auto& p : dag.preds) std::sort(p.begin(), p.end());
    return dag;
}

Weight cycle_weight(const WeightedGraph& g, const BitVec& edges) {
    Weight w = 0;
    for (const auto& e : g.edges()) {
        if (edges.test(e.id)) w += e.w;
    }
    return w;
}

} // namespace

std::vector<BitVec> fundamental_cycles(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> parent_edge(n, -1), parent_vertex(n, -1);
    std::vector<char> seen(n, 0), tree_edge(g.edge_count(), 0);
    std::vector<int> stack{0};
    if (n > 0) seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int pos : g.incident(v)) {
            int u = g.edge(pos).other(v);
            if (!seen[u]) {
                seen[u] = 1;
                parent_edge[u] = pos;
                parent_vertex[u] = v;
                tree_edge[pos] = 1;
                stack.push_back(u);
            }
        }
    }
    std::vector<BitVec> to_root(n, BitVec(g.dim()));
    std::vector<char> done(n, 0);
    std::function<void(int)> fill = [&](int v) {
        if (done[v]) return;
        done[v] = 1;
        if (parent_vertex[v] >= 0) {
            fill(parent_vertex[v]);
            to_root[v] = to_root[parent_vertex[v]];
            to_root[v].flip(g.edge(parent_edge[v]).id);
        }
    };
    for (int v = 0; v < n; ++v) fill(v);

    std::vector<BitVec> cycles;
    for (int pos = 0; pos < g.edge_count(); ++pos) {
        if (tree_edge[pos]) continue;
        const auto& e = g.edge(pos);
        BitVec c = to_root[e.u] ^ to_root[e.v];
        c.flip(e.id);
        cycles.push_back(std::move(c));
    }
    return cycles;
}

bool is_even_edge_set(const WeightedGraph& g, const BitVec& edges) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (const auto& e : g.edges()) {
        if (edges.test(e.id)) {
            ++deg[e.u];
            ++deg[e.v];
        }
    }
    for (int d : deg) {
        if (d % 2 != 0) return false;
    }
    return true;
}

std::vector<Cycle> horton_candidates(const WeightedGraph& g) {
    require_cycle_weights(g);
    const int n = g.vertex_count();
    std::vector<Cycle> out;
    std::unordered_set<BitVec, BitVecHash> seen;
    for (int v = 0; v < n; ++v) {
        CanonicalSpt spt = canonical_spt(g, v);
        std::vector<char> on_x_path(n, 0);
        for (int pos = 0; pos < g.edge_count(); ++pos) {
            const auto& e = g.edge(pos);
            if (spt.dist[e.u] >= kInf || spt.dist[e.v] >= kInf) continue;
            // Mark the vertices of the tree path to e.u.
            std::vector<int> xs;
            for (int x = e.u; x != -1; x = spt.parent_vertex[x]) {
                on_x_path[x] = 1;
                xs.push_back(x);
            }
            bool simple = true;
            BitVec edges(g.dim());
            bool uses_e = false;
            for (int y = e.v; y != -1; y = spt.parent_vertex[y]) {
                if (on_x_path[y] && y != v) {
                    simple = false;
                    break;
                }
                if (spt.parent_edge[y] >= 0) {
                    if (spt.parent_edge[y] == pos) uses_e = true;
                    edges.flip(g.edge(spt.parent_edge[y]).id);
                }
            }
            if (simple && !uses_e) {
                for (int x : xs) {
                    if (spt.parent_edge[x] >= 0) {
                        if (spt.parent_edge[x] == pos) uses_e = true;
                        edges.flip(g.edge(spt.parent_edge[x]).id);
                    }
                }
                if (!uses_e) {
                    edges.flip(e.id);
                    if (seen.insert(edges).second) {
                        out.push_back({edges, cycle_weight(g, edges)});
                    }
                }
            }
            for (int x : xs) on_x_path[x] = 0;
        }
    }
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.edges.lex_less(b.edges);
    });
    return out;
}

std::vector<Cycle> min_cycle_basis(const WeightedGraph& g) {
    require_cycle_weights(g);
    if (!g.connected()) {
        throw DisconnectedGraphError("min_cycle_basis: graph must be connected");
    }
    const int mu = g.edge_count() - g.vertex_count() + 1;
    std::vector<Cycle> basis;
    if (mu <= 0) return basis;
    gf2::EliminationBasis span(g.dim());
    for (const auto& c : horton_candidates(g)) {
        if (span.insert(c.edges)) {
            basis.push_back(c);
            if (static_cast<int>(basis.size()) == mu) return basis;
        }
    }
    throw std::logic_error(
        "min_cycle_basis: candidate set did not span the cycle space");
}

// ---------------------------------------------------------------------------
// Relevant-cycle stream.

struct RelevantCycleEnumerator::Impl {
    struct FamilyKey {
        Weight weight;
        int root;
        int edge_pos;
    };

    WeightedGraph g; // owned copy; streams outlive their construction site
    std::vector<RestrictedDag> dags;      // per root
    std::vector<FamilyKey> families;      // sorted by (weight, root, edge)
    std::size_t family_idx = 0;
    Weight level_weight = -1;             // weight of the running level
    gf2::EliminationBasis lighter;        // span of relevant cycles < level
    std::vector<BitVec> level_relevant;   // emitted at the current level
    std::deque<std::pair<Cycle, std::pair<int, int>>> pending;
    RelevantCycleStats* stats;

    Impl(const WeightedGraph& graph, RelevantCycleStats* st)
        : g(graph), lighter(graph.dim()), stats(st) {
        const int n = g.vertex_count();
        dags.reserve(n);
        for (int r = 0; r < n; ++r) dags.push_back(restricted_dag(g, r));
        for (int r = 0; r < n; ++r) {
            for (int pos = 0; pos < g.edge_count(); ++pos) {
                const auto& e = g.edge(pos);
                if (e.u > r || e.v > r) continue;
                if (dags[r].dist[e.u] >= kInf || dags[r].dist[e.v] >= kInf) {
                    continue;
                }
                Weight w = dags[r].dist[e.u] + dags[r].dist[e.v] + e.w;
                families.push_back({w, r, pos});
            }
        }
        std::sort(families.begin(), families.end(),
                  [](const FamilyKey& a, const FamilyKey& b) {
                      if (a.weight != b.weight) return a.weight < b.weight;
                      if (a.root != b.root) return a.root < b.root;
                      return a.edge_pos < b.edge_pos;
                  });
    }

    // The smallest-position edge of the circuit whose two root arcs are both
    // shortest in the root-restricted subgraph; every member is charged to
    // exactly one family this way.
    int canonical_edge(const BitVec& cycle, int root) const {
        // Walk around the circuit starting at root.
        std::vector<std::vector<int>> inc(g.vertex_count());
        for (int pos = 0; pos < g.edge_count(); ++pos) {
            if (cycle.test(g.edge(pos).id)) {
                inc[g.edge(pos).u].push_back(pos);
                inc[g.edge(pos).v].push_back(pos);
            }
        }
        std::vector<int> vseq{root};
        std::vector<int> eseq;
        int prev_edge = -1, cur = root;
        do {
            int next_edge = -1;
            for (int pos : inc[cur]) {
                if (pos != prev_edge) {
                    next_edge = pos;
                    break;
                }
            }
            eseq.push_back(next_edge);
            cur = g.edge(next_edge).other(cur);
            vseq.push_back(cur);
            prev_edge = next_edge;
        } while (cur != root);

        const auto& dag = dags[root];
        Weight total = 0;
        std::vector<Weight> prefix(eseq.size() + 1, 0);
        for (std::size_t i = 0; i < eseq.size(); ++i) {
            prefix[i + 1] = prefix[i] + g.edge(eseq[i]).w;
        }
        total = prefix[eseq.size()];
        int best = -1;
        for (std::size_t i = 0; i < eseq.size(); ++i) {
            // Arc to vseq[i] clockwise, arc to vseq[i+1] the other way.
            if (prefix[i] == dag.dist[vseq[i]] &&
                total - prefix[i + 1] == dag.dist[vseq[i + 1]]) {
                if (best < 0 || eseq[i] < best) best = eseq[i];
            }
        }
        return best;
    }

    // Enumerate the members of family (root, e): pairs of vertex-disjoint
    // shortest DAG paths to the endpoints, bridged by e.
    void expand_family(const FamilyKey& fam) {
        const auto& dag = dags[fam.root];
        const auto& e = g.edge(fam.edge_pos);
        std::unordered_set<BitVec, BitVecHash> family_seen;

        std::vector<char> in_first(g.vertex_count(), 0);
        BitVec first_edges(g.dim());
        std::vector<char> in_second(g.vertex_count(), 0);
        BitVec second_edges(g.dim());

        // DFS over predecessor arcs from `target` down to the root.
        std::function<void(int)> walk_second = [&](int v) {
            if (v == fam.root) {
                BitVec cycle = first_edges ^ second_edges;
                if (cycle.test(e.id)) return;
                cycle.flip(e.id);
                ++stats->members_generated;
                if (!family_seen.insert(cycle).second) return;
                if (canonical_edge(cycle, fam.root) != fam.edge_pos) return;
                ++stats->span_checks;
                if (lighter.contains(cycle)) return;
                Cycle out{cycle, fam.weight};
                pending.push_back({std::move(out), {fam.root, fam.edge_pos}});
                return;
            }
            for (auto [p, pos] : dag.preds[v]) {
                if (p != fam.root && (in_first[p] || in_second[p])) continue;
                in_second[p] = 1;
                second_edges.flip(g.edge(pos).id);
                walk_second(p);
                in_second[p] = 0;
                second_edges.flip(g.edge(pos).id);
            }
        };
        std::function<void(int)> walk_first = [&](int v) {
            if (v == fam.root) {
                // Second path must avoid the first one (except at the root).
                if (in_first[e.v] && e.v != fam.root) return;
                in_second[e.v] = 1;
                walk_second(e.v);
                in_second[e.v] = 0;
                return;
            }
            for (auto [p, pos] : dag.preds[v]) {
                if (in_first[p] && p != fam.root) continue;
                in_first[p] = 1;
                first_edges.flip(g.edge(pos).id);
                walk_first(p);
                in_first[p] = 0;
                first_edges.flip(g.edge(pos).id);
            }
        };
        in_first[e.u] = 1;
        walk_first(e.u);
        in_first[e.u] = 0;
    }

    void close_level() {
        for (const auto& c : level_relevant) lighter.insert(c);
        level_relevant.clear();
    }

    bool refill() {
        while (pending.empty() && family_idx < families.size()) {
            if (families[family_idx].weight != level_weight) {
                close_level();
                level_weight = families[family_idx].weight;
            }
            expand_family(families[family_idx]);
            ++family_idx;
        }
        return !pending.empty();
    }
};

RelevantCycleEnumerator::RelevantCycleEnumerator(
    const WeightedGraph& g, std::optional<std::uint64_t> limit)
    : limit_(limit) {
    require_cycle_weights(g);
    if (!g.connected()) {
        throw DisconnectedGraphError(
            "relevant-cycle enumeration requires a connected graph");
    }
    impl_ = std::make_unique<Impl>(g, &stats_);
}

RelevantCycleEnumerator::~RelevantCycleEnumerator() = default;

std::optional<Cycle> RelevantCycleEnumerator::next() {
    if (limit_ && emitted_ >= *limit_) return std::nullopt;
    if (impl_->pending.empty() && !impl_->refill()) return std::nullopt;
    auto [cycle, fam] = std::move(impl_->pending.front());
    impl_->pending.pop_front();
    impl_->level_relevant.push_back(cycle.edges);
    last_family_ = fam;
    ++emitted_;
    return cycle;
}

std::vector<PrototypeFamily> relevant_cycle_families(const WeightedGraph& g) {
    RelevantCycleEnumerator stream(g);
    std::vector<PrototypeFamily> out;
    while (auto c = stream.next()) {
        auto [root, edge] = stream.last_family();
        if (out.empty() || out.back().root != root ||
            out.back().bridge_edge != edge) {
            PrototypeFamily fam;
            fam.root = root;
            fam.bridge_edge = edge;
            fam.weight = c->weight;
            fam.prototype = *c;
            fam.member_count = 1;
            out.push_back(std::move(fam));
        } else {
            ++out.back().member_count;
        }
    }
    return out;
}

bool is_relevant_cycle_bruteforce(const WeightedGraph& g, const Cycle& c,
                                  const brute::SmallInstanceGuard& guard) {
    if (!is_even_edge_set(g, c.edges) || c.edges.none()) {
        throw std::invalid_argument(
            "is_relevant_cycle_bruteforce: not a nonzero cycle");
    }
    gf2::EliminationBasis lighter(g.dim());
    for (const auto& other : brute::all_cycles(g, guard)) {
        if (other.weight < c.weight) lighter.insert(other.edges);
    }
    return !lighter.contains(c.edges);
}

OracleBundle make_cycle_oracles(const WeightedGraph& g,
                                std::shared_ptr<ElementPool> pool) {
    require_cycle_weights(g);
    if (!g.connected()) {
        throw DisconnectedGraphError(
            "make_cycle_oracles: graph must be connected");
    }
    if (!pool) pool = std::make_shared<ElementPool>();
    auto graph = std::make_shared<const WeightedGraph>(g);

    OracleBundle b;
    b.rank = g.edge_count() - g.vertex_count() + 1;
    b.ind_fn = [](const std::vector<Element>& s) {
        std::vector<BitVec> rows;
        rows.reserve(s.size());
        for (const auto& e : s) rows.push_back(e.incidence);
        return gf2::is_independent(rows);
    };
    b.minb_fn = [graph, pool]() {
        std::vector<Element> elems;
        for (const auto& c : min_cycle_basis(*graph)) {
            elems.push_back(pool->intern(c.edges, c.weight));
        }
        return make_basis(std::move(elems));
    };
    auto stream = std::make_shared<RelevantCycleEnumerator>(*graph);
    b.rel_fn = [stream, pool, graph]() -> std::optional<Element> {
        std::optional<Cycle> c = stream->next();
        if (!c) return std::nullopt;
        return pool->intern(c->edges, c->weight);
    };
    return b;
}

} // namespace mbe
