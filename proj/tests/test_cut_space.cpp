#include <doctest.h>

#include <random>
#include <set>

#include "mbe/brute_force.hpp"
#include "mbe/cut_space.hpp"
#include "mbe/graph.hpp"
#include "mbe/max_flow.hpp"
#include "testutil.hpp"

using namespace mbe;

namespace {

Cut cut_of(const WeightedGraph& g, std::initializer_list<int> positions) {
    Cut c;
    c.edges = BitVec(g.dim());
    for (int pos : positions) {
        c.edges.set(g.edge(pos).id);
        c.weight += g.edge(pos).w;
    }
    return c;
}

std::set<std::vector<std::size_t>> brute_relevant_cuts(const WeightedGraph& g) {
    std::set<std::vector<std::size_t>> out;
    for (const auto& c : brute::all_cuts(g)) {
        Cut cut{c.edges, c.weight, {}};
        if (is_relevant_cut(g, cut)) out.insert(c.edges.set_bits());
    }
    return out;
}

} // namespace

TEST_CASE("cut_ind_oracle") {
    WeightedGraph k3 = test::triangle();
    Cut c0 = cut_of(k3, {0, 2}); // E({v1})
    Cut c1 = cut_of(k3, {0, 1}); // E({v2})
    Cut c2 = cut_of(k3, {1, 2}); // E({v3})
    CHECK(cut_ind_oracle({}));
    CHECK(cut_ind_oracle({c0, c1}));
    CHECK(cut_ind_oracle({c0, c2}));
    CHECK_FALSE(cut_ind_oracle({c0, c1, c2})); // xor of all three is zero
}

TEST_CASE("cut_minb_oracle") {
    auto p3 = cut_minb_oracle(test::path3(1, 2));
    REQUIRE(p3.size() == 2);
    CHECK(p3[0].weight + p3[1].weight == 3);

    auto k3 = cut_minb_oracle(test::triangle());
    REQUIRE(k3.size() == 2);
    CHECK(k3[0].weight + k3[1].weight == 4);

    auto single = cut_minb_oracle(make_graph(2, {{0, 1, 7}}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].weight == 7);
}

TEST_CASE("is_relevant_cut on P3") {
    WeightedGraph p3 = test::path3(1, 2);
    CHECK(is_relevant_cut(p3, cut_of(p3, {0})));
    CHECK(is_relevant_cut(p3, cut_of(p3, {1})));
    CHECK_FALSE(is_relevant_cut(p3, cut_of(p3, {0, 1}))); // weight 3 > all lambda
    Cut not_a_cut;
    not_a_cut.edges = BitVec(p3.dim());
    CHECK_THROWS_AS(is_relevant_cut(p3, not_a_cut), std::invalid_argument);
}

TEST_CASE("contraction state tracks lambda_max") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 3 + trial % 4;
        WeightedGraph g = test::random_connected_graph(rng, n, n, 0, 4);
        ContractionState state(g);
        // Merge two random blocks a few times and check the table against a
        // direct max over member pairs.
        std::uniform_int_distribution<std::size_t> pick(0, 100);
        while (state.block_count() > 2) {
            std::size_t i = pick(rng) % state.block_count();
            std::size_t j = pick(rng) % state.block_count();
            if (i == j) continue;
            state.merge(std::min(i, j), std::max(i, j));
            for (std::size_t a = 0; a < state.block_count(); ++a) {
                for (std::size_t b = a + 1; b < state.block_count(); ++b) {
                    Weight direct = -1;
                    for (int u : state.blocks()[a]) {
                        for (int v : state.blocks()[b]) {
                            direct = std::max(direct, min_cut(g, u, v).value);
                        }
                    }
                    CHECK(state.lambda_max(a, b) == direct);
                }
            }
        }
    }
}

TEST_CASE("compute_lambda_pairs on hand graphs") {
    WeightedGraph p3 = test::path3(1, 2);
    ContractionState s(p3);
    auto pairs = compute_lambda_pairs(p3, s);
    CHECK(pairs.size() == 3); // all singletons: lambda equals its own max

    s.merge(1, 2); // blocks {v1}, {v2,v3}
    auto merged_pairs = compute_lambda_pairs(p3, s);
    REQUIRE(merged_pairs.size() == 1);
    CHECK(merged_pairs[0] == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("relevant cut stream on hand graphs") {
    WeightedGraph p3 = test::path3(1, 2);
    RelevantCutEnumerator stream(p3);
    auto first = stream.next();
    auto second = stream.next();
    REQUIRE(first);
    REQUIRE(second);
    CHECK(first->weight == 1);
    CHECK(first->edges == BitVec::from_string("10"));
    CHECK(second->weight == 2);
    CHECK(second->edges == BitVec::from_string("01"));
    CHECK_FALSE(stream.next());

    RelevantCutEnumerator k3stream(test::triangle());
    int count = 0;
    while (auto c = k3stream.next()) {
        CHECK(c->weight == 2);
        ++count;
    }
    CHECK(count == 3);

    WeightedGraph single = make_graph(2, {{0, 1, 4}});
    RelevantCutEnumerator sstream(single);
    auto only = sstream.next();
    REQUIRE(only);
    CHECK(only->weight == 4);
    CHECK_FALSE(sstream.next());
}

TEST_CASE("relevant cut stream equals brute force, ordered, no dups") {
    std::mt19937 rng(505);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 6;
        WeightedGraph g = test::random_connected_graph(rng, n, n + 2, 0, 4);

        std::set<std::vector<std::size_t>> got;
        Weight prev = -1;
        std::size_t emitted = 0;
        RelevantCutEnumerator stream(g);
        while (auto c = stream.next()) {
            CHECK(c->weight >= prev);
            prev = c->weight;
            got.insert(c->edges.set_bits());
            ++emitted;
            CHECK(is_relevant_cut(g, *c));
        }
        CHECK(emitted == got.size());
        CHECK(got == brute_relevant_cuts(g));

        // Per-level emission counts sum to the whole relevant set: the
        // levels of the recursion partition it.
        std::uint64_t level_sum = 0;
        for (auto c : stream.stats().per_level_counts) level_sum += c;
        CHECK(level_sum == emitted);

        // Every minimum-cut-basis element appears in the stream.
        for (const auto& c : cut_minb_oracle(g)) {
            CHECK(got.count(c.edges.set_bits()) == 1);
        }
    }
}

TEST_CASE("cut partition identity: cuts = st-cuts + cuts of contraction") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + trial % 4;
        WeightedGraph g = test::random_connected_graph(rng, n, n, 1, 3);
        int s = 0, t = 1 + trial % (n - 1);

        std::set<std::vector<std::size_t>> all;
        for (const auto& c : brute::all_cuts(g)) all.insert(c.edges.set_bits());

        std::set<std::vector<std::size_t>> st;
        for (std::uint32_t mask = 1; mask < (1u << n) - 1; ++mask) {
            std::vector<char> side(n, 0);
            for (int v = 0; v < n; ++v) side[v] = (mask >> v) & 1;
            if (side[s] != side[t]) st.insert(g.cut_edges(side).set_bits());
        }
        VertexPartition p;
        p.blocks.push_back({s, t});
        for (int v = 0; v < n; ++v) {
            if (v != s && v != t) p.blocks.push_back({v});
        }
        Contraction c = contract(g, p);
        std::set<std::vector<std::size_t>> contracted;
        if (c.graph.vertex_count() >= 2) {
            for (const auto& cc : brute::all_cuts(c.graph)) {
                contracted.insert(cc.edges.set_bits());
            }
        }
        CHECK(all.size() == st.size() + contracted.size());
        for (const auto& e : st) CHECK(all.count(e) == 1);
        for (const auto& e : contracted) CHECK(all.count(e) == 1);
    }
}

TEST_CASE("cut oracle bundle basics") {
    WeightedGraph k3 = test::triangle();
    OracleBundle b = make_cut_oracles(k3);
    CHECK(b.rank == 2);
    Basis minb = b.minb();
    CHECK(minb.size() == 2);
    CHECK(minb.total_weight == 4);
    // REL stream yields the three vertex cuts then ends.
    int count = 0;
    while (b.rel()) ++count;
    CHECK(count == 3);
    CHECK(b.counters->rel_calls == 4);
}
