#include <doctest.h>

#include <random>
#include <set>

#include "mbe/brute_force.hpp"
#include "mbe/cut_space.hpp"
#include "mbe/cycle_space.hpp"
#include "mbe/errors.hpp"
#include "mbe/gf2.hpp"
#include "mbe/min_basis_enum.hpp"
#include "testutil.hpp"

using namespace mbe;

namespace {

std::vector<Basis> collect(MinBasisEnumerator& stream) {
    std::vector<Basis> out;
    while (auto b = stream.next()) out.push_back(*b);
    return out;
}

std::vector<Basis> brute_bases(const WeightedGraph& g, bool cut_space) {
    ElementPool pool;
    std::vector<Element> ground;
    int rank;
    if (cut_space) {
        for (const auto& c : brute::all_cuts(g)) {
            ground.push_back(pool.intern(c.edges, c.weight));
        }
        rank = g.vertex_count() - 1;
    } else {
        for (const auto& c : brute::all_cycles(g)) {
            ground.push_back(pool.intern(c.edges, c.weight));
        }
        rank = g.edge_count() - g.vertex_count() + 1;
    }
    return brute::brute_min_bases(ground, rank);
}

} // namespace

TEST_CASE("exchange_weight") {
    Element x{0, 3, BitVec(2)}, y{1, 3, BitVec(2)}, z{2, 4, BitVec(2)};
    CHECK(exchange_weight(x, y) == 0);
    CHECK(exchange_weight(Element{0, 1, BitVec(2)}, z) == 3);
    CHECK(exchange_weight(x, x) == 0);
}

TEST_CASE("ex_zero_out on the K3 cut matroid") {
    WeightedGraph k3 = test::triangle();
    auto pool = std::make_shared<ElementPool>();
    OracleBundle oracles = make_cut_oracles(k3, pool);

    std::vector<char> side0{1, 0, 0}, side1{0, 1, 0}, side2{0, 0, 1};
    Element e0 = pool->intern(k3.cut_edges(side0), 2);
    Element e1 = pool->intern(k3.cut_edges(side1), 2);
    Element e2 = pool->intern(k3.cut_edges(side2), 2);

    Basis b = make_basis({e0, e1});
    auto swaps = ex_zero_out(b, e2, oracles);
    CHECK(swaps.size() == 2); // both replacements stay independent

    CHECK_THROWS_AS(ex_zero_out(b, e0, oracles), std::invalid_argument);
}

TEST_CASE("ex_zero_out weight mismatch yields nothing") {
    WeightedGraph p3 = test::path3(1, 2);
    auto pool = std::make_shared<ElementPool>();
    OracleBundle oracles = make_cut_oracles(p3, pool);
    Element light = pool->intern(p3.cut_edges({1, 0, 0}), 1);
    Element heavy = pool->intern(p3.cut_edges({0, 0, 1}), 2);
    Element both = pool->intern(p3.cut_edges({1, 0, 1}), 3);
    Basis b = make_basis({light, heavy});
    CHECK(ex_zero_out(b, both, oracles).empty());
}

TEST_CASE("ex_zero_out on the K4 cycle matroid") {
    WeightedGraph k4 = test::complete(4);
    auto pool = std::make_shared<ElementPool>();
    OracleBundle oracles = make_cycle_oracles(k4, pool);

    std::vector<Element> triangles;
    for (const auto& c : brute::all_cycles(k4)) {
        if (c.weight == 3) triangles.push_back(pool->intern(c.edges, c.weight));
    }
    REQUIRE(triangles.size() == 4);
    Basis b = make_basis({triangles[0], triangles[1], triangles[2]});
    auto swaps = ex_zero_out(b, triangles[3], oracles);
    CHECK(swaps.size() == 3); // any three of the four triangles independent
}

TEST_CASE("branch_node on the K3 cut matroid") {
    WeightedGraph k3 = test::triangle();
    auto pool = std::make_shared<ElementPool>();
    OracleBundle oracles = make_cut_oracles(k3, pool);

    Element e0 = pool->intern(k3.cut_edges({1, 0, 0}), 2);
    Element e1 = pool->intern(k3.cut_edges({0, 1, 0}), 2);
    Element e2 = pool->intern(k3.cut_edges({0, 0, 1}), 2);

    SearchNode root;
    root.representative = make_basis({e0, e1});

    BranchResult children = branch_node(root, e2, oracles);
    CHECK(children.others.size() == 2);
    // New representatives swap one element for y each.
    std::set<test::CanonBasis> reps;
    for (const auto& child : children.others) {
        CHECK(child.depth == 1);
        CHECK(child.forbidden.size() == 1);
        reps.insert(test::canon(child.representative));
    }
    CHECK(reps.count(test::canon(make_basis({e1, e2}))) == 1);
    CHECK(reps.count(test::canon(make_basis({e0, e2}))) == 1);
    // Eldest keeps the parent representative and forbids y.
    CHECK(test::canon(children.eldest.representative) == test::canon(root.representative));
    CHECK(children.eldest.forbidden == std::vector<std::uint32_t>{e2.id});
    CHECK(children.eldest.mandatory.size() == 2);
    CHECK(children.eldest.depth == 1);

    CHECK_THROWS_AS(branch_node(root, e0, oracles), std::invalid_argument);
}

TEST_CASE("branch_node with b = 0 keeps a lone eldest child") {
    WeightedGraph p3 = test::path3(1, 1);
    auto pool = std::make_shared<ElementPool>();
    OracleBundle oracles = make_cut_oracles(p3, pool);
    Element a = pool->intern(p3.cut_edges({1, 0, 0}), 1);
    Element b = pool->intern(p3.cut_edges({0, 0, 1}), 1);
    Element both = pool->intern(p3.cut_edges({1, 0, 1}), 2);
    SearchNode node;
    node.representative = make_basis({a, b});
    BranchResult res = branch_node(node, both, oracles);
    CHECK(res.others.empty());
    CHECK(res.eldest.forbidden == std::vector<std::uint32_t>{both.id});
}

TEST_CASE("branch children partition the brute-force solution family") {
    std::mt19937 rng(909);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + trial % 3;
        WeightedGraph g = test::random_connected_graph(rng, n, n, 1, 2);
        auto pool = std::make_shared<ElementPool>();
        OracleBundle oracles = make_cut_oracles(g, pool);

        // Ground set interned in the same pool so ids line up.
        std::vector<Element> ground;
        for (const auto& c : brute::all_cuts(g)) {
            ground.push_back(pool->intern(c.edges, c.weight));
        }
        auto all_min = brute::brute_min_bases(ground, g.vertex_count() - 1);

        Basis rep = oracles.minb();
        // Pick y = lightest relevant element outside the representative.
        auto relevant = brute::brute_relevant(ground, g.vertex_count() - 1);
        const Element* y = nullptr;
        for (const auto& e : relevant) {
            if (!rep.contains(e.id) &&
                (!y || e.weight < y->weight)) {
                y = &e;
            }
        }
        if (!y) continue;

        SearchNode node;
        node.representative = rep;
        BranchResult children = branch_node(node, *y, oracles);

        auto family_of = [&](const SearchNode& sn) {
            std::set<test::CanonBasis> fam;
            for (const auto& b : all_min) {
                bool ok = true;
                for (auto id : sn.mandatory) {
                    if (!b.contains(id)) ok = false;
                }
                for (auto id : sn.forbidden) {
                    if (b.contains(id)) ok = false;
                }
                if (ok) fam.insert(test::canon(b));
            }
            return fam;
        };

        std::set<test::CanonBasis> whole = family_of(node);
        std::set<test::CanonBasis> glued;
        std::size_t total = 0;
        auto add = [&](const SearchNode& sn) {
            auto fam = family_of(sn);
            total += fam.size();
            glued.insert(fam.begin(), fam.end());
        };
        add(children.eldest);
        for (const auto& c : children.others) add(c);
        CHECK(total == whole.size()); // pairwise disjoint
        CHECK(glued == whole);        // and they cover
    }
}

TEST_CASE("enumerate_min_bases golden examples") {
    {
        OracleBundle oracles = make_cut_oracles(test::path3(1, 2));
        MinBasisEnumerator stream(oracles);
        auto bases = collect(stream);
        REQUIRE(bases.size() == 1);
        CHECK(bases[0].total_weight == 3);
    }
    {
        OracleBundle oracles = make_cut_oracles(test::triangle());
        MinBasisEnumerator stream(oracles);
        auto bases = collect(stream);
        CHECK(bases.size() == 3);
        for (const auto& b : bases) CHECK(b.total_weight == 4);
        CHECK(test::canon_set(bases).size() == 3);
    }
    {
        OracleBundle oracles = make_cycle_oracles(test::complete(4));
        MinBasisEnumerator stream(oracles);
        auto bases = collect(stream);
        CHECK(bases.size() == 4);
        for (const auto& b : bases) CHECK(b.total_weight == 9);
    }
}

TEST_CASE("first output is the minimum-basis oracle's answer") {
    OracleBundle oracles = make_cut_oracles(test::triangle());
    Basis expected = oracles.minb();
    MinBasisEnumerator stream(oracles);
    auto first = stream.next();
    REQUIRE(first);
    CHECK(test::canon(*first) == test::canon(expected));
}

TEST_CASE("enumerate_min_bases equals brute force on random graphs") {
    std::mt19937 rng(111);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 5;
        WeightedGraph g = test::random_connected_graph(rng, n, n + 1, 1, 4);
        for (bool cut : {true, false}) {
            if (!cut && g.edge_count() - g.vertex_count() + 1 < 1) continue;
            OracleBundle oracles =
                cut ? make_cut_oracles(g) : make_cycle_oracles(g);
            MinBasisEnumerator stream(oracles);
            auto bases = collect(stream);
            auto expected = test::canon_set(brute_bases(g, cut));
            CHECK(test::canon_set(bases) == expected);
            CHECK(bases.size() == expected.size()); // no duplicates
            for (const auto& b : bases) {
                CHECK(oracles.ind_fn(b.elements));
            }
        }
    }
}

TEST_CASE("each completed depth contributes a new basis") {
    OracleBundle oracles = make_cut_oracles(test::complete(4));
    MinBasisEnumerator stream(oracles);
    std::set<int> depths_with_output;
    int max_depth = 0;
    while (auto b = stream.next()) {
        depths_with_output.insert(stream.current_depth());
        max_depth = std::max(max_depth, stream.current_depth());
    }
    for (int h = 0; h <= max_depth; ++h) {
        CHECK(depths_with_output.count(h) == 1);
    }
}

TEST_CASE("a relevant stream with decreasing weights is rejected") {
    ElementPool pool;
    Element a = pool.intern(BitVec::from_string("10"), 1);
    Element b = pool.intern(BitVec::from_string("01"), 3);
    Element c = pool.intern(BitVec::from_string("11"), 2); // out of order

    OracleBundle broken;
    broken.rank = 1;
    broken.ind_fn = [](const std::vector<Element>& s) {
        std::vector<BitVec> rows;
        for (const auto& e : s) rows.push_back(e.incidence);
        return mbe::gf2::is_independent(rows);
    };
    broken.minb_fn = [a]() { return make_basis({a}); };
    auto remaining = std::make_shared<std::vector<Element>>(
        std::vector<Element>{a, b, c});
    broken.rel_fn = [remaining]() -> std::optional<Element> {
        if (remaining->empty()) return std::nullopt;
        Element e = remaining->front();
        remaining->erase(remaining->begin());
        return e;
    };

    MinBasisEnumerator stream(broken);
    CHECK(stream.next()); // the root basis
    CHECK_THROWS_AS(
        [&] {
            while (stream.next()) {
            }
        }(),
        StreamContractError);
}

TEST_CASE("limit stops the stream early") {
    OracleBundle oracles = make_cut_oracles(test::complete(5));
    MinBasisEnumerator stream(oracles, 2);
    CHECK(stream.next());
    CHECK(stream.next());
    CHECK_FALSE(stream.next());
}

TEST_CASE("discover_weight_classes") {
    {
        OracleBundle oracles = make_cycle_oracles(test::complete(4));
        auto classes = discover_weight_classes(oracles.minb());
        REQUIRE(classes.size() == 1);
        CHECK(classes[0].weight == 3);
        CHECK(classes[0].multiplicity == 3);
    }
    {
        OracleBundle oracles = make_cut_oracles(test::path3(1, 2));
        auto classes = discover_weight_classes(oracles.minb());
        REQUIRE(classes.size() == 2);
        CHECK(classes[0].weight == 1);
        CHECK(classes[0].multiplicity == 1);
        CHECK(classes[1].weight == 2);
        CHECK(classes[1].multiplicity == 1);
    }
}

TEST_CASE("class oracle adapters") {
    WeightedGraph k4 = test::complete(4);
    auto pool = std::make_shared<ElementPool>();
    OracleBundle oracles = make_cycle_oracles(k4, pool);
    Basis minb = oracles.minb();
    ClassOracleContext ctx(oracles, minb);
    REQUIRE(ctx.class_count() == 1);
    OracleBundle class0 = ctx.bundle(0);
    CHECK(class0.rank == 3);

    // The anchor block is independent in the class matroid.
    Basis block = class0.minb();
    CHECK(test::canon(block) == test::canon(minb));
    CHECK(class0.ind_fn(block.elements));

    // Any three triangles are independent; a dependent triple is rejected.
    std::vector<Element> triangles;
    for (const auto& c : brute::all_cycles(k4)) {
        if (c.weight == 3) triangles.push_back(pool->intern(c.edges, c.weight));
    }
    CHECK(class0.ind_fn({triangles[0], triangles[1], triangles[3]}));

    std::vector<Element> squares;
    for (const auto& c : brute::all_cycles(k4)) {
        if (c.weight == 4) squares.push_back(pool->intern(c.edges, c.weight));
    }
    // A 4-cycle has weight 4, not the class weight; the substituted set is
    // dependent in the full matroid when the block is dependent.
    std::vector<Element> dependent = {triangles[0], triangles[1], triangles[2]};
    dependent.push_back(triangles[3]); // four triangles sum to zero
    CHECK_FALSE(class0.ind_fn(dependent));
}

TEST_CASE("class streams must be consumed in order") {
    WeightedGraph p3 = test::path3(1, 2);
    OracleBundle oracles = make_cut_oracles(p3);
    ClassOracleContext ctx(oracles, oracles.minb());
    REQUIRE(ctx.class_count() == 2);
    OracleBundle class1 = ctx.bundle(1);
    // Pulling class 1 before draining class 0 trips the order check.
    CHECK_THROWS_AS(class1.rel_fn(), StreamContractError);
}

TEST_CASE("fast driver equals plain stream") {
    std::mt19937 rng(222);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 5;
        WeightedGraph g = test::random_connected_graph(rng, n, n + 1, 1, 4);
        for (bool cut : {true, false}) {
            if (!cut && g.edge_count() - g.vertex_count() + 1 < 1) continue;
            std::vector<Basis> plain, fast;
            {
                OracleBundle oracles =
                    cut ? make_cut_oracles(g) : make_cycle_oracles(g);
                MinBasisEnumerator stream(oracles);
                plain = collect(stream);
            }
            {
                OracleBundle oracles =
                    cut ? make_cut_oracles(g) : make_cycle_oracles(g);
                FastMinBasisEnumerator stream(oracles);
                while (auto b = stream.next()) fast.push_back(*b);
            }
            CHECK(test::canon_set(plain) == test::canon_set(fast));
            CHECK(plain.size() == fast.size());
        }
    }
}

TEST_CASE("fast driver golden counts") {
    {
        // K3 cuts: single class, L = 3, no phase 2.
        OracleBundle oracles = make_cut_oracles(test::triangle());
        FastMinBasisEnumerator stream(oracles);
        std::size_t count = 0;
        while (stream.next()) ++count;
        CHECK(count == 3);
        CHECK(stream.stats().phase2_emitted == 0);
    }
    {
        // Unique minimum basis: stream of length 1.
        OracleBundle oracles = make_cut_oracles(test::path3(1, 2));
        FastMinBasisEnumerator stream(oracles);
        CHECK(stream.next());
        CHECK_FALSE(stream.next());
    }
}

namespace {

// Cycle space with two weight classes of two class bases each: two bundles
// of parallel edges, each a tied pair plus one heavier edge. Classes:
// weight 3 has bases {e1e3},{e2e3}; weight 7 has {f1f3},{f2f3}; the light
// 2-cycles e1e2 / f1f2 are forced. Expected stream: 1 + 2 + 1 = 4 bases.
WeightedGraph two_class_gadget() {
    return make_graph(3, {{0, 1, 1},
                          {0, 1, 1},
                          {0, 1, 2},
                          {1, 2, 3},
                          {1, 2, 3},
                          {1, 2, 4}});
}

} // namespace

TEST_CASE("fast driver phase 2 on a two-class instance") {
    WeightedGraph g = two_class_gadget();
    OracleBundle oracles = make_cycle_oracles(g);
    FastMinBasisEnumerator stream(oracles);
    std::vector<Basis> all;
    while (auto b = stream.next()) all.push_back(*b);
    CHECK(all.size() == 4);
    CHECK(stream.stats().phase1_emitted == 3);
    CHECK(stream.stats().phase2_emitted == 1);

    OracleBundle oracles2 = make_cycle_oracles(g);
    MinBasisEnumerator plain(oracles2);
    std::vector<Basis> expected;
    while (auto b = plain.next()) expected.push_back(*b);
    CHECK(test::canon_set(all) == test::canon_set(expected));
    CHECK(all.size() == expected.size());
}

TEST_CASE("phase 2 emits with bounded element updates per output") {
    WeightedGraph g = two_class_gadget();
    OracleBundle oracles = make_cycle_oracles(g);
    FastMinBasisEnumerator stream(oracles);
    std::uint64_t prev_updates = 0;
    bool saw_phase2 = false;
    const int r = oracles.rank;
    while (auto b = stream.next()) {
        if (stream.in_phase2()) {
            saw_phase2 = true;
            std::uint64_t delta = stream.stats().element_updates - prev_updates;
            CHECK(delta <= 8ull * static_cast<std::uint64_t>(r));
        }
        prev_updates = stream.stats().element_updates;
    }
    CHECK(saw_phase2);
}
