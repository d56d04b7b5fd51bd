#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mbe/all_bases.hpp"
#include "mbe/brute_force.hpp"
#include "mbe/cut_space.hpp"
#include "mbe/cycle_space.hpp"
#include "mbe/errors.hpp"
#include "mbe/gf2.hpp"
#include "mbe/min_basis_enum.hpp"

namespace mbe::cli {

namespace {

using nlohmann::json;

std::vector<int> external_ids(const WeightedGraph& g, const BitVec& edges) {
    std::vector<int> ids;
    for (std::size_t b : edges.set_bits()) {
        ids.push_back(g.external_id(static_cast<int>(b)));
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::string id_list(const std::vector<int>& ids) {
    std::string s = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(ids[i]);
    }
    s += ']';
    return s;
}

// Canonical form of a basis: sorted list of sorted edge-id lists.
std::vector<std::vector<int>> canon_basis(const WeightedGraph& g,
                                          const std::vector<BitVec>& members) {
    std::vector<std::vector<int>> lists;
    lists.reserve(members.size());
    for (const auto& m : members) lists.push_back(external_ids(g, m));
    std::sort(lists.begin(), lists.end());
    return lists;
}

void print_element(std::ostream& out, Format format, Weight w,
                   const std::vector<int>& ids) {
    if (format == Format::JsonLines) {
        json j;
        j["weight"] = w;
        j["edges"] = ids;
        out << j.dump() << '\n';
    } else {
        out << w << ' ' << id_list(ids) << '\n';
    }
}

void print_basis(std::ostream& out, Format format, Weight w,
                 const std::vector<std::vector<int>>& lists) {
    if (format == Format::JsonLines) {
        json j;
        j["weight"] = w;
        j["elements"] = lists;
        out << j.dump() << '\n';
    } else {
        out << w;
        for (const auto& ids : lists) out << ' ' << id_list(ids);
        out << '\n';
    }
}

void print_coeffs(std::ostream& out, Format format,
                  const std::vector<std::uint64_t>& coeffs) {
    if (format == Format::JsonLines) {
        json j;
        j["coeffs"] = coeffs;
        out << j.dump() << '\n';
    } else {
        std::string s = "[";
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(coeffs[i]);
        }
        out << s << "]\n";
    }
}

OracleBundle make_oracles(const WeightedGraph& g, Space space) {
    return space == Space::Cut ? make_cut_oracles(g) : make_cycle_oracles(g);
}

std::vector<std::vector<int>> basis_lists(const WeightedGraph& g,
                                          const Basis& b) {
    std::vector<BitVec> members;
    members.reserve(b.elements.size());
    for (const auto& e : b.elements) members.push_back(e.incidence);
    return canon_basis(g, members);
}

int cmd_min_basis(const WeightedGraph& g, const RunConfig& cfg,
                  std::ostream& out) {
    OracleBundle oracles = make_oracles(g, cfg.space);
    Basis b = oracles.minb();
    print_basis(out, cfg.format, b.total_weight, basis_lists(g, b));
    return kExitOk;
}

int cmd_min_bases(const WeightedGraph& g, const RunConfig& cfg,
                  std::ostream& out) {
    OracleBundle oracles = make_oracles(g, cfg.space);
    if (cfg.fast) {
        FastMinBasisEnumerator stream(oracles, cfg.max);
        while (auto b = stream.next()) {
            print_basis(out, cfg.format, b->total_weight, basis_lists(g, *b));
        }
    } else {
        MinBasisEnumerator stream(oracles, cfg.max);
        while (auto b = stream.next()) {
            print_basis(out, cfg.format, b->total_weight, basis_lists(g, *b));
        }
    }
    return kExitOk;
}

int cmd_relevant(const WeightedGraph& g, const RunConfig& cfg,
                 std::ostream& out) {
    if (cfg.space == Space::Cut) {
        RelevantCutEnumerator stream(g, cfg.max);
        while (auto c = stream.next()) {
            print_element(out, cfg.format, c->weight, external_ids(g, c->edges));
        }
    } else {
        RelevantCycleEnumerator stream(g, cfg.max);
        while (auto c = stream.next()) {
            print_element(out, cfg.format, c->weight, external_ids(g, c->edges));
        }
    }
    return kExitOk;
}

int cmd_all_bases(const WeightedGraph& g, const RunConfig& cfg,
                  std::ostream& out) {
    LiftContext ctx =
        cfg.space == Space::Cut ? cut_anchor(g) : cycle_anchor(g);
    int r = static_cast<int>(ctx.anchor.size());
    if (r == 0) return kExitOk; // nothing to enumerate
    AllRBasesEnumerator stream(r, cfg.max);
    while (auto b = stream.next()) {
        if (cfg.raw) {
            std::vector<std::uint64_t> coeffs;
            coeffs.reserve(b->rows.size());
            for (const auto& c : b->rows) coeffs.push_back(c.bin);
            print_coeffs(out, cfg.format, coeffs);
        } else {
            std::vector<BitVec> members = lift(*b, ctx);
            Weight w = 0;
            for (const auto& m : members) {
                for (const auto& e : g.edges()) {
                    if (m.test(e.id)) w += e.w;
                }
            }
            print_basis(out, cfg.format, w, canon_basis(g, members));
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify: cross-check every stream against the exhaustive oracles.

struct VerifyReport {
    std::ostream& out;
    bool ok = true;

    void pass(const std::string& name) { out << "PASS " << name << '\n'; }
    void fail(const std::string& name, const std::string& detail) {
        out << "FAIL " << name << ": " << detail << '\n';
        ok = false;
    }
    void skip(const std::string& name, const std::string& why) {
        out << "SKIP " << name << " (" << why << ")\n";
    }
};

std::vector<Element> ground_elements(const WeightedGraph& g, Space space) {
    ElementPool pool;
    std::vector<Element> ground;
    if (space == Space::Cut) {
        for (const auto& c : brute::all_cuts(g)) {
            ground.push_back(pool.intern(c.edges, c.weight));
        }
    } else {
        for (const auto& c : brute::all_cycles(g)) {
            ground.push_back(pool.intern(c.edges, c.weight));
        }
    }
    return ground;
}

using CanonSet = std::set<std::vector<std::vector<int>>>;

CanonSet canon_set(const WeightedGraph& g, const std::vector<Basis>& bases) {
    CanonSet s;
    for (const auto& b : bases) {
        std::vector<BitVec> members;
        for (const auto& e : b.elements) members.push_back(e.incidence);
        s.insert(canon_basis(g, members));
    }
    return s;
}

int cmd_verify(const WeightedGraph& g, const RunConfig& cfg,
               std::ostream& out) {
    VerifyReport report{out};
    const int rank = cfg.space == Space::Cut
                         ? g.vertex_count() - 1
                         : g.edge_count() - g.vertex_count() + 1;

    std::vector<Element> ground = ground_elements(g, cfg.space);
    auto brute_bases = brute::brute_min_bases(ground, rank);
    CanonSet brute_set = canon_set(g, brute_bases);

    // Stream the search-tree enumerator to exhaustion.
    OracleBundle oracles = make_oracles(g, cfg.space);
    std::vector<Basis> streamed;
    {
        MinBasisEnumerator stream(oracles);
        while (auto b = stream.next()) streamed.push_back(*b);
    }
    CanonSet stream_set = canon_set(g, streamed);

    if (stream_set == brute_set && streamed.size() == brute_set.size()) {
        report.pass("min-bases-stream-equals-brute-force");
    } else {
        std::ostringstream detail;
        detail << "stream " << streamed.size() << " bases, brute "
               << brute_set.size();
        report.fail("min-bases-stream-equals-brute-force", detail.str());
    }

    Weight minb_weight = make_oracles(g, cfg.space).minb().total_weight;
    bool weights_ok = true;
    for (const auto& b : streamed) {
        if (b.total_weight != minb_weight) weights_ok = false;
    }
    if (weights_ok && (!brute_bases.empty() &&
                       brute_bases[0].total_weight == minb_weight)) {
        report.pass("minimum-weight-agreement");
    } else {
        report.fail("minimum-weight-agreement",
                    "stream or oracle weight differs from brute force");
    }

    {
        OracleBundle oracles2 = make_oracles(g, cfg.space);
        FastMinBasisEnumerator fast(oracles2);
        CanonSet fast_set;
        std::size_t count = 0;
        while (auto b = fast.next()) {
            std::vector<BitVec> members;
            for (const auto& e : b->elements) members.push_back(e.incidence);
            fast_set.insert(canon_basis(g, members));
            ++count;
        }
        if (fast_set == stream_set && count == fast_set.size()) {
            report.pass("two-phase-driver-equals-plain-stream");
        } else {
            report.fail("two-phase-driver-equals-plain-stream",
                        "sets differ or duplicates emitted");
        }
    }

    // Relevant stream vs the definition applied to the exhaustive ground set.
    {
        std::set<std::vector<int>> expected;
        for (const auto& e : brute::brute_relevant(ground, rank)) {
            expected.insert(external_ids(g, e.incidence));
        }
        std::set<std::vector<int>> got;
        bool monotone = true;
        Weight prev = -1;
        if (cfg.space == Space::Cut) {
            RelevantCutEnumerator stream(g);
            while (auto c = stream.next()) {
                got.insert(external_ids(g, c->edges));
                if (c->weight < prev) monotone = false;
                prev = c->weight;
            }
        } else {
            RelevantCycleEnumerator stream(g);
            while (auto c = stream.next()) {
                got.insert(external_ids(g, c->edges));
                if (c->weight < prev) monotone = false;
                prev = c->weight;
            }
        }
        if (got == expected && monotone) {
            report.pass("relevant-stream-equals-brute-force");
        } else {
            std::ostringstream detail;
            detail << "stream " << got.size() << " elements, brute "
                   << expected.size()
                   << (monotone ? "" : "; weights not monotone");
            report.fail("relevant-stream-equals-brute-force", detail.str());
        }
    }

    // Reverse-search lift: counts and genuine membership.
    if (rank >= 1 && rank <= 5) {
        LiftContext ctx =
            cfg.space == Space::Cut ? cut_anchor(g) : cycle_anchor(g);
        AllRBasesEnumerator stream(rank);
        std::uint64_t count = 0;
        bool all_valid = true;
        while (auto b = stream.next()) {
            ++count;
            std::vector<BitVec> members = lift(*b, ctx);
            if (!gf2::is_independent(members)) all_valid = false;
            for (const auto& m : members) {
                if (cfg.space == Space::Cycle && !is_even_edge_set(g, m)) {
                    all_valid = false;
                }
                if (m.none()) all_valid = false;
            }
        }
        if (count == rbasis_count(rank) && all_valid) {
            report.pass("all-bases-count-and-lift-validity");
        } else {
            std::ostringstream detail;
            detail << "count " << count << " expected " << rbasis_count(rank);
            report.fail("all-bases-count-and-lift-validity", detail.str());
        }
    } else if (rank > 5) {
        report.skip("all-bases-count-and-lift-validity", "rank above 5");
    }

    return report.ok ? kExitOk : kExitFailure;
}

} // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err) {
    WeightedGraph g;
    try {
        g = parse_graph(in);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }
    if (!g.connected()) {
        err << "error: input graph is not connected\n";
        return kExitDisconnected;
    }
    if (config.space == Space::Cycle) {
        for (const auto& e : g.edges()) {
            if (e.w == 0) {
                err << "error: zero edge weights are not admissible in the "
                       "cycle space\n";
                return kExitParse;
            }
        }
    }
    if (config.max && *config.max < 1) {
        err << "error: --max must be at least 1\n";
        return kExitParse;
    }

    try {
        switch (config.command) {
        case Command::MinBasis:
            return cmd_min_basis(g, config, out);
        case Command::MinBases:
            return cmd_min_bases(g, config, out);
        case Command::Relevant:
            return cmd_relevant(g, config, out);
        case Command::AllBases:
            return cmd_all_bases(g, config, out);
        case Command::Verify:
            return cmd_verify(g, config, out);
        }
    } catch (const GuardExceededError& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const StreamContractError& e) {
        err << "error: stream contract violation: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.input_path == "-") {
        return run(config, std::cin, out, err);
    }
    std::ifstream in(config.input_path);
    if (!in) {
        err << "error: cannot open " << config.input_path << '\n';
        return kExitParse;
    }
    return run(config, in, out, err);
}

} // namespace mbe::cli
