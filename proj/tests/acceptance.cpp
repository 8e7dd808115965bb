// Acceptance run: one PASS/FAIL line per criterion. Exit status 0 only when
// every criterion passes. Exact arithmetic throughout, so every comparison is
// exact; runtime limits are part of the criteria where stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <random>
#include <sstream>

#include "sniplab/constructions.hpp"
#include "sniplab/error.hpp"
#include "sniplab/graph_enum.hpp"
#include "sniplab/xixi.hpp"
#include "support/corpus.hpp"

using namespace sniplab;
using sniplab::testing::Instance;
using sniplab::testing::make_corpus;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

const std::vector<Instance>& corpus()
{
    static const std::vector<Instance> c = make_corpus(1200, 7);
    return c;
}

Outcome prop_t3()
{
    std::size_t records = 0;
    std::size_t bad = 0;
    for (WitnessMatrix id : all_witness_matrices()) {
        const auto [g, a] = paper_matrix(id);
        for (Vertex v = 0; v < g.n(); ++v) {
            if (is_cut_vertex(g, v)) {
                continue;
            }
            const SnipCertificate c = certify(a, g.with_root(v));
            ++records;
            if (c.pair != NullityPair{3, 2} || !c.snip_direct || !c.snip_cases || !c.snip_recipe) {
                ++bad;
            }
        }
    }
    return {bad == 0, std::to_string(records) + " (matrix, non-cut vertex) records, " +
                          std::to_string(bad) + " failures"};
}

Outcome three_way()
{
    std::size_t disagree = 0;
    std::size_t snip_true = 0;
    std::map<std::string, std::size_t> types;
    for (const auto& inst : corpus()) {
        const SnipCertificate c = certify(inst.matrix, inst.graph);
        disagree += c.verdicts_agree() ? 0 : 1;
        snip_true += c.snip() ? 1 : 0;
        ++types[std::string(to_string(c.index_type))];
    }
    std::ostringstream os;
    os << corpus().size() << " triples (n <= 7), " << disagree << " disagreements; snip true "
       << snip_true << "; upper " << types["upper"] << ", neutral " << types["neutral"]
       << ", downer " << types["downer"];
    return {disagree == 0 && corpus().size() >= 1000, os.str()};
}

Outcome sap_recipe()
{
    std::size_t disagree = 0;
    std::size_t sap_true = 0;
    for (const auto& inst : corpus()) {
        const bool sap = has_sap(inst.matrix, inst.graph);
        sap_true += sap ? 1 : 0;
        disagree += sap == has_sap_recipe(inst.matrix, inst.graph) ? 0 : 1;
    }
    return {disagree == 0, std::to_string(corpus().size()) + " matrices, " +
                               std::to_string(disagree) + " disagreements (SAP true " +
                               std::to_string(sap_true) + ")"};
}

Outcome staircase()
{
    std::size_t sw = 0, west = 0, south = 0, fails = 0;
    auto try_south = [&](const Matrix& a, Vertex i) {
        const NullityPair p = nullity_pair(a, i);
        try {
            const PerturbStep s = south_step(a, i);
            fails += s.pair == NullityPair{p.k, p.k} ? 0 : 1;
        } catch (const Error&) {
            ++fails;
        }
        ++south;
    };
    for (const auto& inst : corpus()) {
        const Matrix& a = inst.matrix;
        const Vertex i = inst.graph.root();
        const NullityPair p = nullity_pair(a, i);
        if (p.k > 0 && p.l > 0) {
            ++sw;
            try {
                fails += sw_step(a, i).pair == NullityPair{p.k - 1, p.l - 1} ? 0 : 1;
            } catch (const Error&) {
                ++fails;
            }
        }
        if (p.k == p.l && p.k > 0 && has_isnip_direct(a, inst.graph, i)) {
            for (const Rational& eps : {Rational(1), Rational(1, 3)}) {
                ++west;
                try {
                    const PerturbStep w = west_step(a, i, eps);
                    fails += w.pair == NullityPair{p.k - 1, p.k} ? 0 : 1;
                    try_south(w.matrix, i);
                } catch (const Error&) {
                    ++fails;
                }
            }
        }
        if (p.l == p.k + 1) {
            try_south(a, i);
        }
    }
    std::ostringstream os;
    os << "sw " << sw << ", west " << west << ", south " << south << " steps; " << fails
       << " failures";
    return {fails == 0 && sw > 0 && west > 0 && south > 0, os.str()};
}

Outcome minimal_minors()
{
    const std::vector<std::pair<RootedGraph, int>> table = {
        {RootedGraph(1), 0},
        {RootedGraph(2, {{0, 1}}, 1), 1},
        {family(Family::Complete, 3), 2},
        {family(Family::Star, 3).with_root(1), 2},
        {family(Family::Paw).with_root(3), 3},
        {family(Family::S211).with_root(4), 3},
    };
    std::size_t bad = 0;
    for (const auto& [g, expected] : table) {
        bad += minor_value(g) == expected ? 0 : 1;
    }
    std::size_t t3 = 0;
    for (const auto& g : minimal_minor_family(4)) {
        ++t3;
        bad += minor_value(g) == 4 ? 0 : 1;
    }
    std::size_t audited = 0;
    for (int s = 0; s <= max_known_minor_family; ++s) {
        for (const auto& g : minimal_minor_family(s)) {
            for (const auto& op : one_step_ops(g)) {
                ++audited;
                bad += minor_value(apply_minor_op(g, op)) < s ? 0 : 1;
            }
        }
    }
    std::ostringstream os;
    os << "table of 6 + " << t3 << " rooted T3 members, " << audited
       << " one-step minors audited; " << bad << " failures";
    return {bad == 0, os.str()};
}

Outcome extend_root_coupling()
{
    std::size_t graphs = 0, bad = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& g : all_rooted_graphs(n, true)) {
            ++graphs;
            const int v = minor_value(g);
            const int e = minor_value(extend_root(g));
            for (int k = 0; k <= 2; ++k) {
                bad += (e >= 2 * k + 1) == (v >= 2 * k) ? 0 : 1;
            }
        }
    }
    return {bad == 0, std::to_string(graphs) + " connected rooted graphs, " + std::to_string(bad) +
                          " exceptions"};
}

std::string format_pairs(const std::set<NullityPair>& s)
{
    std::string out;
    for (const auto& p : s) {
        out += (out.empty() ? "" : " ") + to_string(p);
    }
    return "{" + out + "}";
}

Outcome star_enumeration()
{
    auto split = [](const RootedGraph& g) {
        std::pair<std::set<NullityPair>, std::set<NullityPair>> out;
        for (const auto& f : enumerate_pairs(g, default_grid(g))) {
            (f.snip ? out.first : out.second).insert(f.pair);
        }
        return out;
    };
    const RootedGraph star = family(Family::Star, 5);
    const auto [center_snip, center_plain] = split(star);
    const auto [leaf_snip, leaf_plain] = split(star.with_root(1));
    const std::set<NullityPair> want_center = {{0, 0}, {0, 1}, {1, 0}};
    const std::set<NullityPair> want_leaf = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 1}};
    const bool ok = center_snip == want_center && leaf_snip == want_leaf &&
                    center_plain.count({1, 2}) && leaf_plain.count({2, 2}) &&
                    !center_snip.count({1, 1}) && !center_plain.count({1, 1}) &&
                    !leaf_snip.count({1, 2}) && !leaf_plain.count({1, 2});
    return {ok, "center snip " + format_pairs(center_snip) + " plain " + format_pairs(center_plain) +
                    "; leaf snip " + format_pairs(leaf_snip) + " plain " + format_pairs(leaf_plain)};
}

Outcome bounds()
{
    // Exhaustive default grid up to 20000 candidates, 3000 seeded samples
    // beyond. The search stops once it reaches the exact minor value.
    constexpr std::uint64_t exhaustive_limit = 20'000;
    constexpr std::uint64_t samples = 3'000;
    auto lower = [&](const RootedGraph& g) {
        const int mv = minor_value(g);
        const std::size_t stop = mv >= saturation_value ? SIZE_MAX : static_cast<std::size_t>(mv);
        return certified_lower_bound_auto(g, exhaustive_limit, samples, stop).value;
    };
    std::size_t graphs = 0, edge_bad = 0, ng_bad = 0, best = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& g : all_rooted_graphs(n)) {
            ++graphs;
            const std::size_t lg = lower(g);
            const RootedGraph c = complement(g);
            const std::size_t lc = lower(c);
            best = std::max(best, lg + lc);
            edge_bad += edge_bound_check(g, lg) ? 0 : 1;
            edge_bad += edge_bound_check(c, lc) ? 0 : 1;
            ng_bad += ng_bound_check(n, lg, lc) ? 0 : 1;
        }
    }
    std::ostringstream os;
    os << graphs << " rooted graphs and complements; edge-bound violations " << edge_bad
       << ", NG violations " << ng_bad << " (largest lower_g + lower_complement = " << best << ")";
    return {edge_bad == 0 && ng_bad == 0, os.str()};
}

VertexMask outside_neighbourhood(const RootedGraph& g, const IndexSet& alpha)
{
    VertexMask in = 0;
    for (std::size_t v : alpha) {
        in |= VertexMask{1} << v;
    }
    VertexMask nb = 0;
    for (std::size_t v : alpha) {
        nb |= g.neighbors(v);
    }
    return nb & ~in;
}

Outcome schur_suite()
{
    std::mt19937_64 rng(77);
    std::size_t instances = 0, single = 0, single_snip = 0, bad = 0;
    for (const auto& inst : corpus()) {
        const Matrix& a = inst.matrix;
        const RootedGraph& g = inst.graph;
        const std::size_t n = g.n();
        const Vertex i = g.root();
        if (n < 2) {
            continue;
        }
        // Candidate alphas: nonempty subsets avoiding i with invertible A[alpha].
        std::vector<IndexSet> any;
        std::vector<IndexSet> one_neighbour;
        for (VertexMask mask = 1; mask < (VertexMask{1} << n); ++mask) {
            if ((mask >> i) & 1u) {
                continue;
            }
            IndexSet alpha;
            for (std::size_t v = 0; v < n; ++v) {
                if ((mask >> v) & 1u) {
                    alpha.push_back(v);
                }
            }
            if (rank(a.submatrix(alpha, alpha)) != alpha.size()) {
                continue;
            }
            any.push_back(alpha);
            if (std::popcount(outside_neighbourhood(g, alpha)) == 1) {
                one_neighbour.push_back(alpha);
            }
        }
        if (any.empty()) {
            continue;
        }
        const bool prefer_single = !one_neighbour.empty() && rng() % 2 == 0;
        const auto& pool = prefer_single ? one_neighbour : any;
        const IndexSet alpha = pool[rng() % pool.size()];
        const Matrix s = schur_complement(a, alpha);
        std::size_t i_new = i;
        for (std::size_t v : alpha) {
            i_new -= v < i ? 1 : 0;
        }
        ++instances;
        bad += nullity(s) == nullity(a) ? 0 : 1;
        bad += nullity_pair(s, i_new) == nullity_pair(a, i) ? 0 : 1;
        if (std::popcount(outside_neighbourhood(g, alpha)) == 1) {
            ++single;
            if (has_isnip_direct(a, g, i)) {
                ++single_snip;
                VertexMask keep = g.all_vertices();
                for (std::size_t v : alpha) {
                    keep &= ~(VertexMask{1} << v);
                }
                const RootedGraph h = g.induced(keep);
                bad += in_pattern(s, h, true) && has_isnip_direct(s, h, i_new) ? 0 : 1;
            }
        }
    }
    std::ostringstream os;
    os << instances << " instances (" << single << " with |N(alpha)| = 1, " << single_snip
       << " of those with i-SNIP); " << bad << " failures";
    return {bad == 0 && instances >= 200 && single_snip > 0, os.str()};
}

Outcome graph6_round_trip()
{
    std::size_t graphs = 0, bad = 0;
    for (const auto& inst : corpus()) {
        ++graphs;
        bad += from_graph6(to_graph6(inst.graph)) == inst.graph.with_root(0) ? 0 : 1;
    }
    const bool k3 = to_graph6(family(Family::Complete, 3)) == "Bw" &&
                    from_graph6("Bw") == family(Family::Complete, 3);
    return {bad == 0 && k3, std::to_string(graphs) + " corpus graphs, " + std::to_string(bad) +
                                " mismatches; K3 <-> Bw " + (k3 ? "exact" : "MISMATCH")};
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> check;
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "witness matrices: pair (3,2) and i-SNIP at non-cut vertices", 5, prop_t3},
        {2, "three-way SNIP agreement", 180, three_way},
        {3, "SAP equals full kernel recipe", 0, sap_recipe},
        {4, "staircase sw / west / south steps", 0, staircase},
        {5, "minimal-minor table and minimality audit", 120, minimal_minors},
        {6, "extend-root coupling", 0, extend_root_coupling},
        {7, "K_{1,5} pair enumeration", 120, star_enumeration},
        {8, "edge bound and Nordhaus-Gaddum bound", 0, bounds},
        {9, "Schur complement nullity and SNIP", 0, schur_suite},
        {10, "graph6 round trip", 0, graph6_round_trip},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
        const bool pass = o.pass && in_time;
        failed += pass ? 0 : 1;
        char timing[64];
        if (c.limit_seconds > 0) {
            std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", secs, c.limit_seconds);
        } else {
            std::snprintf(timing, sizeof timing, "%.2fs", secs);
        }
        std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": " << o.detail
                  << " [" << timing << "]" << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
