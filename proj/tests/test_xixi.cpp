#include <gtest/gtest.h>

#include <random>

#include "sniplab/error.hpp"
#include "sniplab/graph_enum.hpp"
#include "sniplab/xixi.hpp"
#include "support/corpus.hpp"

using namespace sniplab;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no sniplab::Error thrown";
    return ErrorKind::InvalidArgument;
}

const RootedGraph k1(1);
const RootedGraph k2(2, {{0, 1}}, 0);

RootedGraph star5(Vertex root)
{
    return family(Family::Star, 5).with_root(root);
}

std::vector<RootedGraph> rooted_up_to(std::size_t n, bool connected)
{
    std::vector<RootedGraph> out;
    for (std::size_t m = 1; m <= n; ++m) {
        for (auto& g : all_rooted_graphs(m, connected)) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

RootedGraph random_connected(std::mt19937_64& rng, std::size_t n)
{
    for (;;) {
        RootedGraph g = sniplab::testing::random_graph(rng, n, 0.5);
        if (is_connected(g)) {
            return g;
        }
    }
}

}  // namespace

TEST(Grid, DefaultsAndIndexing)
{
    const SearchGrid tree = default_grid(family(Family::Path, 3));
    EXPECT_EQ(tree.diagonal_values.size(), 5u);
    EXPECT_EQ(tree.edge_values.size(), 1u);
    const SearchGrid k3 = default_grid(family(Family::Complete, 3));
    EXPECT_EQ(k3.edge_values.size(), 2u);
    EXPECT_EQ(grid_size(family(Family::Complete, 3), k3), 125u * 8u);
    // Index 0 is the first value everywhere; the last index the last value.
    const Matrix first = grid_matrix(family(Family::Complete, 3), k3, 0);
    EXPECT_EQ(first(0, 0), -2);
    EXPECT_EQ(first(0, 1), 1);
    const Matrix last = grid_matrix(family(Family::Complete, 3), k3, 999);
    EXPECT_EQ(last(2, 2), 2);
    EXPECT_EQ(last(1, 2), -1);
    // The last edge is the least significant digit.
    EXPECT_EQ(grid_matrix(family(Family::Complete, 3), k3, 1)(1, 2), -1);
}

TEST(Grid, Errors)
{
    SearchGrid g = default_grid(k2);
    g.cap = 10;
    EXPECT_EQ(kind_of([&] { enumerate_pairs(k2, g); }), ErrorKind::GridTooLarge);
    SearchGrid bad = default_grid(k2);
    bad.edge_values.push_back(0);
    EXPECT_EQ(kind_of([&] { enumerate_pairs(k2, bad); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([&] { search_certificate(k2, {0, 2}, false, default_grid(k2)); }),
              ErrorKind::InvalidArgument);
}

TEST(Search, Examples)
{
    const RootedGraph k3 = family(Family::Complete, 3);
    const auto c = search_certificate(k3, {1, 1}, true, default_grid(k3));
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->pair, (NullityPair{1, 1}));
    EXPECT_TRUE(c->snip());
    EXPECT_TRUE(in_pattern(c->matrix, k3, false));

    const auto c1 = search_certificate(k1, {0, 0}, true, default_grid(k1));
    ASSERT_TRUE(c1.has_value());
    EXPECT_NE(c1->matrix(0, 0), 0);

    EXPECT_FALSE(search_certificate(star5(0), {1, 1}, true, default_grid(star5(0))).has_value());
    EXPECT_FALSE(search_certificate(star5(0), {1, 1}, false, default_grid(star5(0))).has_value());
}

TEST(Search, ThreadCountDoesNotChangeResults)
{
    const RootedGraph g = family(Family::Paw).with_root(3);
    SearchGrid one = default_grid(g);
    SearchGrid four = one;
    four.threads = 4;
    const auto a = search_certificate(g, {1, 2}, true, one);
    const auto b = search_certificate(g, {1, 2}, true, four);
    ASSERT_TRUE(a && b);
    EXPECT_EQ(a->matrix, b->matrix);
    EXPECT_EQ(enumerate_pairs(g, one), enumerate_pairs(g, four));
    EXPECT_EQ(certified_lower_bound(g, one).value, certified_lower_bound(g, four).value);
}

TEST(Search, RandomizedModeIsSeeded)
{
    const RootedGraph g = family(Family::Complete, 4);
    SearchGrid grid = default_grid(g);
    grid.mode = SearchMode::Randomized;
    grid.sample_count = 500;
    grid.seed = 99;
    const auto a = enumerate_pairs(g, grid);
    EXPECT_EQ(a, enumerate_pairs(g, grid));
    for (const auto& f : a) {
        EXPECT_LE(f.pair.k, 4u);
    }
}

TEST(Enumerate, SingleVertex)
{
    const std::set<PairFlag> expected = {{{0, 0}, true}, {{1, 0}, true}};
    EXPECT_EQ(enumerate_pairs(k1, default_grid(k1)), expected);
}

TEST(Enumerate, StarCenterAndLeaf)
{
    const auto center = enumerate_pairs(star5(0), default_grid(star5(0)));
    std::set<NullityPair> center_snip;
    std::set<NullityPair> center_plain;
    for (const auto& f : center) {
        (f.snip ? center_snip : center_plain).insert(f.pair);
    }
    EXPECT_EQ(center_snip, (std::set<NullityPair>{{0, 0}, {0, 1}, {1, 0}}));
    EXPECT_TRUE(center_plain.count({1, 2}));
    EXPECT_FALSE(center_plain.count({1, 1}));
    const std::set<NullityPair> staircase = {{1, 2}, {2, 3}, {3, 4}, {4, 5}};
    for (const auto& p : center_plain) {
        EXPECT_TRUE(staircase.count(p)) << to_string(p);
    }

    const auto leaf = enumerate_pairs(star5(1), default_grid(star5(1)));
    std::set<NullityPair> leaf_snip;
    std::set<NullityPair> leaf_plain;
    for (const auto& f : leaf) {
        (f.snip ? leaf_snip : leaf_plain).insert(f.pair);
    }
    EXPECT_EQ(leaf_snip, (std::set<NullityPair>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 1}}));
    EXPECT_TRUE(leaf_plain.count({2, 2}));
    EXPECT_TRUE(leaf_plain.count({3, 3}));
    EXPECT_FALSE(leaf_plain.count({1, 2}));
    EXPECT_FALSE(leaf_snip.count({1, 2}));
}

TEST(Bounds, CertifiedValue)
{
    EXPECT_EQ(certified_value({1, 2}), 3u);
    EXPECT_EQ(certified_value({2, 2}), 4u);
    EXPECT_EQ(certified_value({3, 2}), 4u);
    EXPECT_EQ(certified_value({1, 0}), 0u);
}

TEST(MinorValue, Examples)
{
    EXPECT_EQ(minor_value(k1), 0);
    EXPECT_EQ(minor_value(family(Family::Path, 3)), 1);
    for (Vertex v = 0; v < 4; ++v) {
        const XiXiReport r = xixi_minor_based(family(Family::Complete, 4).with_root(v));
        EXPECT_EQ(r.minor_value, 4);
        EXPECT_FALSE(r.saturated);
        EXPECT_EQ(r.certified_lower, 4u);
        EXPECT_TRUE(r.edge_bound_ok);
        ASSERT_EQ(r.certificates.size(), 1u);
        EXPECT_TRUE(r.certificates.front().snip());
    }
    EXPECT_EQ(kind_of([] { minor_value(family(Family::Path, 13), 12); }), ErrorKind::SizeLimit);
}

TEST(MinorValue, DisjointUnionUsesRootComponent)
{
    // K4 plus a far-away K4: the root component decides, the certificate is
    // lifted to the whole graph.
    RootedGraph g(8, 0);
    for (Vertex u = 0; u < 4; ++u) {
        for (Vertex v = u + 1; v < 4; ++v) {
            g.add_edge(u, v);
            g.add_edge(u + 4, v + 4);
        }
    }
    const XiXiReport r = xixi_minor_based(g);
    EXPECT_EQ(r.minor_value, 4);
    EXPECT_EQ(r.certified_lower, 4u);
    ASSERT_EQ(r.certificates.size(), 1u);
    EXPECT_EQ(r.certificates.front().matrix.rows(), 8u);
    EXPECT_TRUE(in_pattern(r.certificates.front().matrix, g, false));
    EXPECT_EQ(minor_value(g.with_root(5)), 4);
    EXPECT_EQ(minor_value(RootedGraph(5, {{1, 2}, {2, 3}, {3, 1}}, 0)), 0);
}

TEST(MinorValue, SmallThresholdTable)
{
    EXPECT_EQ(minor_value(k1), 0);
    EXPECT_EQ(minor_value(k2.with_root(1)), 1);
    EXPECT_EQ(minor_value(family(Family::Complete, 3)), 2);
    EXPECT_EQ(minor_value(family(Family::Star, 3).with_root(1)), 2);
    EXPECT_EQ(minor_value(family(Family::Paw).with_root(3)), 3);
    EXPECT_EQ(minor_value(family(Family::S211).with_root(4)), 3);
    for (const auto& g : minimal_minor_family(4)) {
        EXPECT_EQ(minor_value(g), 4);
    }
    for (const auto& g : minimal_minor_family(5)) {
        SearchGrid grid = default_grid(g);
        grid.mode = SearchMode::Randomized;
        grid.sample_count = 200;
        const XiXiReport r = xixi_minor_based(g, grid);
        EXPECT_EQ(r.minor_value, 5);
        EXPECT_TRUE(r.saturated);
    }
}

TEST(MinorValue, MinimalityAudit)
{
    for (int s = 0; s <= max_known_minor_family; ++s) {
        for (const auto& g : minimal_minor_family(s)) {
            for (const auto& op : one_step_ops(g)) {
                ASSERT_LT(minor_value(apply_minor_op(g, op)), s)
                    << "s = " << s << " " << to_graph6(g) << " root " << g.root() << " "
                    << to_string(op);
            }
        }
    }
}

TEST(MinorValue, OddThresholdFamiliesHaveLeafRoots)
{
    for (int s : {1, 3, 5}) {
        for (const auto& g : minimal_minor_family(s)) {
            EXPECT_EQ(g.degree(g.root()), 1u) << to_graph6(g) << " s=" << s;
        }
    }
}

TEST(MinorValue, MonotoneUnderOneStepMinors)
{
    for (const auto& g : rooted_up_to(6, false)) {
        const int v = minor_value(g);
        for (const auto& op : one_step_ops(g)) {
            ASSERT_LE(minor_value(apply_minor_op(g, op)), v) << to_graph6(g) << " " << to_string(op);
        }
    }
}

TEST(MinorValue, ExtendRootCoupling)
{
    for (const auto& g : rooted_up_to(6, false)) {
        const int v = minor_value(g);
        const int e = minor_value(extend_root(g));
        for (int k = 0; k <= 2; ++k) {
            ASSERT_EQ(e >= 2 * k + 1, v >= 2 * k) << to_graph6(g) << " root " << g.root();
        }
    }
}

TEST(MinorValue, NotCutRootEquivalence)
{
    const auto& t3 = t3_family();
    const auto rooted_t3 = minimal_minor_family(4);
    for (const auto& g : rooted_up_to(7, true)) {
        if (is_cut_vertex(g, g.root())) {
            continue;
        }
        bool rooted = false;
        for (const auto& p : rooted_t3) {
            if (contains_rooted_minor(g, p)) {
                rooted = true;
                break;
            }
        }
        bool unrooted = false;
        for (const auto& [id, p] : t3) {
            if (contains_minor(g, p)) {
                unrooted = true;
                break;
            }
        }
        ASSERT_EQ(rooted, unrooted) << to_graph6(g) << " root " << g.root();
    }
}

TEST(CutVertex, ReduceExamples)
{
    const RootedGraph paw = family(Family::Paw);  // pendant 3 on vertex 0
    const auto parts = cut_vertex_reduce(paw);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].n(), 3u);
    EXPECT_EQ(parts[0].edge_count(), 3u);
    EXPECT_EQ(parts[1].n(), 2u);
    int best = 0;
    for (const auto& p : parts) {
        best = std::max(best, minor_value(p));
    }
    EXPECT_EQ(best, 2);
    EXPECT_EQ(minor_value(paw), 2);

    const auto p3 = cut_vertex_reduce(family(Family::Path, 3).with_root(1));
    ASSERT_EQ(p3.size(), 2u);
    EXPECT_EQ(std::max(minor_value(p3[0]), minor_value(p3[1])), 1);
    EXPECT_EQ(kind_of([] { cut_vertex_reduce(family(Family::Complete, 3)); }), ErrorKind::NotACutVertex);
}

TEST(CutVertex, VertexSumTakesTheMaximum)
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 200; ++t) {
        const RootedGraph g1 = random_connected(rng, 2 + rng() % 4);
        const RootedGraph g2 = random_connected(rng, 2 + rng() % 4);
        const Vertex a = rng() % g1.n();
        const Vertex b = rng() % g2.n();
        const int v1 = minor_value(g1.with_root(a));
        const int v2 = minor_value(g2.with_root(b));
        if (v1 >= saturation_value || v2 >= saturation_value) {
            continue;
        }
        const RootedGraph sum = vertex_sum(g1.with_root(a), a, g2, b);
        ASSERT_EQ(minor_value(sum), std::max(v1, v2));
        int from_parts = 0;
        for (const auto& p : cut_vertex_reduce(sum)) {
            from_parts = std::max(from_parts, minor_value(p));
        }
        ASSERT_EQ(from_parts, minor_value(sum));
    }
}

TEST(CutVertex, TwoCutSpotCheck)
{
    std::mt19937_64 rng(43);
    int checked = 0;
    for (int t = 0; t < 300 && checked < 120; ++t) {
        const std::size_t n0 = 2 + rng() % 3;
        const std::size_t n1 = 2 + rng() % 2;
        const std::size_t n2 = 2 + rng() % 2;
        if (n0 + n1 + n2 - 2 > 8) {
            continue;
        }
        const RootedGraph g0 = random_connected(rng, n0).with_root(rng() % n0);
        const RootedGraph g1 = random_connected(rng, n1);
        const RootedGraph g2 = random_connected(rng, n2);
        const Vertex v1 = rng() % n0;
        const Vertex v2 = rng() % n0;
        const Vertex a1 = rng() % n1;
        const Vertex a2 = rng() % n2;
        auto build = [&](const RootedGraph& left, Vertex la, const RootedGraph& right, Vertex ra) {
            return vertex_sum(vertex_sum(g0, v1, left, la), v2, right, ra);
        };
        const int whole = minor_value(build(g1, a1, g2, a2));
        const int h1 = minor_value(build(k2, 0, g2, a2));
        const int h2 = minor_value(build(g1, a1, k2, 0));
        if (std::max({whole, h1, h2}) >= saturation_value) {
            continue;
        }
        ASSERT_EQ(whole, std::max(h1, h2));
        ++checked;
    }
    EXPECT_GT(checked, 60);
}

TEST(Bounds, Examples)
{
    EXPECT_TRUE(edge_bound_check(family(Family::Complete, 4), 4));
    EXPECT_TRUE(edge_bound_check(k2, 1));
    EXPECT_FALSE(edge_bound_check(family(Family::Path, 3), 4));
    EXPECT_TRUE(ng_bound_check(4, 4, 0));
    EXPECT_FALSE(ng_bound_check(1, 2, 1));
    const RootedGraph k4 = family(Family::Complete, 4);
    EXPECT_TRUE(ng_bound_check(k4, default_grid(k4)));
}

TEST(Bounds, LowerBoundNeverExceedsMinorValue)
{
    std::size_t equal = 0;
    std::size_t total = 0;
    for (const auto& g : rooted_up_to(4, false)) {
        const int mv = minor_value(g);
        const LowerBound lb = certified_lower_bound(g, default_grid(g.induced(component_of(g, g.root()))));
        ASSERT_LE(lb.value, static_cast<std::size_t>(mv)) << to_graph6(g) << " root " << g.root();
        ASSERT_TRUE(lb.certificate.has_value());
        ASSERT_TRUE(lb.certificate->snip());
        ASSERT_TRUE(in_pattern(lb.certificate->matrix, g, false));
        equal += lb.value == static_cast<std::size_t>(mv) ? 1 : 0;
        ++total;
    }
    // The grid reaches the exact value on every graph up to 4 vertices.
    EXPECT_EQ(equal, total);
}

TEST(Bounds, FiveVertexConsistency)
{
    std::size_t equal = 0;
    std::size_t total = 0;
    for (const auto& g : all_rooted_graphs(5)) {
        const int mv = minor_value(g);
        const std::size_t stop = mv >= saturation_value ? SIZE_MAX : static_cast<std::size_t>(mv) + 1;
        const LowerBound lb = certified_lower_bound_auto(g, 200'000, 20'000, stop);
        if (mv < saturation_value) {
            ASSERT_LE(lb.value, static_cast<std::size_t>(mv)) << to_graph6(g) << " root " << g.root();
        }
        equal += lb.value >= static_cast<std::size_t>(mv) ? 1 : 0;
        ++total;
    }
    RecordProperty("reached_minor_value", static_cast<int>(equal));
    RecordProperty("graphs", static_cast<int>(total));
    EXPECT_GT(equal, total / 2);
}

TEST(Bounds, KK1MirrorPairs)
{
    // Every (k,k) found with SNIP comes with (k+1,k) with SNIP in the same grid.
    for (const auto& g : rooted_up_to(4, true)) {
        const auto flags = enumerate_pairs(g, default_grid(g));
        for (const auto& f : flags) {
            if (f.snip && f.pair.k == f.pair.l) {
                ASSERT_TRUE(flags.count({{f.pair.k + 1, f.pair.k}, true}))
                    << to_graph6(g) << " root " << g.root() << " " << to_string(f.pair);
            }
            if (f.snip && f.pair.k == f.pair.l + 1) {
                ASSERT_TRUE(flags.count({{f.pair.l, f.pair.l}, true}))
                    << to_graph6(g) << " root " << g.root() << " " << to_string(f.pair);
            }
        }
    }
}
