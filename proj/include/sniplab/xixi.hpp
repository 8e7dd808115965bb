#pragma once

// Certificate search over a finite grid of matrices in S(G), the exact
// minor-based value of xixi(G, i) on 0..5, and the edge and Nordhaus-Gaddum
// style bounds.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sniplab/ratmat.hpp"
#include "sniplab/rgraph.hpp"
#include "sniplab/snipcore.hpp"

namespace sniplab {

enum class SearchMode { Exhaustive, Randomized };

inline constexpr std::uint64_t default_grid_cap = 100'000'000;
inline constexpr std::uint64_t default_seed = 0x5eed'2024'0001ULL;

struct SearchGrid {
    std::vector<Rational> diagonal_values;
    std::vector<Rational> edge_values;
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t sample_count = 0;  // randomized mode only
    std::uint64_t seed = default_seed;
    std::uint64_t cap = default_grid_cap;  // exhaustive mode only
    unsigned threads = 1;                  // 0 picks the hardware concurrency
};

/// Diagonal {-2..2}; edges {1, -1}, or {1} when g is a forest.
SearchGrid default_grid(const RootedGraph& g);

/// Candidate count of the exhaustive grid (saturates at UINT64_MAX).
std::uint64_t grid_size(const RootedGraph& g, const SearchGrid& grid);

/// Candidate number `index` in lexicographic order over (diagonal, edges),
/// diagonal position 0 most significant.
Matrix grid_matrix(const RootedGraph& g, const SearchGrid& grid, std::uint64_t index);

/// Seed from SNIPLAB_SEED when set, otherwise `fallback`.
std::uint64_t seed_from_environment(std::uint64_t fallback = default_seed);

/// First grid matrix with the target pair (and i-SNIP when required) at the
/// root. nullopt means "not found in this grid", never "impossible".
std::optional<SnipCertificate> search_certificate(const RootedGraph& g, const NullityPair& target,
                                                  bool require_snip, const SearchGrid& grid);

struct PairFlag {
    NullityPair pair;
    bool snip = false;

    friend auto operator<=>(const PairFlag&, const PairFlag&) = default;
};

/// Every (pair, SNIP) realized over the grid. Sound, complete only relative
/// to the grid.
std::set<PairFlag> enumerate_pairs(const RootedGraph& g, const SearchGrid& grid);

/// Value a SNIP pair certifies: k + l when k <= l, and 2l for (l + 1, l),
/// which implies (l, l).
std::size_t certified_value(const NullityPair& p);

struct LowerBound {
    std::size_t value = 0;
    std::optional<SnipCertificate> certificate;  // on the full input graph
};

/// Best certified value found over the grid, stopping early at `stop_at`.
/// The search runs on the root component; the certificate is lifted to the
/// whole graph by a diagonally dominant block on the other vertices.
LowerBound certified_lower_bound(const RootedGraph& g, const SearchGrid& grid,
                                 std::size_t stop_at = SIZE_MAX);

/// Like certified_lower_bound but with default_grid, switching to randomized
/// sampling (`samples` candidates) when the exhaustive grid exceeds
/// `exhaustive_limit` candidates.
LowerBound certified_lower_bound_auto(const RootedGraph& g, std::uint64_t exhaustive_limit,
                                      std::uint64_t samples, std::size_t stop_at = SIZE_MAX);

inline constexpr int saturation_value = 5;

/// Largest s in 0..5 such that g contains a member of minimal_minor_family(s)
/// as a rooted minor, evaluated on the root component.
int minor_value(const RootedGraph& g, std::size_t cap = default_containment_cap);

struct XiXiReport {
    RootedGraph graph;
    std::size_t certified_lower = 0;
    int minor_value = 0;
    bool saturated = false;  // true value may exceed 5
    std::vector<SnipCertificate> certificates;
    bool edge_bound_ok = false;
};

XiXiReport xixi_minor_based(const RootedGraph& g, const std::optional<SearchGrid>& grid = {},
                            std::size_t cap = default_containment_cap);

/// (G_j, root) for every component of G - root, each with the root added
/// back. Throws NotACutVertex unless the root separates the graph.
std::vector<RootedGraph> cut_vertex_reduce(const RootedGraph& g);

/// e(G) + 1 >= C(m, 2) with m = ceil((lower + 3) / 2).
bool edge_bound_check(const RootedGraph& g, std::size_t lower);

/// (lower_g + lower_complement)^2 <= 8 n^2.
bool ng_bound_check(std::size_t n, std::size_t lower_g, std::size_t lower_complement);
bool ng_bound_check(const RootedGraph& g, const SearchGrid& grid);

}  // namespace sniplab
