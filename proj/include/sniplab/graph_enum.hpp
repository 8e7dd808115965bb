#pragma once

// Small-graph enumeration up to isomorphism, for exhaustive audits.

#include <cstdint>
#include <vector>

#include "sniplab/rgraph.hpp"

namespace sniplab {

struct CanonicalKey {
    std::size_t n = 0;
    std::uint64_t bits = 0;  // upper triangle of the canonical adjacency matrix
    std::size_t root = 0;    // canonical root position (0 for unrooted keys)

    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

inline constexpr std::size_t max_canonical_vertices = 11;

/// Canonical labelling by colour refinement plus exhaustive search within
/// colour cells. Two graphs get equal keys iff they are isomorphic (with the
/// root fixed when `rooted`).
CanonicalKey canonical_key(const RootedGraph& g, bool rooted);
RootedGraph from_canonical_key(const CanonicalKey& key);

/// One representative per isomorphism class of graphs on n vertices (root 0).
std::vector<RootedGraph> all_graphs(std::size_t n, bool connected_only = false);

/// One representative per isomorphism class of rooted graphs on n vertices.
std::vector<RootedGraph> all_rooted_graphs(std::size_t n, bool connected_only = false);

}  // namespace sniplab
