#include "sniplab/graph_enum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sniplab/error.hpp"

namespace sniplab {

namespace {

std::uint64_t encode(const RootedGraph& g, const std::vector<Vertex>& at_position)
{
    std::uint64_t bits = 0;
    const std::size_t n = g.n();
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            bits = (bits << 1) | (g.has_edge(at_position[i], at_position[j]) ? 1u : 0u);
        }
    }
    return bits;
}

std::vector<std::size_t> refine_colours(const RootedGraph& g, bool rooted)
{
    const std::size_t n = g.n();
    std::vector<std::size_t> colour(n);
    for (Vertex v = 0; v < n; ++v) {
        // Root first, then by degree.
        colour[v] = (rooted && v == g.root()) ? 0 : 1 + g.degree(v);
    }
    for (;;) {
        std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            sig[v].first = colour[v];
            for (Vertex w = 0; w < n; ++w) {
                if (g.has_edge(v, w)) {
                    sig[v].second.push_back(colour[w]);
                }
            }
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<std::size_t> next(n);
        for (Vertex v = 0; v < n; ++v) {
            next[v] = static_cast<std::size_t>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        }
        const auto count = [](const std::vector<std::size_t>& c) {
            return std::set<std::size_t>(c.begin(), c.end()).size();
        };
        if (count(next) == count(colour)) {
            return next;
        }
        colour = std::move(next);
    }
}

}  // namespace

CanonicalKey canonical_key(const RootedGraph& g, bool rooted)
{
    const std::size_t n = g.n();
    if (n > max_canonical_vertices) {
        throw Error(ErrorKind::SizeLimit, "canonical labelling supports at most " +
                                              std::to_string(max_canonical_vertices) +
                                              " vertices");
    }
    const auto colour = refine_colours(g, rooted);
    std::map<std::size_t, std::vector<Vertex>> cells;
    for (Vertex v = 0; v < n; ++v) {
        cells[colour[v]].push_back(v);
    }
    std::vector<std::vector<Vertex>> cell_list;
    for (auto& [c, members] : cells) {
        cell_list.push_back(members);
    }

    // Lexicographically largest code over all orderings that respect the
    // cell order. The per-cell permutations form an odometer.
    std::vector<std::vector<Vertex>> perm = cell_list;
    bool have = false;
    std::uint64_t best = 0;
    std::vector<Vertex> at_position(n);
    for (;;) {
        std::size_t pos = 0;
        for (const auto& cell : perm) {
            for (Vertex v : cell) {
                at_position[pos++] = v;
            }
        }
        const std::uint64_t code = encode(g, at_position);
        if (!have || code > best) {
            best = code;
            have = true;
        }
        std::size_t k = 0;
        while (k < perm.size() && !std::next_permutation(perm[k].begin(), perm[k].end())) {
            ++k;
        }
        if (k == perm.size()) {
            break;
        }
    }
    CanonicalKey key{n, best, 0};
    // Rooted keys always place the root first because it has colour 0.
    return key;
}

RootedGraph from_canonical_key(const CanonicalKey& key)
{
    RootedGraph g(key.n, key.root);
    std::size_t shift = key.n * (key.n - 1) / 2;
    for (std::size_t j = 1; j < key.n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            --shift;
            if ((key.bits >> shift) & 1u) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

std::vector<RootedGraph> all_graphs(std::size_t n, bool connected_only)
{
    if (n == 0 || n > max_canonical_vertices) {
        throw Error(ErrorKind::SizeLimit, "graph enumeration supports 1.." +
                                              std::to_string(max_canonical_vertices) +
                                              " vertices");
    }
    std::set<CanonicalKey> layer{canonical_key(RootedGraph(1), false)};
    for (std::size_t m = 2; m <= n; ++m) {
        std::set<CanonicalKey> next;
        for (const auto& key : layer) {
            const RootedGraph base = from_canonical_key(key);
            for (VertexMask nb = 0; nb < (VertexMask{1} << (m - 1)); ++nb) {
                RootedGraph g(m, base.edges(), 0);
                for (Vertex u = 0; u + 1 < m; ++u) {
                    if ((nb >> u) & 1u) {
                        g.add_edge(u, m - 1);
                    }
                }
                next.insert(canonical_key(g, false));
            }
        }
        layer = std::move(next);
    }
    std::vector<RootedGraph> out;
    for (const auto& key : layer) {
        RootedGraph g = from_canonical_key(key);
        if (!connected_only || is_connected(g)) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<RootedGraph> all_rooted_graphs(std::size_t n, bool connected_only)
{
    std::set<CanonicalKey> seen;
    std::vector<RootedGraph> out;
    for (const auto& g : all_graphs(n, connected_only)) {
        for (Vertex v = 0; v < n; ++v) {
            const RootedGraph rg = g.with_root(v);
            const CanonicalKey key = canonical_key(rg, true);
            if (seen.insert(key).second) {
                out.push_back(from_canonical_key(key));
            }
        }
    }
    return out;
}

}  // namespace sniplab
