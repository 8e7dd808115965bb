#pragma once

// Rooted simple graphs, rooted minor operations and containment, the named
// graph families, and graph6 I/O.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace sniplab {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexMask = std::uint64_t;

/// Simple undirected graph on vertices 0..n-1 with a designated root.
/// Loops and multi-edges cannot be represented. At most 64 vertices.
class RootedGraph {
public:
    static constexpr std::size_t max_vertices = 64;

    RootedGraph() : RootedGraph(1) {}
    explicit RootedGraph(std::size_t n, Vertex root = 0);
    RootedGraph(std::size_t n, const std::vector<Edge>& edges, Vertex root = 0);

    std::size_t n() const noexcept { return adj_.size(); }
    Vertex root() const noexcept { return root_; }
    RootedGraph with_root(Vertex root) const;

    bool has_edge(Vertex u, Vertex v) const;
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    VertexMask neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const;
    std::size_t edge_count() const;
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    VertexMask all_vertices() const noexcept;

    /// Induced subgraph on the vertices of `keep`, relabelled in ascending
    /// order. The root maps to its new label when kept; otherwise to 0.
    RootedGraph induced(VertexMask keep) const;
    /// G - v without the root restriction (used for A(i) against G - i).
    RootedGraph remove_vertex_unchecked(Vertex v) const;

    friend bool operator==(const RootedGraph&, const RootedGraph&) = default;

private:
    std::vector<VertexMask> adj_;
    Vertex root_ = 0;
};

struct DeleteEdge {
    Vertex u, v;
};
struct DeleteVertex {
    Vertex v;
};
struct ContractEdge {
    Vertex u, v;
};
using MinorOp = std::variant<DeleteEdge, DeleteVertex, ContractEdge>;

std::string to_string(const MinorOp& op);

/// One rooted minor step. Contraction keeps the merged vertex at label
/// min(u, v), drops max(u, v) and shifts later labels down; the merged vertex
/// becomes the root when the contracted edge touches the root.
RootedGraph apply_minor_op(const RootedGraph& g, const MinorOp& op);

/// Every legal single operation on g, in a fixed order.
std::vector<MinorOp> one_step_ops(const RootedGraph& g);

inline constexpr std::size_t default_containment_cap = 12;

/// Rooted minor containment by branch-set backtracking: disjoint connected
/// branch sets, one per pattern vertex, realizing every pattern edge, with
/// host.root in the branch set of pattern.root.
bool contains_rooted_minor(const RootedGraph& host, const RootedGraph& pattern,
                           std::size_t cap = default_containment_cap);
/// Same search with the root condition dropped.
bool contains_minor(const RootedGraph& host, const RootedGraph& pattern,
                    std::size_t cap = default_containment_cap);

/// Appends a leaf (label n) to the root and makes it the new root.
RootedGraph extend_root(const RootedGraph& g);

/// Identifies vertex `at_first` of g1 with vertex `at_second` of g2. The
/// glued vertex keeps its label from g1; vertices of g2 follow as n1, n1+1, ...
/// in their original order. The root is g1's root (mapped through the glue).
RootedGraph vertex_sum(const RootedGraph& g1, Vertex at_first, const RootedGraph& g2,
                       Vertex at_second);

bool is_connected(const RootedGraph& g);
bool is_cut_vertex(const RootedGraph& g, Vertex v);
/// Vertices reachable from v.
VertexMask component_of(const RootedGraph& g, Vertex v);
bool is_forest(const RootedGraph& g);
RootedGraph complement(const RootedGraph& g);

enum class Family {
    Complete,
    Star,
    Path,
    Paw,
    S211,
    T3_K4,
    T3_K23,
    T3_T,
    T3_T1,
    T3_T2,
    T3_T3,
};

/// Fixed labelled graph (root 0). `size` is used by Complete (K_size),
/// Star (K_{1,size}, center 0) and Path (P_size, 0-1-...-(size-1)).
/// Paw: triangle 0,1,2 with pendant 3 on 0. S211: center 0, leaves 2 and 3,
/// leg 0-1-4. T3 members are the supports of the displayed matrices.
RootedGraph family(Family id, std::size_t size = 0);
std::string family_name(Family id);

/// The six T3-family graphs in the order K4, K23, T, T1, T2, T3.
const std::vector<std::pair<Family, RootedGraph>>& t3_family();

inline constexpr int max_known_minor_family = 5;

/// Minimal rooted minors for xixi >= s, s in 0..5. Throws OutOfRange above 5.
std::vector<RootedGraph> minimal_minor_family(int s);

/// graph6 encoding of the unrooted structure.
std::string to_graph6(const RootedGraph& g);
RootedGraph from_graph6(std::string_view text, Vertex root = 0);

}  // namespace sniplab
