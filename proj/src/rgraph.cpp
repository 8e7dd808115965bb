#include "sniplab/rgraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "witness_data.hpp"
#include "sniplab/error.hpp"

namespace sniplab {

namespace {

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

std::size_t popcount(VertexMask m) { return static_cast<std::size_t>(std::popcount(m)); }

Vertex lowest(VertexMask m) { return static_cast<Vertex>(std::countr_zero(m)); }

void check_vertex(const RootedGraph& g, Vertex v, const char* what)
{
    if (v >= g.n()) {
        throw Error(ErrorKind::InvalidOp,
                    std::string(what) + ": vertex " + std::to_string(v) + " does not exist");
    }
}

}  // namespace

RootedGraph::RootedGraph(std::size_t n, Vertex root) : adj_(n, 0), root_(root)
{
    if (n == 0 || n > max_vertices) {
        throw Error(ErrorKind::SizeLimit, "graph needs 1.." + std::to_string(max_vertices) +
                                              " vertices, got " + std::to_string(n));
    }
    if (root >= n) {
        throw Error(ErrorKind::OutOfRange, "root " + std::to_string(root) + " out of range");
    }
}

RootedGraph::RootedGraph(std::size_t n, const std::vector<Edge>& edges, Vertex root)
    : RootedGraph(n, root)
{
    for (const auto& [u, v] : edges) {
        add_edge(u, v);
    }
}

RootedGraph RootedGraph::with_root(Vertex root) const
{
    if (root >= n()) {
        throw Error(ErrorKind::OutOfRange, "root " + std::to_string(root) + " out of range");
    }
    RootedGraph g = *this;
    g.root_ = root;
    return g;
}

bool RootedGraph::has_edge(Vertex u, Vertex v) const
{
    return u < n() && v < n() && (adj_[u] & bit(v)) != 0;
}

void RootedGraph::add_edge(Vertex u, Vertex v)
{
    if (u >= n() || v >= n()) {
        throw Error(ErrorKind::OutOfRange, "edge endpoint out of range");
    }
    if (u == v) {
        throw Error(ErrorKind::InvalidArgument, "loops are not allowed");
    }
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void RootedGraph::remove_edge(Vertex u, Vertex v)
{
    if (u < n() && v < n()) {
        adj_[u] &= ~bit(v);
        adj_[v] &= ~bit(u);
    }
}

std::size_t RootedGraph::degree(Vertex v) const { return popcount(adj_.at(v)); }

std::size_t RootedGraph::edge_count() const
{
    std::size_t twice = 0;
    for (VertexMask m : adj_) {
        twice += popcount(m);
    }
    return twice / 2;
}

std::vector<Edge> RootedGraph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n(); ++u) {
        for (Vertex v = u + 1; v < n(); ++v) {
            if (adj_[u] & bit(v)) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

VertexMask RootedGraph::all_vertices() const noexcept
{
    return n() == 64 ? ~VertexMask{0} : bit(n()) - 1;
}

RootedGraph RootedGraph::induced(VertexMask keep) const
{
    keep &= all_vertices();
    std::vector<Vertex> label(n(), n());
    Vertex next = 0;
    for (Vertex v = 0; v < n(); ++v) {
        if (keep & bit(v)) {
            label[v] = next++;
        }
    }
    RootedGraph g(next, (keep & bit(root_)) ? label[root_] : 0);
    for (const auto& [u, v] : edges()) {
        if ((keep & bit(u)) && (keep & bit(v))) {
            g.add_edge(label[u], label[v]);
        }
    }
    return g;
}

RootedGraph RootedGraph::remove_vertex_unchecked(Vertex v) const
{
    return induced(all_vertices() & ~bit(v));
}

std::string to_string(const MinorOp& op)
{
    std::ostringstream os;
    std::visit(
        [&os](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, DeleteEdge>) {
                os << "DeleteEdge(" << o.u << "," << o.v << ")";
            } else if constexpr (std::is_same_v<T, DeleteVertex>) {
                os << "DeleteVertex(" << o.v << ")";
            } else {
                os << "ContractEdge(" << o.u << "," << o.v << ")";
            }
        },
        op);
    return os.str();
}

RootedGraph apply_minor_op(const RootedGraph& g, const MinorOp& op)
{
    return std::visit(
        [&g](const auto& o) -> RootedGraph {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, DeleteEdge>) {
                check_vertex(g, o.u, "DeleteEdge");
                check_vertex(g, o.v, "DeleteEdge");
                if (!g.has_edge(o.u, o.v)) {
                    throw Error(ErrorKind::InvalidOp, "DeleteEdge: no such edge");
                }
                RootedGraph h = g;
                h.remove_edge(o.u, o.v);
                return h;
            } else if constexpr (std::is_same_v<T, DeleteVertex>) {
                check_vertex(g, o.v, "DeleteVertex");
                if (o.v == g.root()) {
                    throw Error(ErrorKind::InvalidOp, "DeleteVertex: cannot delete the root");
                }
                if (g.n() == 1) {
                    throw Error(ErrorKind::InvalidOp, "DeleteVertex: graph would be empty");
                }
                return g.induced(g.all_vertices() & ~bit(o.v));
            } else {
                check_vertex(g, o.u, "ContractEdge");
                check_vertex(g, o.v, "ContractEdge");
                if (!g.has_edge(o.u, o.v)) {
                    throw Error(ErrorKind::InvalidOp, "ContractEdge: no such edge");
                }
                const Vertex keep = std::min(o.u, o.v);
                const Vertex drop = std::max(o.u, o.v);
                RootedGraph h = g;
                for (Vertex w = 0; w < g.n(); ++w) {
                    if (w != keep && g.has_edge(drop, w)) {
                        h.add_edge(keep, w);
                    }
                }
                h.remove_edge(keep, drop);
                const Vertex root = g.root() == drop ? keep : g.root();
                h = h.with_root(root);
                return h.induced(h.all_vertices() & ~bit(drop));
            }
        },
        op);
}

std::vector<MinorOp> one_step_ops(const RootedGraph& g)
{
    std::vector<MinorOp> ops;
    for (const auto& [u, v] : g.edges()) {
        ops.emplace_back(DeleteEdge{u, v});
    }
    for (Vertex v = 0; v < g.n(); ++v) {
        if (v != g.root() && g.n() > 1) {
            ops.emplace_back(DeleteVertex{v});
        }
    }
    for (const auto& [u, v] : g.edges()) {
        ops.emplace_back(ContractEdge{u, v});
    }
    return ops;
}

VertexMask component_of(const RootedGraph& g, Vertex v)
{
    VertexMask seen = bit(v);
    VertexMask frontier = seen;
    while (frontier) {
        VertexMask next = 0;
        for (VertexMask f = frontier; f; f &= f - 1) {
            next |= g.neighbors(lowest(f));
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

namespace {

std::size_t component_count(const RootedGraph& g, VertexMask within)
{
    std::size_t count = 0;
    VertexMask left = within;
    while (left) {
        const Vertex v = lowest(left);
        VertexMask seen = bit(v);
        VertexMask frontier = seen;
        while (frontier) {
            VertexMask next = 0;
            for (VertexMask f = frontier; f; f &= f - 1) {
                next |= g.neighbors(lowest(f));
            }
            next &= within;
            frontier = next & ~seen;
            seen |= next;
        }
        left &= ~seen;
        ++count;
    }
    return count;
}

// Number of independent cycles e - n + c; never increases under minors.
std::size_t cycle_rank(const RootedGraph& g)
{
    return g.edge_count() + component_count(g, g.all_vertices()) - g.n();
}

VertexMask neighborhood(const RootedGraph& g, VertexMask set)
{
    VertexMask out = 0;
    for (VertexMask s = set; s; s &= s - 1) {
        out |= g.neighbors(lowest(s));
    }
    return out & ~set;
}

class BranchSetSearch {
public:
    BranchSetSearch(const RootedGraph& host, const RootedGraph& pattern, bool rooted)
        : host_(host), pattern_(pattern), rooted_(rooted), branch_(pattern.n(), 0),
          placed_(pattern.n(), false)
    {
        order_.resize(pattern.n());
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
            return pattern.degree(a) > pattern.degree(b);
        });
    }

    bool run() { return place(0); }

private:
    bool place(std::size_t depth)
    {
        if (depth == order_.size()) {
            return true;
        }
        const Vertex pv = order_[depth];
        const std::size_t remaining = order_.size() - depth - 1;
        const bool is_pattern_root = rooted_ && pv == pattern_.root();

        VertexMask free = host_.all_vertices() & ~used_;
        if (rooted_ && !is_pattern_root) {
            free &= ~bit(host_.root());
        }
        const std::size_t available = popcount(host_.all_vertices() & ~used_);
        if (available < remaining + 1) {
            return false;
        }
        const std::size_t max_size = available - remaining;

        // Branch sets of already placed pattern neighbors must each touch S.
        std::vector<VertexMask> required;
        for (Vertex q = 0; q < pattern_.n(); ++q) {
            if (placed_[q] && pattern_.has_edge(pv, q)) {
                required.push_back(neighborhood(host_, branch_[q]));
            }
        }

        auto accept = [&](VertexMask s) {
            for (VertexMask r : required) {
                if ((s & r) == 0) {
                    return false;
                }
            }
            branch_[pv] = s;
            placed_[pv] = true;
            used_ |= s;
            const bool ok = feasible(remaining) && place(depth + 1);
            used_ &= ~s;
            placed_[pv] = false;
            return ok;
        };

        if (is_pattern_root) {
            const Vertex anchor = host_.root();
            if (used_ & bit(anchor)) {
                return false;
            }
            const VertexMask allowed = free | bit(anchor);
            return grow(bit(anchor), host_.neighbors(anchor) & allowed, allowed, max_size, accept);
        }

        // Each candidate set is generated once, anchored at its lowest vertex
        // inside `targets`.
        VertexMask targets = free;
        if (!required.empty()) {
            targets &= required.front();
        }
        VertexMask allowed = free;
        for (VertexMask t = targets; t; t &= t - 1) {
            const Vertex anchor = lowest(t);
            if (grow(bit(anchor), host_.neighbors(anchor) & allowed & ~bit(anchor), allowed,
                     max_size, accept)) {
                return true;
            }
            allowed &= ~bit(anchor);
        }
        return false;
    }

    // Every placed vertex with an unplaced pattern neighbor still needs a free
    // host vertex next to its branch set.
    bool feasible(std::size_t remaining) const
    {
        const VertexMask avail = host_.all_vertices() & ~used_;
        if (popcount(avail) < remaining) {
            return false;
        }
        for (Vertex q = 0; q < pattern_.n(); ++q) {
            if (!placed_[q]) {
                continue;
            }
            bool needs = false;
            for (Vertex w = 0; w < pattern_.n() && !needs; ++w) {
                needs = !placed_[w] && pattern_.has_edge(q, w);
            }
            if (needs && (neighborhood(host_, branch_[q]) & avail) == 0) {
                return false;
            }
        }
        return true;
    }

    // Connected-set enumeration with exclusive-neighbourhood extension: each
    // connected subset of `allowed` containing the seed is visited once.
    template <typename Accept>
    bool grow(VertexMask sub, VertexMask ext, VertexMask allowed, std::size_t max_size,
              Accept& accept)
    {
        if (accept(sub)) {
            return true;
        }
        if (popcount(sub) >= max_size) {
            return false;
        }
        const VertexMask closed = sub | neighborhood(host_, sub);
        while (ext) {
            const Vertex w = lowest(ext);
            ext &= ext - 1;
            const VertexMask exclusive = host_.neighbors(w) & allowed & ~closed;
            if (grow(sub | bit(w), ext | exclusive, allowed, max_size, accept)) {
                return true;
            }
        }
        return false;
    }

    const RootedGraph& host_;
    const RootedGraph& pattern_;
    bool rooted_;
    std::vector<Vertex> order_;
    std::vector<VertexMask> branch_;
    std::vector<bool> placed_;
    VertexMask used_ = 0;
};

bool minor_search(const RootedGraph& host_in, const RootedGraph& pattern, bool rooted,
                  std::size_t cap)
{
    if (host_in.n() > cap) {
        throw Error(ErrorKind::SizeLimit, "host has " + std::to_string(host_in.n()) +
                                              " vertices, cap is " + std::to_string(cap));
    }
    RootedGraph host = host_in;
    if (rooted && is_connected(pattern)) {
        host = host_in.induced(component_of(host_in, host_in.root()));
    }
    if (pattern.n() > host.n() || pattern.edge_count() > host.edge_count() ||
        cycle_rank(pattern) > cycle_rank(host)) {
        return false;
    }
    BranchSetSearch search(host, pattern, rooted);
    return search.run();
}

}  // namespace

bool contains_rooted_minor(const RootedGraph& host, const RootedGraph& pattern, std::size_t cap)
{
    return minor_search(host, pattern, true, cap);
}

bool contains_minor(const RootedGraph& host, const RootedGraph& pattern, std::size_t cap)
{
    return minor_search(host, pattern, false, cap);
}

RootedGraph extend_root(const RootedGraph& g)
{
    RootedGraph h(g.n() + 1, g.edges(), g.n());
    h.add_edge(g.root(), g.n());
    return h;
}

RootedGraph vertex_sum(const RootedGraph& g1, Vertex at_first, const RootedGraph& g2,
                       Vertex at_second)
{
    if (at_first >= g1.n() || at_second >= g2.n()) {
        throw Error(ErrorKind::OutOfRange, "vertex_sum: glue vertex out of range");
    }
    std::vector<Vertex> label(g2.n());
    Vertex next = g1.n();
    for (Vertex v = 0; v < g2.n(); ++v) {
        label[v] = v == at_second ? at_first : next++;
    }
    RootedGraph g(next, g1.edges(), g1.root());
    for (const auto& [u, v] : g2.edges()) {
        g.add_edge(label[u], label[v]);
    }
    return g;
}

bool is_connected(const RootedGraph& g)
{
    return component_of(g, 0) == g.all_vertices();
}

bool is_cut_vertex(const RootedGraph& g, Vertex v)
{
    if (v >= g.n()) {
        throw Error(ErrorKind::OutOfRange, "vertex out of range");
    }
    const VertexMask comp = component_of(g, v) & ~bit(v);
    return component_count(g, comp) > 1;
}

bool is_forest(const RootedGraph& g) { return cycle_rank(g) == 0; }

RootedGraph complement(const RootedGraph& g)
{
    RootedGraph c(g.n(), g.root());
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v = u + 1; v < g.n(); ++v) {
            if (!g.has_edge(u, v)) {
                c.add_edge(u, v);
            }
        }
    }
    return c;
}

namespace {

RootedGraph support_of_table(std::size_t index)
{
    const auto table = detail::witness_table(index);
    RootedGraph g(table.n);
    for (Vertex u = 0; u < table.n; ++u) {
        for (Vertex v = u + 1; v < table.n; ++v) {
            if (table.entries[u * table.n + v] != 0) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

}  // namespace

RootedGraph family(Family id, std::size_t size)
{
    switch (id) {
    case Family::Complete: {
        RootedGraph g(size);
        for (Vertex u = 0; u < size; ++u) {
            for (Vertex v = u + 1; v < size; ++v) {
                g.add_edge(u, v);
            }
        }
        return g;
    }
    case Family::Star: {
        RootedGraph g(size + 1);
        for (Vertex v = 1; v <= size; ++v) {
            g.add_edge(0, v);
        }
        return g;
    }
    case Family::Path: {
        RootedGraph g(size);
        for (Vertex v = 1; v < size; ++v) {
            g.add_edge(v - 1, v);
        }
        return g;
    }
    case Family::Paw:
        return RootedGraph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    case Family::S211:
        return RootedGraph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
    case Family::T3_K4: return support_of_table(0);
    case Family::T3_K23: return support_of_table(1);
    case Family::T3_T: return support_of_table(2);
    case Family::T3_T1: return support_of_table(3);
    case Family::T3_T2: return support_of_table(4);
    case Family::T3_T3: return support_of_table(5);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown family");
}

std::string family_name(Family id)
{
    switch (id) {
    case Family::Complete: return "K_n";
    case Family::Star: return "Star";
    case Family::Path: return "Path";
    case Family::Paw: return "Paw";
    case Family::S211: return "S211";
    case Family::T3_K4: return "T3:K4";
    case Family::T3_K23: return "T3:K23";
    case Family::T3_T: return "T3:T";
    case Family::T3_T1: return "T3:T1";
    case Family::T3_T2: return "T3:T2";
    case Family::T3_T3: return "T3:T3";
    }
    return "?";
}

const std::vector<std::pair<Family, RootedGraph>>& t3_family()
{
    static const std::vector<std::pair<Family, RootedGraph>> members = [] {
        std::vector<std::pair<Family, RootedGraph>> out;
        for (Family f : {Family::T3_K4, Family::T3_K23, Family::T3_T, Family::T3_T1,
                         Family::T3_T2, Family::T3_T3}) {
            out.emplace_back(f, family(f));
        }
        return out;
    }();
    return members;
}

std::vector<RootedGraph> minimal_minor_family(int s)
{
    if (s < 0 || s > max_known_minor_family) {
        throw Error(ErrorKind::OutOfRange,
                    "minimal minors for xixi >= " + std::to_string(s) + " are unknown");
    }
    std::vector<RootedGraph> out;
    if (s % 2 == 1) {
        for (const auto& g : minimal_minor_family(s - 1)) {
            out.push_back(extend_root(g));
        }
        return out;
    }
    switch (s) {
    case 0:
        out.emplace_back(1);
        break;
    case 2:
        out.push_back(family(Family::Complete, 3).with_root(0));
        out.push_back(family(Family::Star, 3).with_root(1));
        break;
    case 4:
        for (const auto& [id, g] : t3_family()) {
            for (Vertex v = 0; v < g.n(); ++v) {
                if (!is_cut_vertex(g, v)) {
                    out.push_back(g.with_root(v));
                }
            }
        }
        break;
    }
    return out;
}

std::string to_graph6(const RootedGraph& g)
{
    std::string out;
    const std::size_t n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(63 + ((n >> shift) & 0x3f)));
        }
    }
    int acc = 0;
    int filled = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    }
    return out;
}

RootedGraph from_graph6(std::string_view text, Vertex root)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
        text.remove_suffix(1);
    }
    if (text.starts_with(">>graph6<<")) {
        text.remove_prefix(10);
    }
    if (text.empty()) {
        throw Error(ErrorKind::ParseError, "empty graph6 string");
    }
    for (char ch : text) {
        if (ch < 63 || ch > 126) {
            throw Error(ErrorKind::ParseError, "invalid graph6 character");
        }
    }
    std::size_t pos = 0;
    std::size_t n = 0;
    if (text[0] != 126) {
        n = static_cast<std::size_t>(text[0] - 63);
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == 126) {
            throw Error(ErrorKind::ParseError, "graph6 size field unsupported");
        }
        for (std::size_t k = 1; k <= 3; ++k) {
            n = (n << 6) | static_cast<std::size_t>(text[k] - 63);
        }
        pos = 4;
    }
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (text.size() - pos != expected) {
        throw Error(ErrorKind::ParseError, "graph6 length does not match vertex count");
    }
    RootedGraph g(n, root);
    std::size_t k = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++k) {
            const int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

}  // namespace sniplab
