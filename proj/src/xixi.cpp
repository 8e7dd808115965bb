#include "sniplab/xixi.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "sniplab/error.hpp"

namespace sniplab {

namespace {

constexpr std::uint64_t no_index = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > no_index / a) {
        return no_index;
    }
    return a * b;
}

void validate_grid(const SearchGrid& grid)
{
    if (grid.diagonal_values.empty() || grid.edge_values.empty()) {
        throw Error(ErrorKind::InvalidArgument, "grid value lists must be nonempty");
    }
    for (const auto& v : grid.edge_values) {
        if (v == 0) {
            throw Error(ErrorKind::InvalidArgument, "grid edge values must be nonzero");
        }
    }
}

unsigned worker_count(const SearchGrid& grid)
{
    unsigned t = grid.threads == 0 ? std::thread::hardware_concurrency() : grid.threads;
    return std::max(1u, t);
}

// Maps scan positions to grid indices. Exhaustive: identity. Randomized: a
// precomputed list of uniform draws so the result does not depend on the
// number of workers.
class Schedule {
public:
    Schedule(const RootedGraph& g, const SearchGrid& grid)
    {
        validate_grid(grid);
        const std::uint64_t total = grid_size(g, grid);
        if (grid.mode == SearchMode::Exhaustive) {
            if (total > grid.cap) {
                throw Error(ErrorKind::GridTooLarge,
                            "grid has " + (total == no_index ? std::string("over 2^64")
                                                             : std::to_string(total)) +
                                " candidates, cap is " + std::to_string(grid.cap));
            }
            length_ = total;
            return;
        }
        std::mt19937_64 rng(grid.seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
        draws_.resize(grid.sample_count);
        for (auto& d : draws_) {
            d = pick(rng);
        }
        length_ = draws_.size();
    }

    std::uint64_t size() const { return length_; }
    std::uint64_t operator[](std::uint64_t pos) const { return draws_.empty() ? pos : draws_[pos]; }

private:
    std::uint64_t length_ = 0;
    std::vector<std::uint64_t> draws_;
};

// Runs body(pos) for pos in [0, length) split round-robin over workers.
template <typename Body>
void parallel_scan(std::uint64_t length, unsigned workers, Body body)
{
    if (workers <= 1 || length < 2) {
        body(0, length, 1);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&body, w, length, workers] { body(w, length, workers); });
    }
    for (auto& t : pool) {
        t.join();
    }
}

void lower_atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value)
{
    std::uint64_t cur = target.load();
    while (value < cur && !target.compare_exchange_weak(cur, value)) {
    }
}

// The search space lives on the root component; this lifts a matrix back.
struct ComponentView {
    RootedGraph full;
    RootedGraph part;
    std::vector<Vertex> part_vertices;  // part label -> full label

    explicit ComponentView(const RootedGraph& g) : full(g)
    {
        const VertexMask comp = component_of(g, g.root());
        part = g.induced(comp);
        for (Vertex v = 0; v < g.n(); ++v) {
            if ((comp >> v) & 1u) {
                part_vertices.push_back(v);
            }
        }
    }

    bool trivial() const { return part_vertices.size() == full.n(); }

    Matrix lift(const Matrix& a) const
    {
        if (trivial()) {
            return a;
        }
        const std::size_t n = full.n();
        std::vector<bool> inside(n, false);
        for (Vertex v : part_vertices) {
            inside[v] = true;
        }
        std::size_t max_degree = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (!inside[v]) {
                max_degree = std::max(max_degree, full.degree(v));
            }
        }
        Matrix m(n, n);
        for (std::size_t r = 0; r < part_vertices.size(); ++r) {
            for (std::size_t c = 0; c < part_vertices.size(); ++c) {
                m(part_vertices[r], part_vertices[c]) = a(r, c);
            }
        }
        // Adj(H) + (max degree + 1) I is strictly diagonally dominant, hence
        // invertible, so the nullities do not move.
        for (Vertex v = 0; v < n; ++v) {
            if (inside[v]) {
                continue;
            }
            m(v, v) = static_cast<long>(max_degree + 1);
            for (Vertex w = 0; w < n; ++w) {
                if (full.has_edge(v, w)) {
                    m(v, w) = 1;
                }
            }
        }
        return m;
    }
};

}  // namespace

SearchGrid default_grid(const RootedGraph& g)
{
    SearchGrid grid;
    for (long d = -2; d <= 2; ++d) {
        grid.diagonal_values.emplace_back(d);
    }
    grid.edge_values.emplace_back(1);
    if (!is_forest(g)) {
        grid.edge_values.emplace_back(-1);
    }
    return grid;
}

std::uint64_t grid_size(const RootedGraph& g, const SearchGrid& grid)
{
    std::uint64_t total = 1;
    for (std::size_t v = 0; v < g.n(); ++v) {
        total = saturating_mul(total, grid.diagonal_values.size());
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        total = saturating_mul(total, grid.edge_values.size());
    }
    return total;
}

Matrix grid_matrix(const RootedGraph& g, const SearchGrid& grid, std::uint64_t index)
{
    const auto edges = g.edges();
    const std::size_t n = g.n();
    Matrix a(n, n);
    const std::uint64_t de = grid.edge_values.size();
    const std::uint64_t dd = grid.diagonal_values.size();
    for (std::size_t e = edges.size(); e-- > 0;) {
        const auto& value = grid.edge_values[index % de];
        index /= de;
        a(edges[e].first, edges[e].second) = value;
        a(edges[e].second, edges[e].first) = value;
    }
    for (std::size_t v = n; v-- > 0;) {
        a(v, v) = grid.diagonal_values[index % dd];
        index /= dd;
    }
    return a;
}

std::uint64_t seed_from_environment(std::uint64_t fallback)
{
    const char* text = std::getenv("SNIPLAB_SEED");
    if (text == nullptr || *text == '\0') {
        return fallback;
    }
    try {
        std::size_t used = 0;
        const unsigned long long value = std::stoull(text, &used, 0);
        if (used != std::string(text).size()) {
            throw std::invalid_argument("trailing characters");
        }
        return value;
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument,
                    std::string("SNIPLAB_SEED is not an unsigned integer: ") + text);
    }
}

std::optional<SnipCertificate> search_certificate(const RootedGraph& g, const NullityPair& target,
                                                  bool require_snip, const SearchGrid& grid)
{
    const std::size_t gap = target.k > target.l ? target.k - target.l : target.l - target.k;
    if (gap > 1) {
        throw Error(ErrorKind::InvalidArgument,
                    "target " + to_string(target) + " violates interlacing");
    }
    const Schedule schedule(g, grid);
    const Vertex i = g.root();
    std::atomic<std::uint64_t> found{no_index};
    parallel_scan(schedule.size(), worker_count(grid),
                  [&](std::uint64_t start, std::uint64_t length, std::uint64_t stride) {
                      for (std::uint64_t pos = start; pos < length && pos < found.load();
                           pos += stride) {
                          const Matrix a = grid_matrix(g, grid, schedule[pos]);
                          if (nullity_pair(a, i) != target) {
                              continue;
                          }
                          if (require_snip && !has_isnip_direct(a, g, i)) {
                              continue;
                          }
                          lower_atomic_min(found, pos);
                          return;
                      }
                  });
    if (found.load() == no_index) {
        return std::nullopt;
    }
    return certify(grid_matrix(g, grid, schedule[found.load()]), g);
}

std::set<PairFlag> enumerate_pairs(const RootedGraph& g, const SearchGrid& grid)
{
    const Schedule schedule(g, grid);
    const Vertex i = g.root();
    std::set<PairFlag> result;
    std::mutex guard;
    parallel_scan(schedule.size(), worker_count(grid),
                  [&](std::uint64_t start, std::uint64_t length, std::uint64_t stride) {
                      std::set<PairFlag> local;
                      // SNIP is decided once per pair: true as soon as any
                      // witness has it.
                      std::set<NullityPair> with_snip;
                      std::set<NullityPair> without_snip;
                      for (std::uint64_t pos = start; pos < length; pos += stride) {
                          const Matrix a = grid_matrix(g, grid, schedule[pos]);
                          const NullityPair p = nullity_pair(a, i);
                          if (with_snip.count(p) && without_snip.count(p)) {
                              continue;
                          }
                          const bool snip = has_isnip_direct(a, g, i);
                          (snip ? with_snip : without_snip).insert(p);
                          local.insert({p, snip});
                      }
                      const std::lock_guard lock(guard);
                      result.insert(local.begin(), local.end());
                  });
    return result;
}

std::size_t certified_value(const NullityPair& p)
{
    if (p.k <= p.l) {
        return p.k + p.l;
    }
    return 2 * p.l;
}

LowerBound certified_lower_bound(const RootedGraph& g, const SearchGrid& grid, std::size_t stop_at)
{
    const ComponentView view(g);
    const RootedGraph& h = view.part;
    const Schedule schedule(h, grid);
    const Vertex i = h.root();

    struct Best {
        std::size_t value = 0;
        std::uint64_t pos = no_index;
    };
    Best best;
    std::mutex guard;
    std::atomic<std::uint64_t> stop_pos{no_index};
    parallel_scan(schedule.size(), worker_count(grid),
                  [&](std::uint64_t start, std::uint64_t length, std::uint64_t stride) {
                      Best local;
                      for (std::uint64_t pos = start; pos < length && pos < stop_pos.load();
                           pos += stride) {
                          const Matrix a = grid_matrix(h, grid, schedule[pos]);
                          const NullityPair p = nullity_pair(a, i);
                          const std::size_t value = certified_value(p);
                          if (local.pos != no_index && value <= local.value) {
                              continue;
                          }
                          if (!has_isnip_direct(a, h, i)) {
                              continue;
                          }
                          local = {value, pos};
                          if (value >= stop_at) {
                              lower_atomic_min(stop_pos, pos);
                              break;
                          }
                      }
                      const std::lock_guard lock(guard);
                      if (local.pos == no_index) {
                          return;
                      }
                      if (best.pos == no_index || local.value > best.value ||
                          (local.value == best.value && local.pos < best.pos)) {
                          best = local;
                      }
                  });
    LowerBound out;
    if (best.pos == no_index) {
        return out;
    }
    // With early exit, the smallest position reaching stop_at wins.
    if (stop_pos.load() != no_index) {
        best = {certified_value(nullity_pair(grid_matrix(h, grid, schedule[stop_pos.load()]), i)),
                stop_pos.load()};
    }
    const Matrix lifted = view.lift(grid_matrix(h, grid, schedule[best.pos]));
    SnipCertificate cert = certify(lifted, g);
    if (!cert.snip() || certified_value(cert.pair) != best.value) {
        throw Error(ErrorKind::InvalidOp, "lifted certificate failed verification");
    }
    out.value = best.value;
    out.certificate = std::move(cert);
    return out;
}

LowerBound certified_lower_bound_auto(const RootedGraph& g, std::uint64_t exhaustive_limit,
                                      std::uint64_t samples, std::size_t stop_at)
{
    const RootedGraph part = g.induced(component_of(g, g.root()));
    SearchGrid grid = default_grid(part);
    if (grid_size(part, grid) > exhaustive_limit) {
        grid.mode = SearchMode::Randomized;
        grid.sample_count = samples;
        grid.seed = seed_from_environment(grid.seed);
    }
    return certified_lower_bound(g, grid, stop_at);
}

int minor_value(const RootedGraph& g, std::size_t cap)
{
    static const std::vector<std::vector<RootedGraph>> families = [] {
        std::vector<std::vector<RootedGraph>> f;
        for (int s = 0; s <= max_known_minor_family; ++s) {
            f.push_back(minimal_minor_family(s));
        }
        return f;
    }();
    const RootedGraph h = g.induced(component_of(g, g.root()));
    if (h.n() > cap) {
        throw Error(ErrorKind::SizeLimit, "root component has " + std::to_string(h.n()) +
                                              " vertices, cap is " + std::to_string(cap));
    }
    for (int s = max_known_minor_family; s > 0; --s) {
        for (const auto& pattern : families[static_cast<std::size_t>(s)]) {
            if (contains_rooted_minor(h, pattern, cap)) {
                return s;
            }
        }
    }
    return 0;
}

XiXiReport xixi_minor_based(const RootedGraph& g, const std::optional<SearchGrid>& grid,
                            std::size_t cap)
{
    XiXiReport report;
    report.graph = g;
    report.minor_value = minor_value(g, cap);
    report.saturated = report.minor_value == saturation_value;
    const std::size_t stop_at =
        report.saturated ? SIZE_MAX : static_cast<std::size_t>(report.minor_value);
    const LowerBound lower = grid ? certified_lower_bound(g, *grid, stop_at)
                                  : certified_lower_bound_auto(g, 200'000, 20'000, stop_at);
    report.certified_lower = lower.value;
    if (lower.certificate) {
        report.certificates.push_back(*lower.certificate);
    }
    report.edge_bound_ok = edge_bound_check(g, report.certified_lower);
    return report;
}

std::vector<RootedGraph> cut_vertex_reduce(const RootedGraph& g)
{
    const Vertex r = g.root();
    if (!is_cut_vertex(g, r)) {
        throw Error(ErrorKind::NotACutVertex,
                    "root " + std::to_string(r) + " is not a cut-vertex");
    }
    const RootedGraph without = g.remove_vertex_unchecked(r);
    // Labels in `without` skip r.
    auto to_full = [r](Vertex v) { return v < r ? v : v + 1; };
    std::vector<RootedGraph> parts;
    VertexMask seen = 0;
    for (Vertex v = 0; v < without.n(); ++v) {
        if ((seen >> v) & 1u) {
            continue;
        }
        const VertexMask comp = component_of(without, v);
        seen |= comp;
        VertexMask keep = VertexMask{1} << r;
        for (Vertex w = 0; w < without.n(); ++w) {
            if ((comp >> w) & 1u) {
                keep |= VertexMask{1} << to_full(w);
            }
        }
        // Only sides attached to the root take part.
        if ((g.neighbors(r) & keep) == 0) {
            continue;
        }
        parts.push_back(g.induced(keep));
    }
    return parts;
}

bool edge_bound_check(const RootedGraph& g, std::size_t lower)
{
    const std::size_t m = (lower + 3 + 1) / 2;
    return g.edge_count() + 1 >= m * (m - 1) / 2;
}

bool ng_bound_check(std::size_t n, std::size_t lower_g, std::size_t lower_complement)
{
    const std::size_t sum = lower_g + lower_complement;
    return sum * sum <= 8 * n * n;
}

bool ng_bound_check(const RootedGraph& g, const SearchGrid& grid)
{
    const std::size_t a = certified_lower_bound(g, grid).value;
    return ng_bound_check(g.n(), a, certified_lower_bound(complement(g), grid).value);
}

}  // namespace sniplab
