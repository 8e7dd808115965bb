#include "sniplab/constructions.hpp"

#include "witness_data.hpp"
#include "sniplab/error.hpp"

namespace sniplab {

std::string to_string(WitnessMatrix id)
{
    switch (id) {
    case WitnessMatrix::A0: return "A0";
    case WitnessMatrix::A1: return "A1";
    case WitnessMatrix::B0: return "B0";
    case WitnessMatrix::B1: return "B1";
    case WitnessMatrix::B2: return "B2";
    case WitnessMatrix::B3: return "B3";
    }
    return "?";
}

const std::vector<WitnessMatrix>& all_witness_matrices()
{
    static const std::vector<WitnessMatrix> ids = {WitnessMatrix::A0, WitnessMatrix::A1,
                                                   WitnessMatrix::B0, WitnessMatrix::B1,
                                                   WitnessMatrix::B2, WitnessMatrix::B3};
    return ids;
}

std::pair<RootedGraph, Matrix> paper_matrix(WitnessMatrix id)
{
    const auto table = detail::witness_table(static_cast<std::size_t>(id));
    Matrix m(table.n, table.n);
    for (std::size_t r = 0; r < table.n; ++r) {
        for (std::size_t c = 0; c < table.n; ++c) {
            m(r, c) = table.entries[r * table.n + c];
        }
    }
    return {support_graph(m), std::move(m)};
}

Matrix star_clique_sum(const std::vector<std::vector<Vertex>>& cliques,
                       const std::vector<StarBlock>& stars, std::size_t n)
{
    Matrix m(n, n);
    auto check = [n](Vertex v) {
        if (v >= n) {
            throw Error(ErrorKind::OutOfRange, "block vertex " + std::to_string(v) +
                                                   " outside 0.." + std::to_string(n - 1));
        }
    };
    for (const auto& clique : cliques) {
        for (Vertex u : clique) {
            check(u);
            for (Vertex v : clique) {
                m(u, v) += 1;
            }
        }
    }
    for (const auto& star : stars) {
        check(star.center);
        for (Vertex leaf : star.leaves) {
            check(leaf);
            m(star.center, leaf) += 1;
            m(leaf, star.center) += 1;
        }
    }
    return m;
}

std::string to_string(StepKind kind)
{
    switch (kind) {
    case StepKind::SW: return "sw";
    case StepKind::West: return "west";
    case StepKind::South: return "south";
    }
    return "?";
}

namespace {

void require_symmetric(const Matrix& a, std::size_t i)
{
    if (!a.is_square()) {
        throw Error(ErrorKind::ShapeMismatch, "matrix is not square");
    }
    if (!a.is_symmetric()) {
        throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric");
    }
    if (i >= a.rows()) {
        throw Error(ErrorKind::OutOfRange, "index " + std::to_string(i) + " out of range");
    }
}

PerturbStep finish(StepKind kind, Rational parameter, const Matrix& original, Matrix produced,
                   std::size_t i)
{
    const RootedGraph support = support_graph(original, i);
    PerturbStep step;
    step.kind = kind;
    step.parameter = std::move(parameter);
    step.pair = nullity_pair(produced, i);
    step.strict_pattern = in_pattern(produced, support, false);
    step.closed_pattern = in_pattern(produced, support, true);
    step.matrix = std::move(produced);
    return step;
}

Vector border_of(const Matrix& a, std::size_t i)
{
    Vector b = a.column(i);
    b.erase(b.begin() + static_cast<long>(i));
    return b;
}

}  // namespace

PerturbStep sw_step(const Matrix& a, std::size_t i)
{
    require_symmetric(a, i);
    const NullityPair p = nullity_pair(a, i);
    if (p.k == 0 || p.l == 0) {
        throw Error(ErrorKind::PairTooSmall,
                    "pair " + to_string(p) + " is not of the form (k+1, l+1)");
    }
    const Matrix ker = kernel_basis(a);
    Vector v;
    for (std::size_t c = 0; c < ker.cols() && v.empty(); ++c) {
        if (ker(i, c) == 0) {
            v = ker.column(c);
        }
    }
    if (v.empty()) {
        if (ker.cols() < 2) {
            throw Error(ErrorKind::PairTooSmall, "no kernel vector vanishing at the index");
        }
        // Eliminate coordinate i between the first two basis vectors.
        const Vector v1 = ker.column(0);
        const Vector v2 = ker.column(1);
        v.resize(v1.size());
        for (std::size_t r = 0; r < v.size(); ++r) {
            v[r] = v1[i] * v2[r] - v2[i] * v1[r];
        }
    }
    std::size_t j = 0;
    while (j < v.size() && v[j] == 0) {
        ++j;
    }
    PerturbStep step = finish(StepKind::SW, static_cast<long>(j), a, add_to_diagonal(a, j, 1), i);
    if (step.pair != NullityPair{p.k - 1, p.l - 1}) {
        throw Error(ErrorKind::InvalidOp, "sw step produced " + to_string(step.pair));
    }
    return step;
}

PerturbStep west_step(const Matrix& a, std::size_t i, const Rational& eps)
{
    require_symmetric(a, i);
    if (eps == 0) {
        throw Error(ErrorKind::InvalidArgument, "west step needs eps != 0");
    }
    const NullityPair p = nullity_pair(a, i);
    if (p.k != p.l || p.k == 0) {
        throw Error(ErrorKind::NotNeutralSquare,
                    "pair " + to_string(p) + " is not of the form (k+1, k+1)");
    }
    const Matrix c = a.remove_index(i);
    const Matrix ker = kernel_basis(c);
    if (ker.cols() == 0) {
        throw Error(ErrorKind::DegenerateKernel, "A(i) is invertible");
    }
    const Vector v = ker.column(0);
    Matrix m = a;
    std::size_t r = 0;
    for (std::size_t row = 0; row < a.rows(); ++row) {
        if (row == i) {
            continue;
        }
        m(row, i) += eps * v[r];
        m(i, row) = m(row, i);
        ++r;
    }
    PerturbStep step = finish(StepKind::West, eps, a, std::move(m), i);
    if (step.pair != NullityPair{p.k - 1, p.k}) {
        throw Error(ErrorKind::InvalidOp, "west step produced " + to_string(step.pair));
    }
    return step;
}

PerturbStep south_step(const Matrix& a, std::size_t i)
{
    require_symmetric(a, i);
    const NullityPair p = nullity_pair(a, i);
    if (p.l != p.k + 1) {
        throw Error(ErrorKind::NotUpper, "pair " + to_string(p) + " is not of the form (k, k+1)");
    }
    const Vector b = border_of(a, i);
    Rational eps = 1;
    for (int halvings = 0; halvings <= south_max_halvings; ++halvings) {
        Matrix m = a;
        std::size_t r = 0;
        for (std::size_t row = 0; row < a.rows(); ++row) {
            if (row == i) {
                continue;
            }
            std::size_t s = 0;
            for (std::size_t col = 0; col < a.cols(); ++col) {
                if (col == i) {
                    continue;
                }
                m(row, col) += eps * b[r] * b[s];
                ++s;
            }
            ++r;
        }
        if (nullity_pair(m, i) == NullityPair{p.k, p.k}) {
            return finish(StepKind::South, eps, a, std::move(m), i);
        }
        eps /= 2;
    }
    throw Error(ErrorKind::NoSmallEps, "no eps down to 2^-60 reached (k, k)");
}

Matrix append_leaf_matrix(const Matrix& b, std::size_t j, const Rational& a, const Rational& k)
{
    if (k == 0) {
        throw Error(ErrorKind::ZeroWeight, "leaf edge weight must be nonzero");
    }
    if (!b.is_square() || j >= b.rows()) {
        throw Error(ErrorKind::OutOfRange, "attachment vertex out of range");
    }
    const std::size_t n = b.rows();
    Matrix out(n + 1, n + 1);
    out(0, 0) = a;
    out(0, j + 1) = k;
    out(j + 1, 0) = k;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out(r + 1, c + 1) = b(r, c);
        }
    }
    return out;
}

RootedGraph append_leaf_graph(const RootedGraph& base, Vertex j)
{
    if (j >= base.n()) {
        throw Error(ErrorKind::OutOfRange, "attachment vertex out of range");
    }
    RootedGraph g(base.n() + 1, 0);
    for (const auto& [u, v] : base.edges()) {
        g.add_edge(u + 1, v + 1);
    }
    g.add_edge(0, j + 1);
    return g;
}

}  // namespace sniplab
