#include "sniplab/snipcore.hpp"

#include "sniplab/error.hpp"

namespace sniplab {

namespace {

void require_square_for(const Matrix& a, const RootedGraph& g)
{
    if (!a.is_square() || a.rows() != g.n()) {
        throw Error(ErrorKind::ShapeMismatch, "matrix is " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " but graph has " +
                                                  std::to_string(g.n()) + " vertices");
    }
    if (!a.is_symmetric()) {
        throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric");
    }
}

void require_index(const Matrix& a, std::size_t i)
{
    if (!a.is_square()) {
        throw Error(ErrorKind::ShapeMismatch, "matrix is not square");
    }
    if (i >= a.rows()) {
        throw Error(ErrorKind::OutOfRange, "index " + std::to_string(i) + " out of range");
    }
}

// Rank test "X = O is forced". `skip_row` removes one row of AX from the
// constraints (n means none).
bool only_zero_solution(const Matrix& a, const RootedGraph& g, std::size_t skip_row)
{
    const std::size_t n = g.n();
    std::vector<Edge> free_entries;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) {
                free_entries.emplace_back(u, v);
            }
        }
    }
    if (free_entries.empty()) {
        return true;
    }
    const std::size_t constrained_rows = skip_row < n ? n - 1 : n;
    if (constrained_rows * n < free_entries.size()) {
        return false;
    }
    Matrix system(constrained_rows * n, free_entries.size());
    std::size_t out_row = 0;
    for (std::size_t r = 0; r < n; ++r) {
        if (r == skip_row) {
            continue;
        }
        for (std::size_t col = 0; col < free_entries.size(); ++col) {
            const auto [j, k] = free_entries[col];
            // X_jk = X_kj = x contributes A_rj to (AX)_rk and A_rk to (AX)_rj.
            system(out_row * n + k, col) += a(r, j);
            system(out_row * n + j, col) += a(r, k);
        }
        ++out_row;
    }
    return rank(system) == free_entries.size();
}

}  // namespace

std::string to_string(const NullityPair& p)
{
    return "(" + std::to_string(p.k) + "," + std::to_string(p.l) + ")";
}

std::string_view to_string(IndexType t)
{
    switch (t) {
    case IndexType::Upper: return "upper";
    case IndexType::Neutral: return "neutral";
    case IndexType::Downer: return "downer";
    }
    return "?";
}

IndexType index_type_of(const NullityPair& p)
{
    if (p.l == p.k + 1) {
        return IndexType::Upper;
    }
    if (p.l == p.k) {
        return IndexType::Neutral;
    }
    if (p.l + 1 == p.k) {
        return IndexType::Downer;
    }
    throw Error(ErrorKind::InvalidArgument, "nullity pair " + to_string(p) + " violates interlacing");
}

bool in_pattern(const Matrix& a, const RootedGraph& g, bool closed)
{
    require_square_for(a, g);
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v = u + 1; v < g.n(); ++v) {
            const bool nonzero = a(u, v) != 0;
            if (g.has_edge(u, v)) {
                if (!closed && !nonzero) {
                    return false;
                }
            } else if (nonzero) {
                return false;
            }
        }
    }
    return true;
}

RootedGraph support_graph(const Matrix& a, Vertex root)
{
    if (!a.is_square()) {
        throw Error(ErrorKind::ShapeMismatch, "support of a non-square matrix");
    }
    RootedGraph g(a.rows(), root);
    for (Vertex u = 0; u < a.rows(); ++u) {
        for (Vertex v = u + 1; v < a.rows(); ++v) {
            if (a(u, v) != 0 || a(v, u) != 0) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

NullityPair nullity_pair(const Matrix& a, std::size_t i)
{
    require_index(a, i);
    return {nullity(a), nullity(a.remove_index(i))};
}

IndexType index_type(const Matrix& a, std::size_t i)
{
    return index_type_of(nullity_pair(a, i));
}

Matrix add_to_diagonal(const Matrix& a, std::size_t i, const Rational& t)
{
    require_index(a, i);
    Matrix b = a;
    b(i, i) += t;
    return b;
}

Rational neutral_shift(const Matrix& a, std::size_t i)
{
    const NullityPair p = nullity_pair(a, i);
    if (index_type_of(p) != IndexType::Neutral) {
        throw Error(ErrorKind::NotNeutral, "index " + std::to_string(i) + " has pair " +
                                               to_string(p) + ", not neutral");
    }
    const Matrix c = a.remove_index(i);
    Vector border = a.column(i);
    border.erase(border.begin() + static_cast<long>(i));
    const auto x = in_column_space(c, border);
    if (!x) {
        throw Error(ErrorKind::NotNeutral, "border column is not in Col(A(i))");
    }
    // x^T C x = x^T b since C x = b.
    const Rational t = dot(*x, border) - a(i, i);
    if (index_type(add_to_diagonal(a, i, t), i) != IndexType::Downer) {
        throw Error(ErrorKind::NotNeutral, "shifted matrix is not downer at the index");
    }
    return t;
}

bool has_sap(const Matrix& a, const RootedGraph& g)
{
    require_square_for(a, g);
    return only_zero_solution(a, g, g.n());
}

bool has_isnip_direct(const Matrix& a, const RootedGraph& g, std::size_t i)
{
    require_square_for(a, g);
    require_index(a, i);
    return only_zero_solution(a, g, i);
}

bool has_isnip_cases(const Matrix& a, const RootedGraph& g, std::size_t i)
{
    require_square_for(a, g);
    switch (index_type(a, i)) {
    case IndexType::Downer:
        return has_sap(a, g);
    case IndexType::Neutral:
        return has_sap(add_to_diagonal(a, i, neutral_shift(a, i)), g);
    case IndexType::Upper:
        if (g.n() == 1) {
            return true;
        }
        return has_sap(a.remove_index(i), g.remove_vertex_unchecked(i));
    }
    return false;
}

bool gives_full_recipe(const Matrix& basis, const RootedGraph& g)
{
    if (basis.rows() != g.n()) {
        throw Error(ErrorKind::ShapeMismatch, "basis has " + std::to_string(basis.rows()) +
                                                  " rows but graph has " +
                                                  std::to_string(g.n()) + " vertices");
    }
    const std::size_t m = basis.cols();
    if (rank(basis) != m) {
        throw Error(ErrorKind::NotABasis, "basis columns are linearly dependent");
    }
    if (m == 0) {
        return true;
    }
    const std::size_t dim = m * (m + 1) / 2;
    const auto edges = g.edges();
    if (g.n() + edges.size() < dim) {
        return false;
    }
    // Coordinates of a symmetric m x m matrix: (a, b) with a <= b.
    Matrix ingredients(g.n() + edges.size(), dim);
    auto fill = [&](std::size_t row, Vertex j, Vertex k) {
        std::size_t col = 0;
        for (std::size_t x = 0; x < m; ++x) {
            for (std::size_t y = x; y < m; ++y, ++col) {
                if (j == k) {
                    ingredients(row, col) = basis(j, x) * basis(j, y);
                } else {
                    ingredients(row, col) = basis(j, x) * basis(k, y) + basis(k, x) * basis(j, y);
                }
            }
        }
    };
    for (Vertex j = 0; j < g.n(); ++j) {
        fill(j, j, j);
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        fill(g.n() + e, edges[e].first, edges[e].second);
    }
    return rank(ingredients) == dim;
}

bool has_isnip_recipe(const Matrix& a, const RootedGraph& g, std::size_t i)
{
    require_square_for(a, g);
    require_index(a, i);
    return gives_full_recipe(kernel_basis(a.remove_row(i)), g);
}

bool has_sap_recipe(const Matrix& a, const RootedGraph& g)
{
    require_square_for(a, g);
    return gives_full_recipe(kernel_basis(a), g);
}

SnipCertificate certify(const Matrix& a, const RootedGraph& g)
{
    require_square_for(a, g);
    const std::size_t i = g.root();
    SnipCertificate cert{g, a, nullity_pair(a, i)};
    cert.index_type = index_type_of(cert.pair);
    cert.snip_direct = has_isnip_direct(a, g, i);
    cert.snip_cases = has_isnip_cases(a, g, i);
    cert.snip_recipe = has_isnip_recipe(a, g, i);
    return cert;
}

}  // namespace sniplab
