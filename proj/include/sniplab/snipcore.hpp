#pragma once

// Pattern membership, nullity pairs, the Strong Arnold Property and the
// i-strong nullity interlacing property (i-SNIP).
//
// SAP and i-SNIP are both statements of the form "the only symmetric X with
// A o X = I o X = O and (some rows of AX) = O is X = O". Off the diagonal, X
// may only be nonzero on non-edges of the graph, so each such statement is a
// rank test on a constraint matrix whose columns are the non-edges and whose
// rows are the constrained entries of AX.

#include <compare>
#include <string>
#include <string_view>

#include "sniplab/ratmat.hpp"
#include "sniplab/rgraph.hpp"

namespace sniplab {

/// (null(A), null(A(i))). The two values never differ by more than one.
struct NullityPair {
    std::size_t k = 0;
    std::size_t l = 0;

    friend auto operator<=>(const NullityPair&, const NullityPair&) = default;
};

std::string to_string(const NullityPair& p);

enum class IndexType { Upper, Neutral, Downer };

std::string_view to_string(IndexType t);
IndexType index_type_of(const NullityPair& p);

/// Strict mode: off-diagonal nonzero exactly on edges. Closed mode: zero on
/// non-edges only.
bool in_pattern(const Matrix& a, const RootedGraph& g, bool closed);

/// Off-diagonal support of a symmetric matrix, rooted at `root`.
RootedGraph support_graph(const Matrix& a, Vertex root = 0);

NullityPair nullity_pair(const Matrix& a, std::size_t i);
IndexType index_type(const Matrix& a, std::size_t i);

/// The unique t for which i is a downer index of A + t E_ii, computed as
/// x^T C x - a_ii with C = A(i) and C x equal to the border of column i.
Rational neutral_shift(const Matrix& a, std::size_t i);

bool has_sap(const Matrix& a, const RootedGraph& g);
bool has_isnip_direct(const Matrix& a, const RootedGraph& g, std::size_t i);
/// Decides i-SNIP through SAP of A, A + tE_ii or A(i) depending on the index type.
bool has_isnip_cases(const Matrix& a, const RootedGraph& g, std::size_t i);

/// Whether the vertex and edge ingredients built from the rows of the basis
/// N span all symmetric m x m matrices.
bool gives_full_recipe(const Matrix& basis, const RootedGraph& g);
/// Full-recipe test on the right kernel of A(i,:].
bool has_isnip_recipe(const Matrix& a, const RootedGraph& g, std::size_t i);
bool has_sap_recipe(const Matrix& a, const RootedGraph& g);

struct SnipCertificate {
    RootedGraph graph;
    Matrix matrix;
    NullityPair pair;
    IndexType index_type = IndexType::Neutral;
    bool snip_direct = false;
    bool snip_cases = false;
    bool snip_recipe = false;

    bool verdicts_agree() const { return snip_direct == snip_cases && snip_cases == snip_recipe; }
    bool snip() const { return snip_direct; }
};

/// Evaluates all three characterizations at the graph's root.
SnipCertificate certify(const Matrix& a, const RootedGraph& g);

/// A + t E_ii.
Matrix add_to_diagonal(const Matrix& a, std::size_t i, const Rational& t);

}  // namespace sniplab
