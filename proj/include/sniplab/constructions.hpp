#pragma once

// Explicit witness matrices and the constructive steps that move a matrix
// around the nullity-pair staircase.

#include <string>
#include <utility>
#include <vector>

#include "sniplab/ratmat.hpp"
#include "sniplab/rgraph.hpp"
#include "sniplab/snipcore.hpp"

namespace sniplab {

enum class WitnessMatrix { A0, A1, B0, B1, B2, B3 };

std::string to_string(WitnessMatrix id);
const std::vector<WitnessMatrix>& all_witness_matrices();

/// The witness matrix and its support graph (root 0). B-matrix cut-vertices
/// are 6, 7, 8.
std::pair<RootedGraph, Matrix> paper_matrix(WitnessMatrix id);

struct StarBlock {
    Vertex center;
    std::vector<Vertex> leaves;
};

/// Sum of all-ones blocks on each clique and adjacency matrices of each star,
/// padded to n x n.
Matrix star_clique_sum(const std::vector<std::vector<Vertex>>& cliques,
                       const std::vector<StarBlock>& stars, std::size_t n);

enum class StepKind { SW, West, South };

std::string to_string(StepKind kind);

struct PerturbStep {
    StepKind kind = StepKind::SW;
    Rational parameter;  // diagonal position j for SW, epsilon otherwise
    Matrix matrix;
    NullityPair pair;
    bool strict_pattern = false;  // relative to the input matrix's support
    bool closed_pattern = false;
};

/// (k+1, l+1) -> (k, l) by adding E_jj where j is the first nonzero
/// coordinate of a kernel vector that vanishes at i.
PerturbStep sw_step(const Matrix& a, std::size_t i);

/// (k+1, k+1) -> (k, k+1) by adding eps * v to the border, v in ker(A(i)).
PerturbStep west_step(const Matrix& a, std::size_t i, const Rational& eps = 1);

inline constexpr int south_max_halvings = 60;

/// (k, k+1) -> (k, k) by replacing A(i) with A(i) + eps b b^T, trying
/// eps = 1, 1/2, 1/4, ... until the pair drops.
PerturbStep south_step(const Matrix& a, std::size_t i);

/// [[a, k e_j^T], [k e_j, B]]: a new index 0 attached to j (shifted to j+1).
Matrix append_leaf_matrix(const Matrix& b, std::size_t j, const Rational& a, const Rational& k);

/// The graph matching append_leaf_matrix: new vertex 0 adjacent to j+1,
/// rooted at 0.
RootedGraph append_leaf_graph(const RootedGraph& base, Vertex j);

}  // namespace sniplab
