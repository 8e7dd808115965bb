#pragma once

// Integer tables of the six T3-family witness matrices. Both the graph
// families (as off-diagonal supports) and the matrix constructions read them
// from here. Vertices are 0-based: the cut-vertices of T1, T2, T3 are 6, 7, 8.

#include <array>
#include <cstddef>
#include <span>

namespace sniplab::detail {

inline constexpr std::array<int, 16> a0_entries = {
    1, 1, 1, 1,
    1, 1, 1, 1,
    1, 1, 1, 1,
    1, 1, 1, 1,
};

inline constexpr std::array<int, 25> a1_entries = {
    0, 0, 1, 1, 1,
    0, 0, 1, 1, 1,
    1, 1, 0, 0, 0,
    1, 1, 0, 0, 0,
    1, 1, 0, 0, 0,
};

inline constexpr std::array<int, 36> b0_entries = {
    2, 1, 1, 0, 1, 1,
    1, 1, 1, 0, 0, 0,
    1, 1, 2, 1, 1, 0,
    0, 0, 1, 1, 1, 0,
    1, 0, 1, 1, 2, 1,
    1, 0, 0, 0, 1, 1,
};

inline constexpr std::array<int, 49> b1_entries = {
    1, 0, 0, 0, 1, 1, 1,
    0, 0, 0, 0, 0, 0, 1,
    0, 0, 1, 1, 1, 0, 1,
    0, 0, 1, 1, 1, 0, 0,
    1, 0, 1, 1, 2, 1, 0,
    1, 0, 0, 0, 1, 1, 0,
    1, 1, 1, 0, 0, 0, 0,
};

inline constexpr std::array<int, 64> b2_entries = {
    1, 0, 0, 0, 1, 1, 1, 0,
    0, 0, 0, 0, 0, 0, 1, 0,
    0, 0, 0, 0, 0, 0, 1, 1,
    0, 0, 0, 0, 0, 0, 0, 1,
    1, 0, 0, 0, 1, 1, 0, 1,
    1, 0, 0, 0, 1, 1, 0, 0,
    1, 1, 1, 0, 0, 0, 0, 0,
    0, 0, 1, 1, 1, 0, 0, 0,
};

inline constexpr std::array<int, 81> b3_entries = {
    0, 0, 0, 0, 0, 0, 1, 0, 1,
    0, 0, 0, 0, 0, 0, 1, 0, 0,
    0, 0, 0, 0, 0, 0, 1, 1, 0,
    0, 0, 0, 0, 0, 0, 0, 1, 0,
    0, 0, 0, 0, 0, 0, 0, 1, 1,
    0, 0, 0, 0, 0, 0, 0, 0, 1,
    1, 1, 1, 0, 0, 0, 0, 0, 0,
    0, 0, 1, 1, 1, 0, 0, 0, 0,
    1, 0, 0, 0, 1, 1, 0, 0, 0,
};

struct IntTable {
    std::size_t n;
    std::span<const int> entries;
};

// Index order: A0, A1, B0, B1, B2, B3.
inline IntTable witness_table(std::size_t index)
{
    switch (index) {
    case 0: return {4, a0_entries};
    case 1: return {5, a1_entries};
    case 2: return {6, b0_entries};
    case 3: return {7, b1_entries};
    case 4: return {8, b2_entries};
    default: return {9, b3_entries};
    }
}

}  // namespace sniplab::detail
