#pragma once

#include <vector>

#include "lie.hpp"

namespace pbwlab {

/// Filling of a Young diagram with numbers from {1..n}, stored column-major:
/// columns[j-1][i-1] is the entry in row i of column j.
struct PBWTableau {
    int n = 0;
    YoungShape shape;
    std::vector<std::vector<int>> columns;

    int entry(int row, int col) const {
        return columns[static_cast<std::size_t>(col) - 1][static_cast<std::size_t>(row) - 1];
    }

    friend bool operator==(const PBWTableau&, const PBWTableau&) = default;
};

/// The three defining conditions of a PBW semistandard tableau:
///  (1) an entry not exceeding its column length equals its row index,
///  (2) within a column, entries differing from their row index strictly
///      exceed every entry below them,
///  (3) each entry of column j is weakly dominated by some entry of column
///      j-1 lying in the same row or lower.
/// Entries outside {1..n} raise an invalid-entry error.
bool is_pbw_semistandard(const PBWTableau& tableau);

/// All PBW semistandard tableaux of shape shape_of(lambda), in lexicographic
/// order of their column-major entry sequences. The zero weight yields the
/// single empty tableau.
std::vector<PBWTableau> enumerate_pbw_tableaux(const DominantWeight& lambda);

}  // namespace pbwlab
