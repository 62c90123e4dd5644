#pragma once

#include <utility>
#include <vector>

#include "bigint.hpp"
#include "qpoly.hpp"

namespace pbwlab {

/// Collection (I_1,...,I_{n-1}) of subsets of {1..n} with |I_k| = k, each
/// stored sorted ascending. Indexes the torus fixed points of the complete
/// degenerate flag variety; admissible ones index the cells.
struct FlagCollection {
    std::vector<std::vector<int>> subsets;

    friend bool operator==(const FlagCollection&, const FlagCollection&) = default;
};

bool is_admissible(const FlagCollection& collection, int n);

/// Dellac configuration: 2n boxes (column l, row j) in an n x 2n grid, two
/// per column, one per row, within the band l <= j <= n+l. Boxes are kept
/// sorted by (column, row).
struct DellacConfig {
    int n = 0;
    std::vector<std::pair<int, int>> boxes;

    friend bool operator==(const DellacConfig&, const DellacConfig&) = default;
};

bool is_valid_dellac(const DellacConfig& config);

/// Number of box pairs (l1,j1), (l2,j2) with l1 < l2 and j1 > j2; the complex
/// dimension of the attached cell.
int dellac_length(const DellacConfig& config);

/// All collections with I_k contained in I_{k+1} union {k+1}, in
/// lexicographic order of (I_1,...,I_{n-1}).
std::vector<FlagCollection> admissible_flag_collections(int n);

/// All Dellac configurations for parameter n, in lexicographic order of
/// their sorted box lists.
std::vector<DellacConfig> dellac_configs(int n);

/// Normalized median Genocchi number h_n by the closed summation formula
/// over tuples f_1..f_{n-1} >= 0 (f_0 = f_n = 0) of products of binomials.
/// h_0 = 1 by the empty-sum convention.
BigInt genocchi_closed(int n);

/// Gaussian binomial coefficient as a polynomial in q; the zero polynomial
/// outside 0 <= k <= m.
QPolynomial q_binomial(long long m, long long k);

/// h_n(q) from the fermionic sum: each surviving tuple contributes its
/// q-power prefactor times a product of q-binomials.
QPolynomial genocchi_poly_fermionic(int n);

/// h_n(q) as the length generating function over Dellac configurations.
QPolynomial genocchi_poly_dellac(int n);

}  // namespace pbwlab
