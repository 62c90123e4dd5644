#pragma once

#include <vector>

#include "bigint.hpp"

namespace pbwlab::fq {

/// Subspace of F_p^d of dimension e, stored as a reduced-row-echelon basis.
/// The pivot columns identify the subspace uniquely, making enumeration by
/// echelon form duplicate-free.
struct Subspace {
    int ambient = 0;
    std::vector<int> pivots;                 // ascending pivot columns, 0-based
    std::vector<std::vector<int>> rows;      // one basis row per pivot, entries in [0,p)

    int dim() const noexcept { return static_cast<int>(rows.size()); }
};

/// Number of e-dimensional subspaces of F_p^d (Gaussian binomial at q = p).
BigInt subspace_count(int d, int e, long long p);

/// All e-dimensional subspaces of F_p^d, in a fixed deterministic order
/// (by pivot set, then by free entries).
std::vector<Subspace> all_subspaces(int d, int e, long long p);

/// Membership test; reduces the vector against the echelon basis.
bool contains(const Subspace& space, std::vector<int> vec, long long p);

}  // namespace pbwlab::fq
