#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "bigint.hpp"

namespace pbwlab {

/// Positive root alpha_{i,j} = alpha_i + ... + alpha_j of sl_n, 1 <= i <= j <= n-1.
struct PositiveRoot {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const PositiveRoot&, const PositiveRoot&) = default;
};

/// Dominant integral weight m_1*w_1 + ... + m_{n-1}*w_{n-1} of sl_n,
/// with nonnegative coefficients on the fundamental weights.
class DominantWeight {
public:
    DominantWeight(int n, std::vector<std::int64_t> m);

    int rank() const noexcept { return n_; }
    const std::vector<std::int64_t>& coeffs() const noexcept { return m_; }
    std::int64_t coeff(int i) const { return m_[static_cast<std::size_t>(i) - 1]; }  // 1-based
    std::int64_t total() const noexcept;
    bool is_zero() const noexcept { return total() == 0; }

    DominantWeight operator+(const DominantWeight& rhs) const;
    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;

private:
    int n_;
    std::vector<std::int64_t> m_;
};

/// Young diagram of a dominant weight, recorded by its weakly decreasing
/// column lengths (each between 1 and n-1). The zero weight has no columns.
struct YoungShape {
    std::vector<int> column_lengths;

    int columns() const noexcept { return static_cast<int>(column_lengths.size()); }
    int box_count() const noexcept;

    friend bool operator==(const YoungShape&, const YoungShape&) = default;
};

inline std::size_t root_count(int n) noexcept {
    return static_cast<std::size_t>(n) * (n - 1) / 2;
}

/// All positive roots of sl_n in lexicographic (i,j) order.
std::vector<PositiveRoot> positive_roots(int n);

/// Position of alpha_{i,j} in the lexicographic root list.
std::size_t root_index(int n, PositiveRoot r);

/// Dimension of the irreducible highest weight module V_lambda of sl_n,
/// by the Weyl product formula over positive roots. Exact.
BigInt weyl_dim(const DominantWeight& lambda);

/// Column lengths of the Young diagram attached to lambda: the partition has
/// parts lambda_i = m_i + ... + m_{n-1}, and column j has length #{i : lambda_i >= j}.
YoungShape shape_of(const DominantWeight& lambda);

}  // namespace pbwlab
