#include "lie.hpp"

#include <numeric>

#include "errors.hpp"

namespace pbwlab {

DominantWeight::DominantWeight(int n, std::vector<std::int64_t> m) : n_(n), m_(std::move(m)) {
    if (n < 2)
        fail(Errc::invalid_argument, "rank parameter must be at least 2");
    if (m_.size() != static_cast<std::size_t>(n - 1))
        fail(Errc::invalid_argument, "weight needs exactly n-1 coefficients");
    for (std::int64_t c : m_)
        if (c < 0)
            fail(Errc::invalid_argument, "weight coefficients must be nonnegative");
}

std::int64_t DominantWeight::total() const noexcept {
    return std::accumulate(m_.begin(), m_.end(), std::int64_t{0});
}

DominantWeight DominantWeight::operator+(const DominantWeight& rhs) const {
    if (n_ != rhs.n_)
        fail(Errc::incompatible, "cannot add weights of different rank");
    std::vector<std::int64_t> sum(m_.size());
    for (std::size_t k = 0; k < m_.size(); ++k)
        sum[k] = m_[k] + rhs.m_[k];
    return DominantWeight(n_, std::move(sum));
}

int YoungShape::box_count() const noexcept {
    return std::accumulate(column_lengths.begin(), column_lengths.end(), 0);
}

std::vector<PositiveRoot> positive_roots(int n) {
    if (n < 2)
        fail(Errc::invalid_argument, "rank parameter must be at least 2");
    std::vector<PositiveRoot> roots;
    roots.reserve(root_count(n));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j)
            roots.push_back({i, j});
    return roots;
}

std::size_t root_index(int n, PositiveRoot r) {
    if (r.i < 1 || r.i > r.j || r.j > n - 1)
        fail(Errc::invalid_argument, "root indices out of range");
    // Roots with first index < i come in full runs of n-i, n-i+1, ... entries.
    std::size_t before = 0;
    for (int a = 1; a < r.i; ++a)
        before += static_cast<std::size_t>(n - a);
    return before + static_cast<std::size_t>(r.j - r.i);
}

BigInt weyl_dim(const DominantWeight& lambda) {
    const auto& m = lambda.coeffs();
    const int n = lambda.rank();
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 1; i <= n - 1; ++i) {
        std::int64_t run = 0;
        for (int j = i; j <= n - 1; ++j) {
            run += m[static_cast<std::size_t>(j) - 1];
            num *= run + (j - i + 1);
            den *= j - i + 1;
        }
    }
    return num / den;
}

YoungShape shape_of(const DominantWeight& lambda) {
    const auto& m = lambda.coeffs();
    const int n = lambda.rank();
    // Partition parts are the suffix sums of the weight coefficients.
    std::vector<std::int64_t> parts(static_cast<std::size_t>(n - 1));
    std::int64_t suffix = 0;
    for (int i = n - 1; i >= 1; --i) {
        suffix += m[static_cast<std::size_t>(i) - 1];
        parts[static_cast<std::size_t>(i) - 1] = suffix;
    }
    YoungShape shape;
    const std::int64_t width = parts.empty() ? 0 : parts.front();
    for (std::int64_t j = 1; j <= width; ++j) {
        int len = 0;
        for (std::int64_t p : parts)
            if (p >= j)
                ++len;
        shape.column_lengths.push_back(len);
    }
    return shape;
}

}  // namespace pbwlab
