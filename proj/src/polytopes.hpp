#pragma once

#include <cstdint>
#include <vector>

#include "lie.hpp"

namespace pbwlab {

/// Dyck path in the root-system sense: a sequence of positive roots starting
/// and ending at simple roots, each step raising the right index or the left
/// index by one (alpha_{p,q} -> alpha_{p,q+1} or alpha_{p+1,q}).
struct DyckPath {
    std::vector<PositiveRoot> steps;

    PositiveRoot first() const { return steps.front(); }
    PositiveRoot last() const { return steps.back(); }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

/// Lattice point of the FFLV polytope: one nonnegative exponent per positive
/// root of sl_n, stored in lexicographic root order.
class MultiExponent {
public:
    explicit MultiExponent(int n);  // the origin
    MultiExponent(int n, std::vector<std::int64_t> s);

    int rank() const noexcept { return n_; }
    const std::vector<std::int64_t>& values() const noexcept { return s_; }
    std::int64_t at(PositiveRoot r) const { return s_[root_index(n_, r)]; }

    MultiExponent operator+(const MultiExponent& rhs) const;

    friend bool operator==(const MultiExponent&, const MultiExponent&) = default;
    friend auto operator<=>(const MultiExponent& a, const MultiExponent& b) {
        return a.s_ <=> b.s_;
    }

private:
    int n_;
    std::vector<std::int64_t> s_;
};

/// Gelfand-Tsetlin pattern: triangular array whose row a (1-based, counted
/// from the single-entry bottom row) is rows[a-1] with a entries.
struct GTPattern {
    std::vector<std::vector<std::int64_t>> rows;
};

/// Interlacing check: each row weakly dominates the next shorter one,
/// g_{a+1,b} >= g_{a,b} >= g_{a+1,b+1}.
bool is_valid_gt_pattern(const GTPattern& pattern);

/// All Dyck paths for sl_n, in lexicographic order of their step sequences.
std::vector<DyckPath> dyck_paths(int n);

bool is_valid_dyck_path(int n, const DyckPath& path);

/// The set S(lambda): all multiexponents s with, for every Dyck path from
/// alpha_i to alpha_j, sum of s over the path's roots <= m_i + ... + m_j.
/// Returned in increasing lexicographic order of the exponent vectors.
std::vector<MultiExponent> fflv_lattice_points(const DominantWeight& lambda);

/// {s + t : s in a, t in b}, deduplicated, in lexicographic order.
std::vector<MultiExponent> minkowski_sum(const std::vector<MultiExponent>& a,
                                         const std::vector<MultiExponent>& b);

/// Total degree of s under the weight system a_{i,j} = (j-i+1)(n-j).
std::int64_t pbw_weight(const MultiExponent& s);

/// Number of integral Gelfand-Tsetlin patterns whose top row is the partition
/// of lambda padded with a trailing zero.
BigInt gt_pattern_count(const DominantWeight& lambda);

}  // namespace pbwlab
