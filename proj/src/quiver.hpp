#pragma once

#include <vector>

#include "bigint.hpp"

namespace pbwlab {

/// Representation of the equioriented type-A quiver with n-1 vertices
/// (arrows v -> v+1), given as a multiset of interval indecomposables
/// U_{i,j}, 1 <= i <= j <= n-1. Multiplicities are stored in lexicographic
/// interval order; the dimension vector is always derived from them.
class QuiverRep {
public:
    explicit QuiverRep(int n);

    int rank_param() const noexcept { return n_; }
    int vertex_count() const noexcept { return n_ - 1; }

    long long multiplicity(int i, int j) const;
    QuiverRep& add_interval(int i, int j, long long count = 1);

    const std::vector<long long>& multiplicities() const noexcept { return mult_; }
    std::vector<long long> dim_vector() const;

    friend bool operator==(const QuiverRep&, const QuiverRep&) = default;

private:
    int n_;
    std::vector<long long> mult_;
};

/// Ranks r_{i,j} of the composed arrow maps from vertex i to vertex j,
/// in lexicographic (i,j) order; r_{i,i} is the dimension at vertex i.
class RankTuple {
public:
    RankTuple(int n, std::vector<long long> values);

    int rank_param() const noexcept { return n_; }
    long long at(int i, int j) const;
    const std::vector<long long>& values() const noexcept { return r_; }

    friend bool operator==(const RankTuple&, const RankTuple&) = default;

private:
    int n_;
    std::vector<long long> r_;
};

enum class SpecialKind { M0, M1, M2 };

/// The three distinguished representations with dimension vector (n,...,n):
/// M0 = n copies of the full interval (the classical flag variety case),
/// M1 = path algebra plus its dual (the PBW degenerate case),
/// M2 = the deeper degeneration with all simples as summands.
QuiverRep special_module(int n, SpecialKind kind);

/// r_{i,j} = number of summand intervals covering [i, j].
RankTuple rank_tuple(const QuiverRep& rep);

/// Inverse of rank_tuple by inclusion-exclusion; fails with not-realizable
/// if some multiplicity would be negative.
QuiverRep module_from_rank_tuple(int n, const RankTuple& ranks);

/// Euler form of the equioriented type-A quiver on n-1 vertices.
long long euler_form(int n, const std::vector<long long>& e, const std::vector<long long>& d);

/// Orbit-closure (degeneration) order via pointwise rank dominance; both
/// representations must share the dimension vector.
bool degenerates_to(const QuiverRep& from, const QuiverRep& to);

/// Exact number of subrepresentations of the given dimension vector over
/// F_p, by exhaustive row-echelon enumeration of subspace tuples. The
/// product of per-vertex Grassmannian sizes is capped at 10^7; larger
/// instances fail with resource-limit. Supported fields: p in {2,3,5,7}.
BigInt count_subreps_fq(const QuiverRep& rep, const std::vector<long long>& e, long long p);

}  // namespace pbwlab
