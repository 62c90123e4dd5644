#include "quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "errors.hpp"
#include "fq.hpp"
#include "lie.hpp"

namespace pbwlab {

QuiverRep::QuiverRep(int n) : n_(n), mult_(root_count(std::max(n, 2)), 0) {
    if (n < 2)
        fail(Errc::invalid_argument, "rank parameter must be at least 2");
}

long long QuiverRep::multiplicity(int i, int j) const {
    return mult_[root_index(n_, {i, j})];
}

QuiverRep& QuiverRep::add_interval(int i, int j, long long count) {
    if (count < 0)
        fail(Errc::invalid_argument, "interval multiplicity must be nonnegative");
    mult_[root_index(n_, {i, j})] += count;
    return *this;
}

std::vector<long long> QuiverRep::dim_vector() const {
    std::vector<long long> dim(static_cast<std::size_t>(n_) - 1, 0);
    std::size_t t = 0;
    for (int i = 1; i <= n_ - 1; ++i)
        for (int j = i; j <= n_ - 1; ++j) {
            for (int v = i; v <= j; ++v)
                dim[static_cast<std::size_t>(v) - 1] += mult_[t];
            ++t;
        }
    return dim;
}

RankTuple::RankTuple(int n, std::vector<long long> values) : n_(n), r_(std::move(values)) {
    if (n < 2)
        fail(Errc::invalid_argument, "rank parameter must be at least 2");
    if (r_.size() != root_count(n))
        fail(Errc::invalid_argument, "rank tuple needs one entry per interval");
    for (long long v : r_)
        if (v < 0)
            fail(Errc::invalid_argument, "ranks must be nonnegative");
}

long long RankTuple::at(int i, int j) const {
    return r_[root_index(n_, {i, j})];
}

QuiverRep special_module(int n, SpecialKind kind) {
    if (n < 2)
        fail(Errc::invalid_argument, "rank parameter must be at least 2");
    QuiverRep rep(n);
    switch (kind) {
    case SpecialKind::M0:
        rep.add_interval(1, n - 1, n);
        break;
    case SpecialKind::M1:
        // A + A*: all projectives plus all injectives.
        for (int k = 1; k <= n - 1; ++k) {
            rep.add_interval(k, n - 1);
            rep.add_interval(1, k);
        }
        break;
    case SpecialKind::M2:
        for (int k = 1; k <= n - 1; ++k)
            rep.add_interval(k, n - 1);
        for (int k = 1; k <= n - 2; ++k)
            rep.add_interval(1, k);
        for (int k = 1; k <= n - 1; ++k)
            rep.add_interval(k, k);
        break;
    }
    return rep;
}

RankTuple rank_tuple(const QuiverRep& rep) {
    const int n = rep.rank_param();
    std::vector<long long> r(root_count(n), 0);
    std::size_t out = 0;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j) {
            long long sum = 0;
            for (int a = 1; a <= i; ++a)
                for (int b = j; b <= n - 1; ++b)
                    sum += rep.multiplicity(a, b);
            r[out++] = sum;
        }
    return RankTuple(n, std::move(r));
}

QuiverRep module_from_rank_tuple(int n, const RankTuple& ranks) {
    if (ranks.rank_param() != n)
        fail(Errc::incompatible, "rank tuple belongs to a different rank parameter");
    auto r = [&](int i, int j) -> long long {
        if (i < 1 || j > n - 1 || i > j)
            return 0;
        return ranks.at(i, j);
    };
    QuiverRep rep(n);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j) {
            const long long m = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1);
            if (m < 0)
                fail(Errc::not_realizable,
                     "rank tuple is not realized by any representation");
            rep.add_interval(i, j, m);
        }
    return rep;
}

long long euler_form(int n, const std::vector<long long>& e, const std::vector<long long>& d) {
    if (n < 2)
        fail(Errc::invalid_argument, "rank parameter must be at least 2");
    if (e.size() != static_cast<std::size_t>(n - 1) || d.size() != e.size())
        fail(Errc::invalid_argument, "dimension vectors need one entry per vertex");
    long long value = 0;
    for (std::size_t v = 0; v < e.size(); ++v)
        value += e[v] * d[v];
    for (std::size_t v = 0; v + 1 < e.size(); ++v)
        value -= e[v] * d[v + 1];
    return value;
}

bool degenerates_to(const QuiverRep& from, const QuiverRep& to) {
    if (from.rank_param() != to.rank_param())
        fail(Errc::incompatible, "representations of different rank parameters");
    if (from.dim_vector() != to.dim_vector())
        fail(Errc::incompatible, "representations of different dimension vectors");
    const RankTuple a = rank_tuple(from);
    const RankTuple b = rank_tuple(to);
    for (std::size_t t = 0; t < a.values().size(); ++t)
        if (a.values()[t] < b.values()[t])
            return false;
    return true;
}

namespace {

constexpr long long kWorkLimit = 10'000'000;

unsigned worker_count(std::size_t jobs) {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0)
        workers = 1;
    if (const char* env = std::getenv("PBWLAB_THREADS")) {
        const long requested = std::strtol(env, nullptr, 10);
        if (requested >= 1)
            workers = std::min<unsigned>(workers, static_cast<unsigned>(requested));
    }
    return static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(jobs, 1)));
}

// Basis at each vertex: copies of the surviving intervals in lexicographic
// (interval, copy) order. The arrow v -> v+1 is a partial permutation on
// these bases; target_of[a] is the image position or -1.
struct ArrowTable {
    std::vector<std::vector<int>> target_of;  // one table per arrow
};

ArrowTable build_arrows(const QuiverRep& rep) {
    const int n = rep.rank_param();
    const int vertices = n - 1;
    // offset of each interval's block in the basis of a given vertex
    auto offsets_at = [&](int v) {
        std::vector<long long> offsets(root_count(n), -1);
        long long at = 0;
        std::size_t t = 0;
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i; j <= n - 1; ++j, ++t)
                if (i <= v && v <= j) {
                    offsets[t] = at;
                    at += rep.multiplicities()[t];
                }
        return offsets;
    };

    ArrowTable table;
    for (int v = 1; v <= vertices - 1; ++v) {
        const auto src = offsets_at(v);
        const auto dst = offsets_at(v + 1);
        std::vector<int> map;
        std::size_t t = 0;
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i; j <= n - 1; ++j, ++t) {
                if (!(i <= v && v <= j))
                    continue;
                const long long copies = rep.multiplicities()[t];
                for (long long c = 0; c < copies; ++c)
                    map.push_back(j >= v + 1 ? static_cast<int>(dst[t] + c) : -1);
            }
        table.target_of.push_back(std::move(map));
    }
    return table;
}

bool maps_into(const fq::Subspace& source, const fq::Subspace& target,
               const std::vector<int>& target_of, std::size_t image_dim, long long p) {
    for (const auto& row : source.rows) {
        std::vector<int> image(image_dim, 0);
        for (std::size_t a = 0; a < row.size(); ++a)
            if (row[a] != 0 && target_of[a] >= 0)
                image[static_cast<std::size_t>(target_of[a])] = row[a];
        if (!fq::contains(target, std::move(image), p))
            return false;
    }
    return true;
}

}  // namespace

BigInt count_subreps_fq(const QuiverRep& rep, const std::vector<long long>& e, long long p) {
    if (p != 2 && p != 3 && p != 5 && p != 7)
        fail(Errc::invalid_field, "field size must be a prime among 2, 3, 5, 7");
    const int n = rep.rank_param();
    const std::size_t vertices = static_cast<std::size_t>(n) - 1;
    if (e.size() != vertices)
        fail(Errc::invalid_argument, "subrepresentation dimension vector has wrong length");
    for (long long ev : e)
        if (ev < 0)
            fail(Errc::invalid_argument, "subrepresentation dimensions must be nonnegative");

    const auto d = rep.dim_vector();
    for (std::size_t v = 0; v < vertices; ++v)
        if (e[v] > d[v])
            return 0;  // empty Grassmannian at some vertex
    BigInt work = 1;
    for (std::size_t v = 0; v < vertices; ++v) {
        if (d[v] > 64)
            fail(Errc::resource_limit, "ambient dimension too large for exhaustive counting");
        work *= fq::subspace_count(static_cast<int>(d[v]), static_cast<int>(e[v]), p);
    }
    if (work > kWorkLimit)
        fail(Errc::resource_limit, "subspace tuple count exceeds the work limit");

    std::vector<std::vector<fq::Subspace>> spaces(vertices);
    for (std::size_t v = 0; v < vertices; ++v)
        spaces[v] = fq::all_subspaces(static_cast<int>(d[v]), static_cast<int>(e[v]), p);

    const ArrowTable arrows = build_arrows(rep);

    auto count_tail = [&](auto&& self, std::size_t v, const fq::Subspace& chosen) -> long long {
        if (v == vertices)
            return 1;
        long long total = 0;
        for (const auto& cand : spaces[v])
            if (maps_into(chosen, cand, arrows.target_of[v - 1],
                          static_cast<std::size_t>(d[v]), p))
                total += self(self, v + 1, cand);
        return total;
    };

    const std::size_t outer = spaces[0].size();
    const unsigned workers = worker_count(outer);
    std::vector<long long> partial(workers, 0);
    auto run_chunk = [&](unsigned w) {
        long long local = 0;
        for (std::size_t first = w; first < outer; first += workers)
            local += count_tail(count_tail, 1, spaces[0][first]);
        partial[w] = local;
    };
    if (workers <= 1) {
        run_chunk(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(run_chunk, w);
        for (auto& t : pool)
            t.join();
    }

    BigInt total = 0;
    for (long long part : partial)
        total += part;
    return total;
}

}  // namespace pbwlab
