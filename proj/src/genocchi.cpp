#include "genocchi.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace pbwlab {

namespace {

void require_rank(int n, int least) {
    if (n < least)
        fail(Errc::invalid_argument, "rank parameter out of range");
}

// All k-subsets of the sorted universe, ascending lexicographic.
void combinations(const std::vector<int>& universe, int k,
                  std::vector<std::vector<int>>& out) {
    std::vector<int> pick;
    auto step = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            out.push_back(pick);
            return;
        }
        for (std::size_t a = from; a + static_cast<std::size_t>(left) <= universe.size(); ++a) {
            pick.push_back(universe[a]);
            self(self, a + 1, left - 1);
            pick.pop_back();
        }
    };
    step(step, 0, k);
}

}  // namespace

bool is_admissible(const FlagCollection& collection, int n) {
    const auto& sets = collection.subsets;
    if (sets.size() != static_cast<std::size_t>(n - 1))
        return false;
    for (std::size_t k = 0; k < sets.size(); ++k) {
        if (sets[k].size() != k + 1)
            return false;
        if (!std::is_sorted(sets[k].begin(), sets[k].end()))
            return false;
        for (int v : sets[k])
            if (v < 1 || v > n)
                return false;
    }
    for (std::size_t k = 0; k + 1 < sets.size(); ++k) {
        for (int v : sets[k]) {
            const bool in_next = std::binary_search(sets[k + 1].begin(), sets[k + 1].end(), v);
            if (!in_next && v != static_cast<int>(k) + 2)
                return false;
        }
    }
    return true;
}

std::vector<FlagCollection> admissible_flag_collections(int n) {
    require_rank(n, 1);
    std::vector<FlagCollection> result;
    if (n == 1) {
        result.push_back({});
        return result;
    }

    std::vector<int> everything(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        everything[static_cast<std::size_t>(v) - 1] = v;

    // Build downward from I_{n-1}: each I_k is a k-subset of I_{k+1} + {k+1}.
    std::vector<std::vector<int>> sets(static_cast<std::size_t>(n - 1));
    auto choose = [&](auto&& self, int k) -> void {
        if (k == 0) {
            FlagCollection c{sets};
            result.push_back(std::move(c));
            return;
        }
        std::vector<int> universe;
        if (k == n - 1) {
            universe = everything;
        } else {
            universe = sets[static_cast<std::size_t>(k)];
            const int extra = k + 1;
            auto pos = std::lower_bound(universe.begin(), universe.end(), extra);
            if (pos == universe.end() || *pos != extra)
                universe.insert(pos, extra);
        }
        std::vector<std::vector<int>> options;
        combinations(universe, k, options);
        for (auto& opt : options) {
            sets[static_cast<std::size_t>(k) - 1] = std::move(opt);
            self(self, k - 1);
        }
    };
    choose(choose, n - 1);

    std::sort(result.begin(), result.end(),
              [](const FlagCollection& a, const FlagCollection& b) { return a.subsets < b.subsets; });
    return result;
}

bool is_valid_dellac(const DellacConfig& config) {
    const int n = config.n;
    if (n < 1 || config.boxes.size() != static_cast<std::size_t>(2 * n))
        return false;
    std::vector<int> per_column(static_cast<std::size_t>(n), 0);
    std::vector<int> per_row(static_cast<std::size_t>(2 * n), 0);
    for (auto [l, j] : config.boxes) {
        if (l < 1 || l > n || j < 1 || j > 2 * n)
            return false;
        if (!(l <= j && j <= n + l))
            return false;
        ++per_column[static_cast<std::size_t>(l) - 1];
        ++per_row[static_cast<std::size_t>(j) - 1];
    }
    return std::all_of(per_column.begin(), per_column.end(), [](int c) { return c == 2; }) &&
           std::all_of(per_row.begin(), per_row.end(), [](int c) { return c == 1; });
}

std::vector<DellacConfig> dellac_configs(int n) {
    require_rank(n, 1);
    std::vector<DellacConfig> result;
    std::vector<bool> row_used(static_cast<std::size_t>(2 * n), false);
    std::vector<std::pair<int, int>> boxes;
    auto place = [&](auto&& self, int l) -> void {
        if (l > n) {
            result.push_back({n, boxes});
            return;
        }
        // Rows below the current column's band can never be covered later.
        for (int j = 1; j < l; ++j)
            if (!row_used[static_cast<std::size_t>(j) - 1])
                return;
        const int hi = n + l;
        for (int j1 = l; j1 <= hi; ++j1) {
            if (row_used[static_cast<std::size_t>(j1) - 1])
                continue;
            row_used[static_cast<std::size_t>(j1) - 1] = true;
            for (int j2 = j1 + 1; j2 <= hi; ++j2) {
                if (row_used[static_cast<std::size_t>(j2) - 1])
                    continue;
                row_used[static_cast<std::size_t>(j2) - 1] = true;
                boxes.emplace_back(l, j1);
                boxes.emplace_back(l, j2);
                self(self, l + 1);
                boxes.pop_back();
                boxes.pop_back();
                row_used[static_cast<std::size_t>(j2) - 1] = false;
            }
            row_used[static_cast<std::size_t>(j1) - 1] = false;
        }
    };
    place(place, 1);
    return result;
}

int dellac_length(const DellacConfig& config) {
    int inversions = 0;
    const auto& boxes = config.boxes;
    for (std::size_t a = 0; a < boxes.size(); ++a)
        for (std::size_t b = a + 1; b < boxes.size(); ++b) {
            const bool inverted = (boxes[a].first < boxes[b].first && boxes[a].second > boxes[b].second) ||
                                  (boxes[b].first < boxes[a].first && boxes[b].second > boxes[a].second);
            if (inverted)
                ++inversions;
        }
    return inversions;
}

BigInt genocchi_closed(int n) {
    require_rank(n, 0);
    // Sum over f_1..f_{n-1} with f_0 = f_n = 0; the binomial factors vanish
    // beyond f_k = k, so the truncated range is exact.
    BigInt total = 0;
    std::vector<long long> f(static_cast<std::size_t>(n) + 1, 0);
    auto assign = [&](auto&& self, int k, BigInt acc) -> void {
        if (k == n) {
            total += acc * binomial(1, f[static_cast<std::size_t>(n) - 1]);
            return;
        }
        for (long long v = 0; v <= k; ++v) {
            f[static_cast<std::size_t>(k)] = v;
            const BigInt factor = binomial(1 + f[static_cast<std::size_t>(k) - 1], v) *
                                  binomial(1 + v, f[static_cast<std::size_t>(k) - 1]);
            if (factor == 0)
                continue;
            self(self, k + 1, acc * factor);
        }
        f[static_cast<std::size_t>(k)] = 0;
    };
    if (n == 0)
        total = 1;
    else
        assign(assign, 1, BigInt(1));
    return total;
}

QPolynomial q_binomial(long long m, long long k) {
    if (k < 0 || m < 0 || k > m)
        return QPolynomial();
    // Pascal recursion [m,k] = [m-1,k-1] + q^k [m-1,k], one row at a time.
    std::vector<QPolynomial> row{QPolynomial(BigInt(1))};
    for (long long a = 1; a <= m; ++a) {
        std::vector<QPolynomial> next(static_cast<std::size_t>(a) + 1);
        next.front() = QPolynomial(BigInt(1));
        next.back() = QPolynomial(BigInt(1));
        for (long long b = 1; b < a; ++b) {
            QPolynomial upper = row[static_cast<std::size_t>(b)];
            upper.shift(static_cast<std::size_t>(b));
            next[static_cast<std::size_t>(b)] = row[static_cast<std::size_t>(b) - 1] + upper;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

QPolynomial genocchi_poly_fermionic(int n) {
    require_rank(n, 0);
    if (n == 0)
        return QPolynomial(BigInt(1));

    std::map<std::pair<long long, long long>, QPolynomial> qb_cache;
    auto qb = [&](long long m, long long k) -> const QPolynomial& {
        auto [it, fresh] = qb_cache.try_emplace({m, k});
        if (fresh)
            it->second = q_binomial(m, k);
        return it->second;
    };

    QPolynomial total;
    std::vector<long long> f(static_cast<std::size_t>(n) + 1, 0);
    // Assigning f_k settles the two q-binomial factors tying f_{k-1} to f_k
    // and the exponent term of index k-1; both vanish together, so pruning
    // on a zero factor keeps every accumulated exponent nonnegative.
    auto assign = [&](auto&& self, int k, QPolynomial acc, long long exponent) -> void {
        if (k == n) {
            const long long fn1 = f[static_cast<std::size_t>(n) - 1];
            const QPolynomial& last = qb(1, fn1);
            if (last.is_zero())
                return;
            exponent += (n - 1 - fn1) * (1 - fn1);
            acc *= last;
            acc.shift(static_cast<std::size_t>(exponent));
            total += acc;
            return;
        }
        const long long prev = f[static_cast<std::size_t>(k) - 1];
        for (long long v = 0; v <= k; ++v) {
            f[static_cast<std::size_t>(k)] = v;
            QPolynomial factor = qb(1 + prev, v) * qb(1 + v, prev);
            if (factor.is_zero())
                continue;
            long long term = (k > 1) ? (k - 1 - prev) * (1 - prev + v) : 0;
            self(self, k + 1, acc * factor, exponent + term);
        }
        f[static_cast<std::size_t>(k)] = 0;
    };
    assign(assign, 1, QPolynomial(BigInt(1)), 0);
    return total;
}

QPolynomial genocchi_poly_dellac(int n) {
    require_rank(n, 0);
    if (n == 0)
        return QPolynomial(BigInt(1));
    QPolynomial total;
    for (const DellacConfig& config : dellac_configs(n))
        total += QPolynomial::monomial(BigInt(1), static_cast<std::size_t>(dellac_length(config)));
    return total;
}

}  // namespace pbwlab
