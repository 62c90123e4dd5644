#include "polytopes.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "errors.hpp"

namespace pbwlab {

MultiExponent::MultiExponent(int n) : n_(n), s_(root_count(n), 0) {
    if (n < 2)
        fail(Errc::invalid_argument, "rank parameter must be at least 2");
}

MultiExponent::MultiExponent(int n, std::vector<std::int64_t> s) : n_(n), s_(std::move(s)) {
    if (n < 2)
        fail(Errc::invalid_argument, "rank parameter must be at least 2");
    if (s_.size() != root_count(n))
        fail(Errc::invalid_argument, "multiexponent needs one entry per positive root");
    for (std::int64_t v : s_)
        if (v < 0)
            fail(Errc::invalid_argument, "multiexponent entries must be nonnegative");
}

MultiExponent MultiExponent::operator+(const MultiExponent& rhs) const {
    if (n_ != rhs.n_)
        fail(Errc::incompatible, "cannot add multiexponents of different rank");
    std::vector<std::int64_t> sum(s_.size());
    for (std::size_t k = 0; k < s_.size(); ++k)
        sum[k] = s_[k] + rhs.s_[k];
    return MultiExponent(n_, std::move(sum));
}

bool is_valid_gt_pattern(const GTPattern& pattern) {
    const auto& rows = pattern.rows;
    for (std::size_t a = 0; a < rows.size(); ++a)
        if (rows[a].size() != a + 1)
            return false;
    for (std::size_t a = 0; a + 1 < rows.size(); ++a) {
        const auto& shorter = rows[a];
        const auto& longer = rows[a + 1];
        for (std::size_t b = 0; b < shorter.size(); ++b)
            if (!(longer[b] >= shorter[b] && shorter[b] >= longer[b + 1]))
                return false;
    }
    return true;
}

bool is_valid_dyck_path(int n, const DyckPath& path) {
    if (path.steps.empty())
        return false;
    for (PositiveRoot r : path.steps)
        if (r.i < 1 || r.i > r.j || r.j > n - 1)
            return false;
    if (path.first().i != path.first().j || path.last().i != path.last().j)
        return false;
    if (path.first().i > path.last().i)
        return false;
    for (std::size_t s = 0; s + 1 < path.steps.size(); ++s) {
        const PositiveRoot a = path.steps[s];
        const PositiveRoot b = path.steps[s + 1];
        const bool right = (b.i == a.i && b.j == a.j + 1);
        const bool down = (b.i == a.i + 1 && b.j == a.j);
        if (!right && !down)
            return false;
    }
    return true;
}

namespace {

// All monotone root sequences from alpha_{a,a} to alpha_{b,b}.
void extend_path(int b, std::vector<PositiveRoot>& steps, std::vector<DyckPath>& out) {
    const PositiveRoot at = steps.back();
    if (at.i == b && at.j == b) {
        out.push_back({steps});
        return;
    }
    if (at.j < b) {
        steps.push_back({at.i, at.j + 1});
        extend_path(b, steps, out);
        steps.pop_back();
    }
    if (at.i < at.j) {
        steps.push_back({at.i + 1, at.j});
        extend_path(b, steps, out);
        steps.pop_back();
    }
}

}  // namespace

std::vector<DyckPath> dyck_paths(int n) {
    if (n < 2)
        fail(Errc::invalid_argument, "rank parameter must be at least 2");
    std::vector<DyckPath> paths;
    for (int a = 1; a <= n - 1; ++a)
        for (int b = a; b <= n - 1; ++b) {
            std::vector<PositiveRoot> steps{{a, a}};
            extend_path(b, steps, paths);
        }
    std::sort(paths.begin(), paths.end(),
              [](const DyckPath& x, const DyckPath& y) { return x.steps < y.steps; });
    return paths;
}

std::vector<MultiExponent> fflv_lattice_points(const DominantWeight& lambda) {
    const int n = lambda.rank();
    const auto paths = dyck_paths(n);
    const std::size_t num_roots = root_count(n);

    std::vector<std::int64_t> bound(paths.size());
    std::vector<std::vector<std::size_t>> paths_through(num_roots);
    for (std::size_t p = 0; p < paths.size(); ++p) {
        std::int64_t b = 0;
        for (int k = paths[p].first().i; k <= paths[p].last().i; ++k)
            b += lambda.coeff(k);
        bound[p] = b;
        for (PositiveRoot r : paths[p].steps)
            paths_through[root_index(n, r)].push_back(p);
    }

    // Depth-first over roots in lexicographic order; the running sums per
    // path make the per-coordinate upper bound available in O(paths).
    std::vector<std::int64_t> partial(paths.size(), 0);
    std::vector<std::int64_t> s(num_roots, 0);
    std::vector<MultiExponent> points;
    auto descend = [&](auto&& self, std::size_t r) -> void {
        if (r == num_roots) {
            points.emplace_back(n, s);
            return;
        }
        std::int64_t vmax = std::numeric_limits<std::int64_t>::max();
        for (std::size_t p : paths_through[r])
            vmax = std::min(vmax, bound[p] - partial[p]);
        for (std::int64_t v = 0; v <= vmax; ++v) {
            s[r] = v;
            for (std::size_t p : paths_through[r])
                partial[p] += v;
            self(self, r + 1);
            for (std::size_t p : paths_through[r])
                partial[p] -= v;
        }
        s[r] = 0;
    };
    descend(descend, 0);
    return points;
}

std::vector<MultiExponent> minkowski_sum(const std::vector<MultiExponent>& a,
                                         const std::vector<MultiExponent>& b) {
    if (!a.empty() && !b.empty() && a.front().rank() != b.front().rank())
        fail(Errc::incompatible, "Minkowski sum of sets over different ranks");
    std::set<MultiExponent> sums;
    for (const auto& s : a)
        for (const auto& t : b)
            sums.insert(s + t);
    return {sums.begin(), sums.end()};
}

std::int64_t pbw_weight(const MultiExponent& s) {
    const int n = s.rank();
    std::int64_t total = 0;
    std::size_t k = 0;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j)
            total += static_cast<std::int64_t>(j - i + 1) * (n - j) * s.values()[k++];
    return total;
}

BigInt gt_pattern_count(const DominantWeight& lambda) {
    const int n = lambda.rank();
    std::vector<std::int64_t> top(static_cast<std::size_t>(n), 0);
    std::int64_t suffix = 0;
    for (int i = n - 1; i >= 1; --i) {
        suffix += lambda.coeff(i);
        top[static_cast<std::size_t>(i) - 1] = suffix;
    }

    std::map<std::vector<std::int64_t>, BigInt> memo;
    auto count = [&](auto&& self, const std::vector<std::int64_t>& row) -> BigInt {
        if (row.size() == 1)
            return 1;
        if (auto it = memo.find(row); it != memo.end())
            return it->second;
        BigInt total = 0;
        std::vector<std::int64_t> next(row.size() - 1);
        auto choose = [&](auto&& self2, std::size_t b) -> void {
            if (b == next.size()) {
                total += self(self, next);
                return;
            }
            for (std::int64_t y = row[b + 1]; y <= row[b]; ++y) {
                next[b] = y;
                self2(self2, b + 1);
            }
        };
        choose(choose, 0);
        memo[row] = total;
        return total;
    };
    return count(count, top);
}

}  // namespace pbwlab
