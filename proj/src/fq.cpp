#include "fq.hpp"

#include "errors.hpp"

namespace pbwlab::fq {

BigInt subspace_count(int d, int e, long long p) {
    if (e < 0 || e > d)
        return 0;
    BigInt num = 1;
    BigInt den = 1;
    BigInt pk = 1;
    for (int k = 0; k < e; ++k) {
        BigInt pd = 1;
        for (int t = 0; t < d - k; ++t)
            pd *= p;
        num *= pd - 1;
        pk *= p;
        den *= pk - 1;
    }
    return num / den;
}

std::vector<Subspace> all_subspaces(int d, int e, long long p) {
    std::vector<Subspace> result;
    if (e < 0 || e > d)
        return result;
    if (e == 0) {
        result.push_back({d, {}, {}});
        return result;
    }

    std::vector<int> pivots;
    auto emit_for_pivots = [&]() {
        std::vector<bool> is_pivot(static_cast<std::size_t>(d), false);
        for (int c : pivots)
            is_pivot[static_cast<std::size_t>(c)] = true;
        // Free slots: to the right of the row's pivot, outside pivot columns.
        std::vector<std::pair<int, int>> free_slots;
        for (int r = 0; r < e; ++r)
            for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < d; ++c)
                if (!is_pivot[static_cast<std::size_t>(c)])
                    free_slots.emplace_back(r, c);

        std::vector<std::vector<int>> rows(static_cast<std::size_t>(e),
                                           std::vector<int>(static_cast<std::size_t>(d), 0));
        for (int r = 0; r < e; ++r)
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;

        auto fill = [&](auto&& self, std::size_t slot) -> void {
            if (slot == free_slots.size()) {
                result.push_back({d, pivots, rows});
                return;
            }
            auto [r, c] = free_slots[slot];
            for (int v = 0; v < p; ++v) {
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
                self(self, slot + 1);
            }
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
        };
        fill(fill, 0);
    };

    auto pick = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            emit_for_pivots();
            return;
        }
        for (int c = from; c <= d - left; ++c) {
            pivots.push_back(c);
            self(self, c + 1, left - 1);
            pivots.pop_back();
        }
    };
    pick(pick, 0, e);
    return result;
}

bool contains(const Subspace& space, std::vector<int> vec, long long p) {
    for (std::size_t r = 0; r < space.rows.size(); ++r) {
        const int pivot = space.pivots[r];
        const int coef = vec[static_cast<std::size_t>(pivot)];
        if (coef == 0)
            continue;
        const auto& row = space.rows[r];
        for (std::size_t c = 0; c < vec.size(); ++c)
            vec[c] = static_cast<int>(((vec[c] - static_cast<long long>(coef) * row[c]) % p + p) % p);
    }
    for (int v : vec)
        if (v != 0)
            return false;
    return true;
}

}  // namespace pbwlab::fq
