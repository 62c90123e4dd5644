#include "tableaux.hpp"

#include <algorithm>

#include "errors.hpp"

namespace pbwlab {

namespace {

// Conditions (1) and (2), which only involve a single column.
bool column_ok(const std::vector<int>& col, int height) {
    for (std::size_t i = 0; i < col.size(); ++i) {
        if (col[i] <= height && col[i] != static_cast<int>(i) + 1)
            return false;
    }
    for (std::size_t i1 = 0; i1 < col.size(); ++i1) {
        if (col[i1] == static_cast<int>(i1) + 1)
            continue;
        for (std::size_t i2 = i1 + 1; i2 < col.size(); ++i2)
            if (col[i1] <= col[i2])
                return false;
    }
    return true;
}

// Condition (3): every entry of `col` needs a weakly larger entry in `left`
// at the same or a lower row. Columns weakly shrink left to right, so the
// probed rows always exist in `left`.
bool dominated_by_left(const std::vector<int>& col, const std::vector<int>& left) {
    for (std::size_t i = 0; i < col.size(); ++i) {
        bool found = false;
        for (std::size_t i1 = i; i1 < left.size(); ++i1)
            if (left[i1] >= col[i]) {
                found = true;
                break;
            }
        if (!found)
            return false;
    }
    return true;
}

// All fillings of one column of the given height satisfying (1) and (2),
// in lexicographic order. Row i admits the value i or anything > height.
std::vector<std::vector<int>> column_candidates(int n, int height) {
    std::vector<std::vector<int>> result;
    std::vector<int> col(static_cast<std::size_t>(height));
    auto fill = [&](auto&& self, int row) -> void {
        if (row > height) {
            result.push_back(col);
            return;
        }
        auto try_value = [&](int v) {
            col[static_cast<std::size_t>(row) - 1] = v;
            for (int r = 1; r < row; ++r) {
                const int above = col[static_cast<std::size_t>(r) - 1];
                if (above != r && above <= v)
                    return;
            }
            self(self, row + 1);
        };
        if (row <= height)
            try_value(row);
        for (int v = height + 1; v <= n; ++v)
            try_value(v);
    };
    fill(fill, 1);
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace

bool is_pbw_semistandard(const PBWTableau& tableau) {
    const auto& mu = tableau.shape.column_lengths;
    if (tableau.columns.size() != mu.size())
        fail(Errc::invalid_argument, "tableau columns do not match its shape");
    for (std::size_t j = 0; j < mu.size(); ++j) {
        if (tableau.columns[j].size() != static_cast<std::size_t>(mu[j]))
            fail(Errc::invalid_argument, "tableau column length does not match its shape");
        for (int v : tableau.columns[j])
            if (v < 1 || v > tableau.n)
                fail(Errc::invalid_argument, "tableau entry out of range");
    }
    for (std::size_t j = 0; j < mu.size(); ++j)
        if (!column_ok(tableau.columns[j], mu[j]))
            return false;
    for (std::size_t j = 1; j < mu.size(); ++j)
        if (!dominated_by_left(tableau.columns[j], tableau.columns[j - 1]))
            return false;
    return true;
}

std::vector<PBWTableau> enumerate_pbw_tableaux(const DominantWeight& lambda) {
    const int n = lambda.rank();
    const YoungShape shape = shape_of(lambda);
    std::vector<PBWTableau> result;
    if (shape.column_lengths.empty()) {
        result.push_back({n, shape, {}});
        return result;
    }

    // Candidate fillings depend on the column height only; cache per height.
    std::vector<std::vector<std::vector<int>>> by_height(
        static_cast<std::size_t>(n), std::vector<std::vector<int>>{});
    auto candidates = [&](int height) -> const std::vector<std::vector<int>>& {
        auto& slot = by_height[static_cast<std::size_t>(height) - 1];
        if (slot.empty())
            slot = column_candidates(n, height);
        return slot;
    };

    std::vector<std::vector<int>> cols(shape.column_lengths.size());
    auto place = [&](auto&& self, std::size_t j) -> void {
        if (j == cols.size()) {
            result.push_back({n, shape, cols});
            return;
        }
        for (const auto& cand : candidates(shape.column_lengths[j])) {
            if (j > 0 && !dominated_by_left(cand, cols[j - 1]))
                continue;
            cols[j] = cand;
            self(self, j + 1);
        }
    };
    place(place, 0);
    return result;
}

}  // namespace pbwlab
