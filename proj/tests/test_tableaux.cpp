#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "errors.hpp"
#include "oracles.hpp"
#include "tableaux.hpp"

using namespace pbwlab;

namespace {

PBWTableau single_column(int n, std::vector<int> entries) {
    YoungShape shape{{static_cast<int>(entries.size())}};
    return {n, shape, {std::move(entries)}};
}

}  // namespace

TEST_CASE("single box fillings") {
    CHECK(is_pbw_semistandard(single_column(3, {1})));
    CHECK(is_pbw_semistandard(single_column(3, {2})));
    CHECK(is_pbw_semistandard(single_column(3, {3})));
}

TEST_CASE("entry below the column length must sit on the diagonal") {
    // height 2: the value 2 in row 1 violates condition (1)
    CHECK_FALSE(is_pbw_semistandard(single_column(4, {2, 3})));
    CHECK(is_pbw_semistandard(single_column(4, {1, 2})));
    CHECK(is_pbw_semistandard(single_column(4, {3, 2})));
    CHECK(is_pbw_semistandard(single_column(4, {4, 3})));
    // a free entry above a larger one violates condition (2)
    CHECK_FALSE(is_pbw_semistandard(single_column(4, {3, 4})));
}

TEST_CASE("condition (3) reaches into the previous column") {
    // shape (2,1): columns of heights 2 and 1
    PBWTableau t{3, YoungShape{{2, 1}}, {{1, 2}, {3}}};
    CHECK_FALSE(is_pbw_semistandard(t));
    PBWTableau ok{3, YoungShape{{2, 1}}, {{3, 2}, {3}}};
    CHECK(is_pbw_semistandard(ok));
}

TEST_CASE("invalid entries raise instead of returning false") {
    CHECK_THROWS_AS(is_pbw_semistandard(single_column(3, {4})), Error);
    CHECK_THROWS_AS(is_pbw_semistandard(single_column(3, {0})), Error);
    PBWTableau mismatched{3, YoungShape{{2}}, {{1}}};
    CHECK_THROWS_AS(is_pbw_semistandard(mismatched), Error);
}

TEST_CASE("enumeration of small weights") {
    const auto omega1 = enumerate_pbw_tableaux(DominantWeight(3, {1, 0}));
    REQUIRE(omega1.size() == 3);
    CHECK(omega1[0].columns == std::vector<std::vector<int>>{{1}});
    CHECK(omega1[1].columns == std::vector<std::vector<int>>{{2}});
    CHECK(omega1[2].columns == std::vector<std::vector<int>>{{3}});

    CHECK(enumerate_pbw_tableaux(DominantWeight(4, {0, 1, 0})).size() == 6);
    CHECK(enumerate_pbw_tableaux(DominantWeight(3, {1, 1})).size() == 8);
}

TEST_CASE("zero weight yields one empty tableau") {
    const auto empty = enumerate_pbw_tableaux(DominantWeight(3, {0, 0}));
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].columns.empty());
}

TEST_CASE("tableau counts match the Weyl dimension") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : oracles::weights_up_to(n, 3))
            CHECK(BigInt(enumerate_pbw_tableaux(w).size()) == weyl_dim(w));
}

TEST_CASE("fundamental weights count subsets") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            std::vector<std::int64_t> m(static_cast<std::size_t>(n) - 1, 0);
            m[static_cast<std::size_t>(k) - 1] = 1;
            CHECK(BigInt(enumerate_pbw_tableaux(DominantWeight(n, m)).size()) == binomial(n, k));
        }
}

TEST_CASE("enumeration equals brute force over all fillings") {
    // every shape here has at most six boxes
    const std::vector<DominantWeight> cases{
        DominantWeight(3, {1, 0}),  DominantWeight(3, {0, 2}),  DominantWeight(3, {1, 1}),
        DominantWeight(3, {2, 1}),  DominantWeight(4, {0, 0, 2}), DominantWeight(4, {1, 1, 0}),
        DominantWeight(4, {0, 1, 1}), DominantWeight(5, {0, 1, 0, 1}),
    };
    for (const auto& w : cases) {
        auto produced = enumerate_pbw_tableaux(w);
        auto expected = oracles::tableaux_by_filter(w);
        auto key = [](const PBWTableau& t) { return t.columns; };
        std::sort(produced.begin(), produced.end(),
                  [&](const PBWTableau& a, const PBWTableau& b) { return key(a) < key(b); });
        std::sort(expected.begin(), expected.end(),
                  [&](const PBWTableau& a, const PBWTableau& b) { return key(a) < key(b); });
        CHECK(produced == expected);
    }
}

TEST_CASE("enumeration is duplicate-free and lexicographically ordered") {
    for (const auto& w : oracles::weights_up_to(4, 3)) {
        const auto tableaux = enumerate_pbw_tableaux(w);
        std::set<std::vector<std::vector<int>>> seen;
        for (const auto& t : tableaux)
            seen.insert(t.columns);
        CHECK(seen.size() == tableaux.size());
        for (std::size_t a = 0; a + 1 < tableaux.size(); ++a)
            CHECK(tableaux[a].columns < tableaux[a + 1].columns);
    }
}
