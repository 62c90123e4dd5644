#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "errors.hpp"
#include "lie.hpp"
#include "oracles.hpp"

using namespace pbwlab;

TEST_CASE("positive roots for small ranks") {
    CHECK(positive_roots(2) == std::vector<PositiveRoot>{{1, 1}});
    CHECK(positive_roots(3) == std::vector<PositiveRoot>{{1, 1}, {1, 2}, {2, 2}});
    CHECK(positive_roots(5).size() == 10);
}

TEST_CASE("positive roots are strictly increasing and indexable") {
    for (int n = 2; n <= 8; ++n) {
        const auto roots = positive_roots(n);
        CHECK(roots.size() == root_count(n));
        for (std::size_t t = 0; t + 1 < roots.size(); ++t)
            CHECK(roots[t] < roots[t + 1]);
        for (std::size_t t = 0; t < roots.size(); ++t)
            CHECK(root_index(n, roots[t]) == t);
    }
}

TEST_CASE("invalid rank is rejected") {
    CHECK_THROWS_AS(positive_roots(1), Error);
    CHECK_THROWS_AS(positive_roots(-3), Error);
    try {
        positive_roots(0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_argument);
    }
}

TEST_CASE("weight validation") {
    CHECK_THROWS_AS(DominantWeight(1, {}), Error);
    CHECK_THROWS_AS(DominantWeight(3, {1}), Error);
    CHECK_THROWS_AS(DominantWeight(3, {1, -1}), Error);
    CHECK_THROWS_AS(DominantWeight(3, {0, 1}) + DominantWeight(4, {0, 1, 0}), Error);
    CHECK(DominantWeight(3, {1, 2}) + DominantWeight(3, {0, 1}) == DominantWeight(3, {1, 3}));
}

TEST_CASE("weyl_dim on sl_2 strings") {
    for (std::int64_t m = 0; m <= 10; ++m)
        CHECK(weyl_dim(DominantWeight(2, {m})) == m + 1);
}

TEST_CASE("weyl_dim reference values") {
    CHECK(weyl_dim(DominantWeight(3, {1, 1})) == 8);
    CHECK(weyl_dim(DominantWeight(4, {0, 1, 0})) == 6);
    CHECK(weyl_dim(DominantWeight(3, {0, 0})) == 1);
    CHECK(weyl_dim(DominantWeight(4, {1, 1, 1})) == 64);
}

TEST_CASE("fundamental weights give binomial coefficients") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            std::vector<std::int64_t> m(static_cast<std::size_t>(n) - 1, 0);
            m[static_cast<std::size_t>(k) - 1] = 1;
            CHECK(weyl_dim(DominantWeight(n, m)) == binomial(n, k));
        }
}

TEST_CASE("shape_of reference values") {
    CHECK(shape_of(DominantWeight(3, {1, 1})) == YoungShape{{2, 1}});
    CHECK(shape_of(DominantWeight(4, {0, 0, 1})) == YoungShape{{3}});
    CHECK(shape_of(DominantWeight(3, {0, 0})) == YoungShape{});
    CHECK(shape_of(DominantWeight(4, {2, 0, 1})).column_lengths == std::vector<int>{3, 1, 1});
}

TEST_CASE("shape columns weakly decrease and count the weight total") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& w : oracles::weights_up_to(n, 5)) {
            const auto shape = shape_of(w);
            CHECK(shape.columns() == w.total());
            for (std::size_t j = 0; j + 1 < shape.column_lengths.size(); ++j)
                CHECK(shape.column_lengths[j] >= shape.column_lengths[j + 1]);
            for (int len : shape.column_lengths) {
                CHECK(len >= 1);
                CHECK(len <= n - 1);
            }
        }
}

TEST_CASE("shape_of round-trips to the weight") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& w : oracles::weights_up_to(n, 5)) {
            const auto shape = shape_of(w);
            std::vector<std::int64_t> m(static_cast<std::size_t>(n) - 1, 0);
            for (int len : shape.column_lengths)
                ++m[static_cast<std::size_t>(len) - 1];
            CHECK(DominantWeight(n, m) == w);
        }
}
