#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "latcount/detkernel.hpp"
#include "latcount/errors.hpp"
#include "latcount/families.hpp"
#include "latcount/params.hpp"

using namespace latcount;

TEST_CASE("catalan numbers match the frozen prefix") {
    const std::vector<int> want{1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (std::size_t i = 0; i < want.size(); ++i)
        CHECK(catalan(static_cast<std::int64_t>(i) + 1) == want[i]);
    CHECK_THROWS_AS(catalan(0), DomainError);
    CHECK_THROWS_AS(catalan(-3), DomainError);
}

TEST_CASE("catalan numbers equal the square matrix count") {
    for (std::int64_t n = 1; n <= 9; ++n) {
        CAPTURE(n);
        CHECK(catalan(n) ==
              count_by_determinant(QueryParams(n + 1, n + 1, 0, 2)));
    }
}

TEST_CASE("the k-ary generalisation matches the frozen prefix") {
    const std::vector<int> want{1, 3, 12, 55, 273, 1428};
    for (std::size_t i = 0; i < want.size(); ++i)
        CHECK(fuss_catalan(static_cast<std::int64_t>(i) + 1, 3) == want[i]);
    CHECK_THROWS_AS(fuss_catalan(0, 3), DomainError);
    CHECK_THROWS_AS(fuss_catalan(4, 1), DomainError);
}

TEST_CASE("the k-ary generalisation collapses to catalan at k = 2") {
    for (std::int64_t n = 1; n <= 8; ++n)
        CHECK(fuss_catalan(n, 2) == catalan(n));
}

TEST_CASE("the k-ary generalisation equals the matrix count") {
    for (std::int64_t k = 2; k <= 5; ++k) {
        for (std::int64_t n = 1; n <= 5; ++n) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(fuss_catalan(n, k) ==
                  count_by_determinant(
                      QueryParams((k - 1) * n + 1, n + 1, 0, k)));
        }
    }
    CHECK(fuss_catalan(5, 3) ==
          count_by_determinant(QueryParams(11, 6, 0, 3)));
}

TEST_CASE("ballot counts match the frozen instances") {
    CHECK(ballot(1, 1) == 1);
    CHECK(ballot(3, 2) == 5);
    CHECK(ballot(5, 2) == 14);
    CHECK_THROWS_AS(ballot(2, 3), DomainError);
    CHECK_THROWS_AS(ballot(3, 0), DomainError);
}

TEST_CASE("ballot counts equal the matrix count") {
    for (std::int64_t m = 1; m <= 7; ++m) {
        for (std::int64_t n = 1; n <= m; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(ballot(m, n) ==
                  count_by_determinant(QueryParams(m + 1, n + 1, 0, 2)));
        }
    }
}

TEST_CASE("the weighted ballot generalisation stays consistent") {
    CHECK(generalized_ballot(10, 4, 2) == 273);
    CHECK(generalized_ballot(6, 3, 2) == 12);
    CHECK(generalized_ballot(6, 3, 2) == fuss_catalan(3, 3));
    CHECK_THROWS_AS(generalized_ballot(5, 3, 2), DomainError);
    CHECK_THROWS_AS(generalized_ballot(4, 0, 2), DomainError);
    CHECK_THROWS_AS(generalized_ballot(4, 2, 0), DomainError);

    for (std::int64_t m = 1; m <= 7; ++m) {
        for (std::int64_t n = 1; n <= m; ++n)
            CHECK(generalized_ballot(m, n, 1) == ballot(m, n));
    }
}

TEST_CASE("the weighted ballot generalisation equals the matrix count") {
    for (std::int64_t k = 1; k <= 3; ++k) {
        for (std::int64_t n = 1; n <= 4; ++n) {
            for (std::int64_t m = k * n; m <= k * n + 6; ++m) {
                CAPTURE(m);
                CAPTURE(n);
                CAPTURE(k);
                CHECK(generalized_ballot(m, n, k) ==
                      count_by_determinant(
                          QueryParams(m + 1, n + 1, 0, k + 1)));
            }
        }
    }
}

TEST_CASE("every family division is exact over a wide range") {
    for (std::int64_t n = 1; n <= 40; ++n)
        CHECK_NOTHROW(catalan(n));
    for (std::int64_t k = 2; k <= 6; ++k) {
        for (std::int64_t n = 1; n <= 12; ++n)
            CHECK_NOTHROW(fuss_catalan(n, k));
    }
    for (std::int64_t m = 1; m <= 15; ++m) {
        for (std::int64_t n = 1; n <= m; ++n)
            CHECK_NOTHROW(ballot(m, n));
    }
    for (std::int64_t k = 1; k <= 4; ++k) {
        for (std::int64_t n = 1; n <= 6; ++n) {
            for (std::int64_t m = k * n; m <= k * n + 8; ++m)
                CHECK_NOTHROW(generalized_ballot(m, n, k));
        }
    }
}
