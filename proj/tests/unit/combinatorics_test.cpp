#include <doctest.h>

#include <vector>

#include "cullis/combinatorics.hpp"
#include "cullis/error.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace cullis;

TEST_SUITE("combinatorics") {

TEST_CASE("subset signs") {
    CHECK(sgn_subset(RowSubset(4, {1, 2, 3, 4})) == 1);
    CHECK(sgn_subset(RowSubset(2, {2})) == -1);
    CHECK(sgn_subset(RowSubset(4, {1, 3})) == -1);
    CHECK(sgn_subset(RowSubset(9, {1, 3})) == -1);
    CHECK(sgn_subset(RowSubset(4, {1, 3}), Field::prime(5)) == Field::prime(5).from_int(4));
}

TEST_CASE("injection signs") {
    CHECK(sgn_injection(Injection(3, {1, 2, 3})) == 1);
    CHECK(sgn_injection(Injection(2, {2, 1})) == -1);
    CHECK(sgn_injection(Injection(3, {3, 1})) == 1);
    CHECK(Injection(3, {3, 1}).image() == RowSubset(3, {1, 3}));
    CHECK(sorting_sign(std::vector<int>{3, 1, 2}) == 1);
    CHECK(sorting_sign(std::vector<int>{2, 1, 3}) == -1);
}

TEST_CASE("signs agree with an inversion count over every injection") {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= n; ++k) {
            for_each_injection(n, k, [&](std::span<const int> values) {
                std::vector<int> v(values.begin(), values.end());
                CHECK(sgn_injection(values) == oracle::inversion_sign(v) * oracle::subset_sign(v));
            });
        }
    }
}

TEST_CASE("enumeration") {
    const auto subsets = enumerate_subsets(4, 2);
    REQUIRE(subsets.size() == 6);
    CHECK(subsets.front() == RowSubset(4, {1, 2}));
    CHECK(subsets.back() == RowSubset(4, {3, 4}));
    CHECK(enumerate_injections(4, 2).size() == 12);
    CHECK(enumerate_subsets(7, 4).size() == 35);
    CHECK(binomial(7, 4) == 35);
    CHECK(binomial(3, 5) == 0);
    CHECK(falling_factorial(8, 5) == 6720);
    std::size_t count = 0;
    for_each_injection(8, 5, [&](std::span<const int>) { ++count; });
    CHECK(count == 6720);
    CHECK(complement(5, std::vector<int>{4, 2}) == std::vector<int>{1, 3, 5});
}

TEST_CASE("enumeration rejects bad dimensions") {
    CHECK(error_of([] { (void)enumerate_subsets(3, 4); }) == Errc::BadDimensions);
    CHECK(error_of([] { (void)enumerate_injections(3, 0); }) == Errc::BadDimensions);
}

}  // TEST_SUITE
