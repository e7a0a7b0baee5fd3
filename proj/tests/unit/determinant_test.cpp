#include <doctest.h>

#include "cullis/combinatorics.hpp"
#include "cullis/determinant.hpp"
#include "cullis/random.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace cullis;

namespace {

const Field kQ = Field::rationals();

}  // namespace

TEST_SUITE("determinant") {

TEST_CASE("small values") {
    CHECK(det_definition(RectMatrix::column(kQ, {3, 5})) == kQ.from_int(-2));
    const RectMatrix sq = RectMatrix::from_ints(kQ, {{1, 2}, {3, 4}});
    CHECK(det_definition(sq) == kQ.from_int(-2));
    CHECK(det_laplace(sq, 1) == kQ.from_int(-2));
    CHECK(det_square(sq) == kQ.from_int(-2));
    const RectMatrix xi = RectMatrix::from_ints(kQ, {{2, 0, 0}, {5, 0, 0}, {7, 1, 1}, {1, 0, 1}});
    CHECK(det_definition(xi) == kQ.from_int(-3));
    CHECK(det_subsets(xi) == kQ.from_int(-3));
    CHECK(det_square(RectMatrix::identity(kQ, 4)) == kQ.one());
    CHECK(det_square(RectMatrix::from_ints(kQ, {{1, 2}, {2, 4}})).is_zero());
}

TEST_CASE("one column is an alternating sum") {
    const RectMatrix v = RectMatrix::column(kQ, {4, 9, 16});
    CHECK(det_definition(v) == kQ.from_int(4 - 9 + 16));
    CHECK(det_laplace(v) == kQ.from_int(4 - 9 + 16));
    CHECK(det_subsets(v) == kQ.from_int(4 - 9 + 16));
}

TEST_CASE("columns of the identity give subset signs") {
    const Field f = Field::prime(7);
    for (int k = 1; k <= 4; ++k) {
        for (const RowSubset& d : enumerate_subsets(6, k)) {
            const std::vector<int> cols(d.elements().begin(), d.elements().end());
            const RectMatrix x = submatrix_keep(RectMatrix::identity(f, 6), {}, cols);
            CHECK(det_subsets(x) == sgn_subset(d, f));
            CHECK(det_unit_columns(f, 6, d.elements()) == sgn_subset(d, f));
        }
    }
    CHECK(det_unit_columns(f, 4, std::vector<int>{2, 2}).is_zero());
    CHECK(det_unit_columns(f, 3, std::vector<int>{3, 1}) == f.one());
}

TEST_CASE("all algorithms match an independent oracle") {
    for (Field f : {Field::prime(7), kQ}) {
        Rng rng = Rng::derive(11, "det-test/" + f.name());
        for (auto [n, k] : {std::pair{1, 1}, {3, 1}, {4, 2}, {5, 3}, {6, 4}, {7, 4}, {6, 6}}) {
            for (int round = 0; round < 25; ++round) {
                const RectMatrix x = random_matrix(rng, f, n, k);
                const Scalar expected = oracle::det(x);
                CHECK(det_definition(x) == expected);
                CHECK(det_subsets(x) == expected);
                for (int j = 1; j <= k; ++j) CHECK(det_laplace(x, j) == expected);
                if (n == k) CHECK(det_square(x) == expected);
            }
        }
    }
}

TEST_CASE("duplicate columns vanish") {
    Rng rng = Rng::derive(12, "det-test");
    const Field f = Field::prime(7);
    for (int round = 0; round < 20; ++round) {
        RectMatrix x = random_matrix(rng, f, 6, 3);
        x = with_column(x, 3, x.col(1));
        CHECK(det_subsets(x).is_zero());
    }
}

TEST_CASE("lambda expansion") {
    const Field f = Field::prime(7);
    Rng rng = Rng::derive(13, "det-test");
    const RectMatrix a = random_matrix(rng, f, 6, 3);
    const RectMatrix b = random_matrix(rng, f, 6, 3);
    const LambdaPoly with_zero_b = lambda_expand(a, RectMatrix(f, 6, 3));
    CHECK(with_zero_b[0] == det_subsets(a));
    for (int d = 1; d <= 3; ++d) CHECK(with_zero_b[d].is_zero());
    const LambdaPoly with_zero_a = lambda_expand(RectMatrix(f, 6, 3), b);
    for (int d = 0; d < 3; ++d) CHECK(with_zero_a[d].is_zero());
    CHECK(with_zero_a[3] == det_subsets(b));

    const LambdaPoly p = lambda_expand(a, b);
    CHECK(p.degree_bound() == 3);
    for (int t = 0; t < 7; ++t) CHECK(p(f.from_int(t)) == det_subsets(a + f.from_int(t) * b));
    CHECK(mix_columns(a, b, std::vector<int>{2}) == with_column(a, 2, b.col(2)));
}

TEST_CASE("errors") {
    const RectMatrix wide(kQ, 2, 3);
    CHECK(error_of([&] { (void)det_definition(wide); }) == Errc::BadShape);
    CHECK(error_of([&] { (void)det_subsets(wide); }) == Errc::BadShape);
    CHECK(error_of([&] { (void)det_laplace(wide); }) == Errc::BadShape);
    CHECK(error_of([&] { (void)det_square(RectMatrix(kQ, 3, 2)); }) == Errc::BadShape);
    CHECK(error_of([] { (void)det_laplace(RectMatrix(kQ, 3, 2), 3); }) == Errc::BadColumn);
    CHECK(error_of([] { (void)lambda_expand(RectMatrix(kQ, 3, 2), RectMatrix(kQ, 3, 1)); }) == Errc::ShapeMismatch);
    CHECK(parse_det_algorithm("laplace") == DetAlgorithm::Laplace);
    CHECK(to_string(DetAlgorithm::Subsets) == "subsets");
}

}  // TEST_SUITE
