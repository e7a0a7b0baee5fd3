#include <doctest.h>

#include "cullis/matrix.hpp"
#include "cullis/random.hpp"
#include "support.hpp"

using namespace cullis;

namespace {

const Field kQ = Field::rationals();

RectMatrix counting(Field f, int rows, int cols) {
    RectMatrix m(f, rows, cols);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) m(i, j) = f.from_int(10 * i + j);
    return m;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("submatrices") {
    const RectMatrix a = counting(kQ, 4, 4);
    CHECK(submatrix_keep(a, {1, 2}, {3, 4}) == RectMatrix::from_ints(kQ, {{13, 14}, {23, 24}}));
    CHECK(submatrix_keep(a, {}, {1}) == RectMatrix::column(kQ, {11, 21, 31, 41}));
    const RectMatrix x = counting(kQ, 5, 3);
    CHECK(submatrix_keep(x, {2, 4}, {}) == RectMatrix::from_ints(kQ, {{21, 22, 23}, {41, 42, 43}}));
    CHECK(submatrix_strike(RectMatrix::identity(kQ, 3), {1}, {1}) == RectMatrix::identity(kQ, 2));
    CHECK(submatrix_strike(a, {}, {2, 4}) == submatrix_keep(a, {}, {1, 3}));
    CHECK(submatrix_strike(counting(kQ, 3, 2), {2}, {}) == RectMatrix::from_ints(kQ, {{11, 12}, {31, 32}}));
    CHECK(error_of([&] { (void)submatrix_keep(a, {5}, {}); }) == Errc::IndexOutOfRange);
    CHECK(error_of([&] { (void)submatrix_strike(a, {0}, {}); }) == Errc::IndexOutOfRange);
    CHECK(error_of([&] { (void)submatrix_strike(a, {1, 2, 3, 4}, {}); }) == Errc::EmptyResult);
}

TEST_CASE("concatenation and transpose") {
    CHECK(concat_cols(RectMatrix::column(kQ, {1, 0}), RectMatrix::column(kQ, {0, 1})) == RectMatrix::identity(kQ, 2));
    CHECK(transpose(RectMatrix::basis_E(kQ, 3, 2, 1, 2)) == RectMatrix::basis_E(kQ, 2, 3, 2, 1));
    CHECK(concat_rows(RectMatrix::from_ints(kQ, {{1, 2}}), RectMatrix::from_ints(kQ, {{3, 4}})) ==
          RectMatrix::from_ints(kQ, {{1, 2}, {3, 4}}));
    CHECK(error_of([] { (void)concat_cols(RectMatrix(kQ, 2, 1), RectMatrix(kQ, 3, 1)); }) == Errc::ShapeMismatch);
    CHECK(error_of([] { (void)(RectMatrix(kQ, 2, 2) + RectMatrix(kQ, 2, 3)); }) == Errc::ShapeMismatch);
    CHECK(error_of([] { (void)(RectMatrix(kQ, 2, 2) * RectMatrix(kQ, 3, 2)); }) == Errc::ShapeMismatch);
    CHECK(error_of([] { (void)(RectMatrix(kQ, 2, 2) + RectMatrix(Field::prime(3), 2, 2)); }) == Errc::MixedFields);
}

TEST_CASE("vec is column-major") {
    CHECK(vec(RectMatrix::basis_E(kQ, 3, 2, 2, 1)) == RectMatrix::basis_E(kQ, 6, 1, 2, 1));
    CHECK(vec(RectMatrix::basis_E(kQ, 3, 2, 1, 2)) == RectMatrix::basis_E(kQ, 6, 1, 4, 1));
    CHECK(vec_index(3, 1, 2) == 4);
    const RectMatrix x = counting(kQ, 4, 3);
    CHECK(unvec(vec(x), 4, 3) == x);
    CHECK(error_of([&] { (void)unvec(vec(x), 3, 3); }) == Errc::ShapeMismatch);
}

TEST_CASE("operators") {
    const Field f = Field::prime(7);
    Rng rng = Rng::derive(1, "matrix-test");
    const RectMatrix x = random_matrix(rng, f, 4, 3);
    CHECK(LinearOperator::identity(f, 4, 3).apply(x) == x);

    const RectMatrix a = random_matrix(rng, f, 4, 4);
    const RectMatrix b = random_matrix(rng, f, 3, 3);
    const LinearOperator ab = LinearOperator::two_sided(a, b);
    CHECK(ab.apply(x) == a * x * b);
    CHECK(ab.matrix() == kronecker(transpose(b), a));
    CHECK(LinearOperator::two_sided(a, RectMatrix::identity(f, 3)).matrix() == left_multiplication_matrix(a, 3));

    const LinearOperator by_map = LinearOperator::from_map(f, 4, 3, [&](const RectMatrix& y) { return a * y * b; });
    CHECK(by_map == ab);
    CHECK(ab.image_of_basis(2, 3) == a * RectMatrix::basis_E(f, 4, 3, 2, 3) * b);

    const RectMatrix a2 = random_invertible(rng, f, 4);
    const RectMatrix b2 = random_invertible(rng, f, 3);
    const LinearOperator other = LinearOperator::two_sided(a2, b2);
    CHECK(compose(ab, other).apply(x) == ab.apply(other.apply(x)));
    CHECK(other.is_invertible());
    CHECK(compose(inverse(other), other) == LinearOperator::identity(f, 4, 3));
    CHECK(error_of([&] { (void)compose(ab, LinearOperator::identity(f, 3, 3)); }) == Errc::ShapeMismatch);
}

TEST_CASE("rank, kernel, inverse") {
    CHECK(rank(RectMatrix(kQ, 3, 2)) == 0);
    for (int n : {2, 5, 7}) {
        CHECK(rank(RectMatrix::basis_E(kQ, n, 2, 1, 1) + RectMatrix::basis_E(kQ, n, 2, 1, 2)) == 1);
    }
    CHECK(rank(counting(kQ, 4, 4)) == 2);
    const auto ker = kernel_basis(counting(kQ, 4, 4));
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) CHECK((counting(kQ, 4, 4) * v).is_zero());

    const Field f = Field::prime(5);
    Rng rng = Rng::derive(2, "matrix-test");
    const RectMatrix m = random_invertible(rng, f, 5);
    CHECK(m * inverse(m) == RectMatrix::identity(f, 5));
    CHECK(error_of([&] { (void)inverse(counting(kQ, 3, 3)); }) == Errc::ConditionViolated);

    const Echelon e = row_reduce(RectMatrix::from_ints(kQ, {{0, 2, 4}, {1, 1, 1}}));
    CHECK(e.pivot_cols == std::vector<int>{1, 2});
    CHECK(e.reduced == RectMatrix::from_ints(kQ, {{1, 0, -1}, {0, 1, 2}}));
}

}  // TEST_SUITE
