#include <doctest.h>

#include <vector>

#include "cullis/determinant.hpp"
#include "cullis/radical.hpp"
#include "cullis/random.hpp"
#include "support.hpp"

using namespace cullis;

TEST_SUITE("radical") {

TEST_CASE("W basis") {
    const Field q = Field::rationals();
    const auto w = w_basis(q, 3, 2);
    REQUIRE(w.size() == 2);
    CHECK(w[0] == RectMatrix::from_ints(q, {{1, 0}, {1, 0}, {1, 0}}));
    CHECK(w[1] == RectMatrix::from_ints(q, {{0, 1}, {0, 1}, {0, 1}}));
    CHECK(in_w(w[0] + q.from_int(3) * w[1]));
    CHECK_FALSE(in_w(RectMatrix::basis_E(q, 3, 2, 1, 1)));
}

TEST_CASE("membership") {
    const Field f = Field::prime(5);
    CHECK(radical_membership(RectMatrix(f, 7, 4)).member);
    for (const RectMatrix& w : w_basis(f, 7, 4)) CHECK(radical_membership(w).member);
    const MembershipResult e11 = radical_membership(RectMatrix::basis_E(f, 7, 4, 1, 1));
    CHECK_FALSE(e11.member);
    REQUIRE(e11.witness);
    CHECK_FALSE(e11.witness->value.is_zero());
    CHECK(det_subsets(e11.witness->matrix) == e11.witness->value);
    CHECK(error_of([&] { (void)radical_membership(RectMatrix(f, 3, 4)); }) == Errc::BadShape);
}

TEST_CASE("membership agrees with brute force at (3,2) over GF(2)") {
    // Y is in the radical iff det(X + lambda Y) = det(X) for every X and lambda.
    const Field f = Field::prime(2);
    for (int ybits = 0; ybits < 64; ++ybits) {
        RectMatrix y(f, 3, 2);
        for (int b = 0; b < 6; ++b) y.raw(static_cast<std::size_t>(b)) = f.from_int((ybits >> b) & 1);
        bool brute = true;
        for (int xbits = 0; xbits < 64 && brute; ++xbits) {
            RectMatrix x(f, 3, 2);
            for (int b = 0; b < 6; ++b) x.raw(static_cast<std::size_t>(b)) = f.from_int((xbits >> b) & 1);
            brute = det_definition(x + y) == det_definition(x);
        }
        CHECK(radical_membership(y).member == brute);
    }
}

TEST_CASE("radical bases") {
    const RadicalReport odd = radical_basis(Field::prime(5), 7, 4);
    CHECK(odd.basis.size() == 4);
    CHECK(odd.equals_w);
    for (const RectMatrix& w : w_basis(Field::prime(5), 7, 4)) CHECK(in_span(odd.basis, w));

    CHECK(radical_basis(Field::prime(5), 6, 4).basis.empty());

    const RadicalReport tiny = radical_basis(Field::prime(3), 2, 1);
    REQUIRE(tiny.basis.size() == 1);
    CHECK(in_w(tiny.basis[0]));
    CHECK(error_of([] { (void)radical_basis(Field::prime(3), 7, 4); }) == Errc::FieldTooSmall);
}

TEST_CASE("structured matrix") {
    const Field q = Field::rationals();
    const std::vector<Scalar> x{q.from_int(2), q.from_int(5), q.from_int(7), q.from_int(1)};
    const RectMatrix m = xi_test_matrix(x, 3);
    CHECK(m == RectMatrix::from_ints(q, {{2, 0, 0}, {5, 0, 0}, {7, 1, 1}, {1, 0, 1}}));
    CHECK(det_subsets(m) == q.from_int(-3));

    const Field f = Field::prime(7);
    Rng rng = Rng::derive(41, "radical-test");
    std::vector<Scalar> y{f.one(), f.one()};
    for (int i = 0; i < 3; ++i) y.push_back(random_scalar(rng, f));
    CHECK(det_subsets(xi_test_matrix(y, 4)).is_zero());
    CHECK(error_of([&] { (void)xi_test_matrix(y, 5); }) == Errc::BadShape);
}

TEST_CASE("constant shifts") {
    CHECK(constant_shift_check(Field::prime(7), 7, 4, 100, 3).passed);
    CHECK(constant_shift_check(Field::rationals(), 5, 2, 100, 3).passed);
    CHECK(error_of([] { (void)constant_shift_check(Field::prime(7), 6, 4, 10, 3); }) == Errc::HypothesisViolated);
}

}  // TEST_SUITE
