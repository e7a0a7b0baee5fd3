#include <doctest.h>

#include <utility>
#include <vector>

#include "cullis/determinant.hpp"
#include "cullis/error.hpp"
#include "cullis/polynomial.hpp"
#include "cullis/random.hpp"
#include "support.hpp"

using namespace cullis;

namespace {

Scalar q(const char* text) { return Field::rationals().parse_scalar(text); }

}  // namespace

TEST_SUITE("field") {

TEST_CASE("GF(5) arithmetic") {
    const Field f = Field::prime(5);
    CHECK(f.from_int(2) + f.from_int(4) == f.from_int(1));
    CHECK(f.from_int(3).inv() == f.from_int(2));
    CHECK(f.from_int(-1) == f.from_int(4));
    CHECK(f.from_int(2) - f.from_int(4) == f.from_int(3));
    CHECK(f.from_int(3) / f.from_int(4) == f.from_int(2));
    CHECK(error_of([&] { (void)f.zero().inv(); }) == Errc::DivisionByZero);
    CHECK(error_of([&] { (void)(f.one() / f.zero()); }) == Errc::DivisionByZero);
}

TEST_CASE("fields are checked") {
    CHECK(error_of([] { (void)Field::prime(4); }) == Errc::NotPrime);
    CHECK(error_of([] { (void)Field::prime(1); }) == Errc::NotPrime);
    CHECK(Field::parse("GF(7)") == Field::prime(7));
    CHECK(Field::parse("Q") == Field::rationals());
    CHECK(Field::prime(11).name() == "GF(11)");
    CHECK(error_of([] { (void)Field::parse("GF(x)"); }) == Errc::Parse);
    const Scalar a = Field::prime(5).one();
    const Scalar b = Field::prime(7).one();
    const Scalar c = Field::rationals().one();
    CHECK(error_of([&] { (void)(a + b); }) == Errc::MixedFields);
    CHECK(error_of([&] { (void)(a * c); }) == Errc::MixedFields);
    CHECK(error_of([&] { (void)(c - a); }) == Errc::MixedFields);
    CHECK_FALSE(a == b);
    CHECK_FALSE(a == c);
}

TEST_CASE("rationals are kept reduced") {
    CHECK(q("2/4") == q("1/2"));
    CHECK(q("2/4").to_string() == "1/2");
    CHECK(q("-4/6").to_string() == "-2/3");
    CHECK(q("-4/2").to_string() == "-2");
    CHECK(error_of([] { (void)q("4/-2"); }) == Errc::Parse);
    CHECK((q("1/3") + q("2/3")).is_one());
    CHECK((q("1/2") - q("1/2")).is_zero());
    CHECK(q("-2/3").inv() == q("-3/2"));
    CHECK(error_of([] { (void)q("1/0"); }) == Errc::DivisionByZero);
}

TEST_CASE("large rationals cross the 64-bit boundary and come back") {
    const Field f = Field::rationals();
    const Scalar big = f.from_int(INT64_MAX);
    const Scalar square = big * big;
    CHECK(square.to_string() == "85070591730234615847396907784232501249");
    CHECK(square / big == big);
    CHECK((square - square).is_zero());
    CHECK(square * big.inv() * big.inv() == f.one());
    CHECK(-f.from_int(INT64_MIN) == f.from_int(INT64_MAX) + f.one());
    CHECK(f.from_int(INT64_MIN) + f.from_int(INT64_MIN) == f.from_int(INT64_MIN) * f.from_int(2));
    // Same value, reached through the overflow path and directly.
    CHECK(q("170141183460469231731687303715884105727/170141183460469231731687303715884105727") == f.one());
    CHECK(q("-18446744073709551616/18446744073709551616") == f.from_int(-1));
    const Scalar tiny = f.one() / big;
    CHECK((tiny * tiny).rational() == mpq_class(1) / (mpq_class(INT64_MAX) * mpq_class(INT64_MAX)));
}

TEST_CASE("interpolate") {
    const Field qf = Field::rationals();
    std::vector<std::pair<Scalar, Scalar>> line{
        {qf.from_int(0), qf.from_int(1)}, {qf.from_int(1), qf.from_int(2)}, {qf.from_int(2), qf.from_int(3)}};
    const auto c = interpolate(line, 2);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == qf.from_int(1));
    CHECK(c[1] == qf.from_int(1));
    CHECK(c[2].is_zero());

    const Field f5 = Field::prime(5);
    std::vector<std::pair<Scalar, Scalar>> square{
        {f5.from_int(0), f5.from_int(0)}, {f5.from_int(1), f5.from_int(1)}, {f5.from_int(2), f5.from_int(4)}};
    const auto s = interpolate(square, 2);
    CHECK(s[0].is_zero());
    CHECK(s[1].is_zero());
    CHECK(s[2].is_one());

    std::vector<std::pair<Scalar, Scalar>> dup{{f5.from_int(1), f5.from_int(0)}, {f5.from_int(6), f5.from_int(1)}};
    CHECK(error_of([&] { (void)interpolate(dup, 1); }) == Errc::DuplicateAbscissa);
    const Field f2 = Field::prime(2);
    std::vector<std::pair<Scalar, Scalar>> few{{f2.zero(), f2.zero()}, {f2.one(), f2.one()}};
    CHECK(error_of([&] { (void)interpolate(few, 2); }) == Errc::FieldTooSmall);
    CHECK(error_of([&] { (void)interpolate(line, 3); }) == Errc::InsufficientPoints);
}

TEST_CASE("interpolating det(A + lambda B) recovers lambda_expand") {
    const Field f = Field::prime(7);
    Rng rng = Rng::derive(3, "field-test");
    for (int round = 0; round < 20; ++round) {
        const RectMatrix a = random_matrix(rng, f, 7, 4);
        const RectMatrix b = random_matrix(rng, f, 7, 4);
        std::vector<std::pair<Scalar, Scalar>> points;
        for (int t = 0; t < 5; ++t) {
            const Scalar lambda = f.from_int(t);
            points.emplace_back(lambda, det_subsets(a + lambda * b));
        }
        CHECK(interpolate(points, 4) == lambda_expand(a, b).coefficients());
    }
}

TEST_CASE("random streams are reproducible") {
    Rng a = Rng::derive(42, "x");
    Rng b = Rng::derive(42, "x");
    Rng c = Rng::derive(42, "y");
    const auto first = a.next();
    CHECK(first == b.next());
    CHECK(first != c.next());
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    for (int i = 0; i < 100; ++i) {
        const auto v = a.between(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
    CHECK(max_atom_probability(Field::prime(7)) == doctest::Approx(1.0 / 7));
    CHECK(max_atom_probability(Field::rationals()) == doctest::Approx(1.0 / 19));
}

}  // TEST_SUITE
