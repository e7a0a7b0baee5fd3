#include <doctest.h>

#include <filesystem>
#include <string>

#include "cullis/io.hpp"
#include "cullis/preserver.hpp"
#include "cullis/random.hpp"
#include "support.hpp"

using namespace cullis;

namespace {

std::string parse_message(const std::string& text) {
    try {
        (void)parse_matrix(text, "m.mat");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Parse);
        return e.what();
    }
    FAIL("parse succeeded");
    return {};
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("matrix files round-trip byte for byte") {
    const std::string text = "field Q\nshape 3 2\n1 -1/2\n0 7\n3/4 -5\n";
    const RectMatrix m = parse_matrix(text);
    CHECK(m.rows() == 3);
    CHECK(m(1, 2) == Field::rationals().parse_scalar("-1/2"));
    CHECK(format_matrix(m) == text);

    Rng rng = Rng::derive(51, "io-test");
    for (Field f : {Field::prime(7), Field::prime(2), Field::rationals()}) {
        const RectMatrix r = random_matrix(rng, f, 5, 3);
        const std::string once = format_matrix(r);
        CHECK(parse_matrix(once) == r);
        CHECK(format_matrix(parse_matrix(once)) == once);
    }
}

TEST_CASE("non-canonical input is normalised") {
    const RectMatrix m = parse_matrix("field GF(5)\nshape 1 3\n  7   -1 10\n");
    CHECK(format_matrix(m) == "field GF(5)\nshape 1 3\n2 4 0\n");
    CHECK(format_matrix(parse_matrix("field Q\nshape 1 2\n4/6 -0\n")) == "field Q\nshape 1 2\n2/3 0\n");
}

TEST_CASE("operator files") {
    const Field f = Field::prime(7);
    const LinearOperator t = scs(f, 3, 2, 2, 2);
    const std::string text = format_operator(t);
    CHECK(text.rfind("operator 3 2\nfield GF(7)\nshape 6 6\n", 0) == 0);
    CHECK(parse_operator(text) == t);
    CHECK(format_operator(parse_operator(text)) == text);
    CHECK(error_of([] { (void)parse_operator("operator 3 2\nfield Q\nshape 5 5\n"); }) == Errc::Parse);
}

TEST_CASE("parse errors name the line") {
    CHECK(parse_message("field GF(6)\nshape 1 1\n0\n").find("m.mat:line 1") != std::string::npos);
    CHECK(parse_message("field Q\nshape 2\n").find("m.mat:line 2") != std::string::npos);
    CHECK(parse_message("field Q\nshape 2 1\n1\n").find("line 4") != std::string::npos);
    CHECK(parse_message("field Q\nshape 1 2\n1 x\n").find("line 3") != std::string::npos);
    CHECK(parse_message("field Q\nshape 1 2\n1 2 3\n").find("line 3") != std::string::npos);
    CHECK(parse_message("field Q\nshape 1 1\n1\n2\n").find("line 4") != std::string::npos);
    CHECK(parse_message("").find("line 1") != std::string::npos);
}

TEST_CASE("files") {
    const auto dir = std::filesystem::temp_directory_path() / "cullis-io-test";
    std::filesystem::create_directories(dir);
    const RectMatrix m = RectMatrix::identity(Field::prime(3), 2);
    write_text_file(dir / "i2.mat", format_matrix(m));
    CHECK(read_matrix_file(dir / "i2.mat") == m);
    CHECK(error_of([&] { (void)read_matrix_file(dir / "missing.mat"); }) == Errc::Parse);
    std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
