#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cullis/cli.hpp"
#include "cullis/io.hpp"
#include "cullis/preserver.hpp"

using namespace cullis;

namespace {

const std::filesystem::path kFixtures = CULLIS_FIXTURES_DIR;

std::string fixture(const char* name) { return (kFixtures / name).string(); }

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

// Fresh scratch directory, removed on destruction.
struct Scratch {
    std::filesystem::path dir;
    Scratch() : dir(std::filesystem::temp_directory_path() / "cullis-cli-test") {
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
    }
    ~Scratch() { std::filesystem::remove_all(dir); }
    std::string path(const char* name) const { return (dir / name).string(); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("det") {
    const Outcome o = run({"det", fixture("square4.mat")});
    CHECK(o.status == cli::kSuccess);
    CHECK(o.out == "-18\n");
    for (const char* algo : {"def", "subsets", "laplace"}) {
        CHECK(run({"det", fixture("xi43.mat"), "--algo", algo}).out == "-3\n");
    }
    CHECK(run({"det", fixture("xi43.mat"), "--algo", "laplace", "--col", "3"}).out == "-3\n");
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(run({}).status == cli::kUsage);
    CHECK(run({"frobnicate"}).status == cli::kUsage);
    CHECK(run({"det"}).status == cli::kUsage);
    CHECK(run({"det", fixture("xi43.mat"), "--algo", "magic"}).status == cli::kUsage);
    CHECK(run({"det", fixture("xi43.mat"), "--algo", "laplace", "--col", "4"}).status == cli::kUsage);
    CHECK(run({"det", fixture("bad_shape.mat")}).status == cli::kUsage);
    const Outcome truncated = run({"det", fixture("truncated.mat")});
    CHECK(truncated.status == cli::kUsage);
    CHECK(truncated.err.find("line 5") != std::string::npos);
    CHECK(run({"det", fixture("no-such-file.mat")}).status == cli::kUsage);
    CHECK(run({"check-ab", "--a", fixture("i7_q.mat")}).status == cli::kUsage);
    CHECK(run({"scs", "7", "4", "8", "1"}).status == cli::kUsage);
    CHECK(run({"radical", "--n", "7", "--k", "4", "--field", "GF(3)"}).status == cli::kUsage);
}

TEST_CASE("verify-op") {
    const Outcome bad = run({"verify-op", fixture("scale2_gf7.op"), "--samples", "100", "--seed", "1"});
    CHECK(bad.status == cli::kFailure);
    CHECK(bad.out.find("result: FAIL") != std::string::npos);
    CHECK(bad.out.find("witness:") != std::string::npos);
    CHECK(bad.out == run({"verify-op", fixture("scale2_gf7.op"), "--samples", "100", "--seed", "1"}).out);
    CHECK(run({"verify-op", fixture("scale2_gf7.op"), "--exhaustive"}).status == cli::kUsage);
    CHECK(run({"verify-op", fixture("scale2_gf7.op"), "--exhaustive", "--samples", "3"}).status == cli::kUsage);
}

TEST_CASE("check-ab and make-op") {
    CHECK(run({"check-ab", "--a", fixture("i7_q.mat"), "--b", fixture("i4_q.mat")}).status == cli::kSuccess);
    const Outcome bad = run({"check-ab", "--a", fixture("i7_q.mat"), "--b", fixture("i4x2_q.mat")});
    CHECK(bad.status == cli::kFailure);
    CHECK(bad.out.find("witness subset: {1,2,3,4}") != std::string::npos);

    Scratch s;
    CHECK(run({"make-op", "--a", fixture("i7_q.mat"), "--b", fixture("i4_q.mat"), "--out", s.path("id.op")}).status ==
          cli::kSuccess);
    CHECK(read_operator_file(s.path("id.op")) == LinearOperator::identity(Field::rationals(), 7, 4));
    CHECK(run({"make-op", "--a", fixture("i7_q.mat"), "--b", fixture("i4x2_q.mat")}).status == cli::kFailure);
}

TEST_CASE("scs, decompose and the reduction maps") {
    Scratch s;
    const Outcome op = run({"scs", "7", "4", "3", "2", "--field", "GF(5)"});
    REQUIRE(op.status == cli::kSuccess);
    CHECK(parse_operator(op.out) == scs(Field::prime(5), 7, 4, 3, 2));
    write_text_file(s.path("scs.op"), op.out);

    CHECK(run({"verify-op", s.path("scs.op"), "--samples", "200"}).status == cli::kSuccess);
    const Outcome dec = run({"decompose", s.path("scs.op"), "--out-a", s.path("a.mat"), "--out-b", s.path("b.mat"),
                             "--out-phi", s.path("phi.mat")});
    REQUIRE(dec.status == cli::kSuccess);
    CHECK(run({"make-op", "--a", s.path("a.mat"), "--b", s.path("b.mat"), "--phi", s.path("phi.mat"), "--out",
               s.path("again.op")})
              .status == cli::kSuccess);
    CHECK(read_operator_file(s.path("again.op")) == read_operator_file(s.path("scs.op")));
    CHECK(run({"decompose", fixture("scale2_gf7.op")}).status == cli::kFailure);

    const Outcome down = run({"descend-op", s.path("scs.op")});
    REQUIRE(down.status == cli::kSuccess);
    write_text_file(s.path("down.op"), down.out);
    CHECK(parse_operator(down.out).n() == 6);
    const Outcome up = run({"lift-op", s.path("down.op")});
    CHECK(parse_operator(up.out).n() == 7);

    CHECK(run({"reduce", fixture("xi43.mat")}).out == "field Q\nshape 3 3\n1 0 -1\n4 0 -1\n6 1 0\n");
    CHECK(run({"lift", fixture("square4.mat")}).out.find("shape 5 4\n") != std::string::npos);
}

TEST_CASE("expand") {
    const Outcome o = run({"expand", fixture("xi43.mat"), fixture("xi43.mat")});
    CHECK(o.status == cli::kSuccess);
    // det(A + lambda A) = (1 + lambda)^3 det(A).
    CHECK(o.out == "a_0 -3\na_1 -9\na_2 -9\na_3 -3\n");
}

TEST_CASE("radical and rad-member") {
    const Outcome r = run({"radical", "--n", "3", "--k", "2", "--field", "GF(5)"});
    CHECK(r.status == cli::kSuccess);
    CHECK(r.out.rfind("dimension 2\n", 0) == 0);
    CHECK(run({"radical", "--n", "4", "--k", "2", "--field", "GF(5)"}).out == "dimension 0\n");

    CHECK(run({"rad-member", fixture("w74_gf5.mat")}).out == "true\n");
    const Outcome no = run({"rad-member", fixture("e11_74_gf5.mat")});
    CHECK(no.status == cli::kSuccess);
    CHECK(no.out.rfind("false\n", 0) == 0);
}

TEST_CASE("bench emits CSV") {
    const Outcome o = run({"bench", "--samples", "1", "--fields", "GF(7)"});
    CHECK(o.status == cli::kSuccess);
    CHECK(o.out.rfind("n,k,field,algo,evaluations,nanos_total\n", 0) == 0);
    CHECK(o.out.find("3,2,GF(7),def,1,") != std::string::npos);
}

}  // TEST_SUITE
