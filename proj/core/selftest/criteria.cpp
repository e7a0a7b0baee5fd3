#include <array>
#include <utility>

#include "cullis/combinatorics.hpp"
#include "cullis/determinant.hpp"
#include "cullis/preserver.hpp"
#include "cullis/radical.hpp"
#include "cullis/reduction.hpp"
#include "support.hpp"

namespace cullis::selftest {

namespace {

using detail::for_each_matrix;
using detail::label;
using detail::shape_label;
using detail::with_matrix;

constexpr std::array<std::pair<int, int>, 5> kExhaustiveShapes{{{2, 1}, {3, 1}, {3, 2}, {4, 2}, {4, 3}}};

// Shapes sampled for the three-way agreement, every n <= 8 paired with a
// spread of k <= n up to (8, 5).
constexpr std::array<std::pair<int, int>, 14> kRandomShapes{{{1, 1},
                                                             {2, 2},
                                                             {3, 1},
                                                             {3, 3},
                                                             {4, 2},
                                                             {4, 4},
                                                             {5, 2},
                                                             {5, 3},
                                                             {6, 3},
                                                             {6, 4},
                                                             {7, 4},
                                                             {7, 5},
                                                             {8, 3},
                                                             {8, 5}}};

void three_way(Check& check, const RectMatrix& x, int column) {
    const Scalar a = det_definition(x);
    const Scalar b = det_subsets(x);
    const Scalar c = det_laplace(x, column);
    check.that(a == b && b == c, [&] {
        return with_matrix("definition " + a.to_string() + ", subsets " + b.to_string() + ", laplace(col " +
                               std::to_string(column) + ") " + c.to_string(),
                           x);
    });
}

void oracle_equivalence(Check& check, std::uint64_t seed) {
    for (std::uint32_t p : {2u, 3u}) {
        const Field f = Field::prime(p);
        for (auto [n, k] : kExhaustiveShapes) {
            std::uint64_t index = 0;
            for_each_matrix(f, n, k, [&](const RectMatrix& x) {
                three_way(check, x, static_cast<int>(index++ % static_cast<std::uint64_t>(k)) + 1);
            });
        }
    }
    for (const Field f : {Field::prime(7), Field::rationals()}) {
        for (auto [n, k] : kRandomShapes) {
            Rng rng = Rng::derive(seed, label("acceptance.01", f, n, k));
            for (int s = 0; s < 1000; ++s) three_way(check, random_matrix(rng, f, n, k), s % k + 1);
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 2.

RectMatrix swap_columns(const RectMatrix& x, int a, int b) {
    RectMatrix out = x;
    for (int i = 1; i <= x.rows(); ++i) std::swap(out(i, a), out(i, b));
    return out;
}

RectMatrix cyclic_rows(const RectMatrix& x, int first) {
    RectMatrix out(x.field(), x.rows(), x.cols());
    for (int r = 1; r <= x.rows(); ++r) {
        const int src = (first - 1 + r - 1) % x.rows() + 1;
        for (int c = 1; c <= x.cols(); ++c) out(r, c) = x(src, c);
    }
    return out;
}

RectMatrix append_ones(const RectMatrix& x) {
    RectMatrix ones(x.field(), x.rows(), 1);
    for (int i = 1; i <= x.rows(); ++i) ones(i, 1) = x.field().one();
    return concat_cols(x, ones);
}

RectMatrix constant_rows(const std::vector<Scalar>& values, int n) {
    const Field f = values.front().field();
    RectMatrix w(f, n, static_cast<int>(values.size()));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= w.cols(); ++j) w(i, j) = values[static_cast<std::size_t>(j - 1)];
    }
    return w;
}

// One X plus the auxiliary choices the identities need.
struct IdentityInputs {
    RectMatrix x;
    RectMatrix other;  // same shape as x
    RectMatrix square; // k x k
    Scalar c;
    int col_a;
    int col_b;
    int row;
    std::vector<Scalar> constants;
};

void identity_battery(Check& check, const IdentityInputs& in) {
    const RectMatrix& x = in.x;
    const int n = x.rows();
    const int k = x.cols();
    const Field f = x.field();
    const Scalar d = det_subsets(x);
    const bool odd = (n + k) % 2 == 1;

    // Multilinearity in column a: X_a -> X_a + c * Y_a.
    {
        const RectMatrix u = x;
        const RectMatrix v = with_column(x, in.col_a, in.other.col(in.col_a));
        const RectMatrix mixed = with_column(x, in.col_a, x.col(in.col_a) + in.c * in.other.col(in.col_a));
        check.that(det_subsets(mixed) == det_subsets(u) + in.c * det_subsets(v),
                   [&] { return with_matrix("multilinearity fails in column " + std::to_string(in.col_a), x); });
    }
    if (k >= 2 && in.col_a != in.col_b) {
        check.that(det_subsets(swap_columns(x, in.col_a, in.col_b)) == -d,
                   [&] { return with_matrix("column swap does not negate", x); });
        check.that(det_subsets(with_column(x, in.col_b, x.col(in.col_a))).is_zero(),
                   [&] { return with_matrix("duplicate column gives nonzero det", x); });
        const RectMatrix sheared = with_column(x, in.col_b, x.col(in.col_b) + in.c * x.col(in.col_a));
        check.that(det_subsets(sheared) == d, [&] { return with_matrix("shear changes det", x); });
    }
    check.that(det_subsets(x * in.square) == d * det_square(in.square),
               [&] { return with_matrix("det(XY) != det(X) det(Y) for Y =\n" + in.square.to_string() + "\nand X", x); });
    check.that(det_subsets(l_plus(x)) == d, [&] { return with_matrix("zero-row append changes det", x); });
    if (n > k) {
        const Scalar expected = odd ? d : f.zero();
        check.that(det_subsets(append_ones(x)) == expected,
                   [&] { return with_matrix("ones-column append gives wrong value", x); });
    }
    if (odd) {
        const Scalar sign = signed_one(f, ((in.row + 1) * k) % 2 == 0 ? 1 : -1);
        check.that(sign * det_subsets(cyclic_rows(x, in.row)) == d,
                   [&] { return with_matrix("cyclic shift from row " + std::to_string(in.row) + " breaks det", x); });
        if (n > k) {
            check.that(det_subsets(x + constant_rows(in.constants, n)) == d,
                       [&] { return with_matrix("adding constant rows changes det", x); });
        }
    }
}

void identity_battery_case(Check& check, std::uint64_t seed) {
    // Exhaustive in X at small shapes; the auxiliary choices cycle through
    // every column pair, row and scalar as X runs through the space.
    constexpr std::array<std::array<int, 3>, 5> small{{{2, 3, 2}, {3, 3, 2}, {2, 4, 2}, {2, 4, 3}, {3, 2, 1}}};
    for (auto [p, n, k] : small) {
        const Field f = Field::prime(static_cast<std::uint32_t>(p));
        Rng rng = Rng::derive(seed, label("acceptance.02.exhaustive", f, n, k));
        std::uint64_t index = 0;
        for_each_matrix(f, n, k, [&](const RectMatrix& x) {
            const auto t = index++;
            std::vector<Scalar> constants;
            for (int j = 0; j < k; ++j) constants.push_back(random_scalar(rng, f));
            identity_battery(check, IdentityInputs{x, random_matrix(rng, f, n, k), random_matrix(rng, f, k, k),
                                                   f.from_int(static_cast<std::int64_t>(t % p)),
                                                   static_cast<int>(t % static_cast<std::uint64_t>(k)) + 1,
                                                   static_cast<int>((t / k) % static_cast<std::uint64_t>(k)) + 1,
                                                   static_cast<int>(t % static_cast<std::uint64_t>(n)) + 1,
                                                   std::move(constants)});
        });
    }
    for (auto [n, k] : {std::pair{7, 4}, std::pair{6, 4}}) {
        const Field f = Field::prime(7);
        Rng rng = Rng::derive(seed, label("acceptance.02.sampled", f, n, k));
        for (int s = 0; s < 500; ++s) {
            RectMatrix x = random_matrix(rng, f, n, k);
            RectMatrix other = random_matrix(rng, f, n, k);
            RectMatrix square = random_matrix(rng, f, k, k);
            Scalar c = random_scalar(rng, f);
            const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(k))) + 1;
            int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(k - 1))) + 1;
            if (b >= a) ++b;
            const int row = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
            std::vector<Scalar> constants;
            for (int j = 0; j < k; ++j) constants.push_back(random_scalar(rng, f));
            identity_battery(check, IdentityInputs{std::move(x), std::move(other), std::move(square), std::move(c),
                                                   a, b, row, std::move(constants)});
        }
    }
}

// ---------------------------------------------------------------------------

void xi_closed_form(Check& check, std::uint64_t seed) {
    for (const Field f : {Field::rationals(), Field::prime(7)}) {
        for (auto [n, k] : {std::pair{4, 3}, std::pair{6, 3}, std::pair{7, 4}, std::pair{8, 5}}) {
            Rng rng = Rng::derive(seed, label("acceptance.03", f, n, k));
            for (int s = 0; s < 200; ++s) {
                std::vector<Scalar> x;
                for (int i = 0; i < n; ++i) x.push_back(random_scalar(rng, f));
                const RectMatrix m = xi_test_matrix(x, k);
                const Scalar expected = signed_one(f, (k - 1) % 2 == 0 ? 1 : -1) * (x[0] - x[1]);
                const Scalar got = det_definition(m);
                check.that(got == expected, [&] {
                    return with_matrix("det " + got.to_string() + ", expected " + expected.to_string(), m);
                });
            }
        }
    }
}

RectMatrix example_b(Field f, int n) {
    RectMatrix b(f, n, 3);
    b(1, 1) = f.one();
    b(5, 1) = -f.one();
    b(2, 2) = f.one();
    b(4, 2) = -f.one();
    return b;
}

void degree_collapse(Check& check, std::uint64_t seed) {
    for (const Field f : {Field::rationals(), Field::prime(7)}) {
        for (int n : {5, 7}) {
            const RectMatrix b = example_b(f, n);
            check.that(rank(b) == 2, [&] { return "rank(B) != 2 at n = " + std::to_string(n); });
            for (int degree : {2, 3}) {
                const auto witness = mixed_term_witness(b, degree);
                check.that(!witness, [&] {
                    return with_matrix("a_" + std::to_string(degree) + " term " + witness->value.to_string() +
                                           " at n = " + std::to_string(n),
                                       witness->matrix);
                });
            }
            Rng rng = Rng::derive(seed, label("acceptance.04", f, n, 3));
            for (int s = 0; s < 50; ++s) {
                const RectMatrix a = random_matrix(rng, f, n, 3);
                const LambdaPoly poly = lambda_expand(a, b);
                check.that(poly[2].is_zero() && poly[3].is_zero(),
                           [&] { return with_matrix("lambda expansion has degree > 1", a); });
            }
        }
    }
}

void radical_dimensions(Check& check, std::uint64_t) {
    for (std::uint32_t p : {5u, 7u}) {
        for (auto [n, k] : {std::pair{7, 4}, std::pair{9, 4}}) {
            const RadicalReport r = radical_basis(Field::prime(p), n, k);
            check.that(static_cast<int>(r.basis.size()) == k && r.equals_w, [&] {
                return "rad at " + shape_label(n, k) + " over GF(" + std::to_string(p) + ") has dimension " +
                       std::to_string(r.basis.size());
            });
        }
    }
    for (auto [n, k] : {std::pair{6, 4}, std::pair{9, 5}}) {
        const RadicalReport r = radical_basis(Field::prime(7), n, k);
        check.that(r.basis.empty(), [&] {
            return "rad at " + shape_label(n, k) + " over GF(7) has dimension " + std::to_string(r.basis.size());
        });
    }

    // Literal definition versus the mixed-determinant test, every Y in M_{3,2}(GF(2)).
    const Field f = Field::prime(2);
    std::vector<RectMatrix> all;
    std::vector<Scalar> dets;
    for_each_matrix(f, 3, 2, [&](const RectMatrix& x) {
        all.push_back(x);
        dets.push_back(det_subsets(x));
    });
    for (const auto& y : all) {
        bool literal = true;
        for (std::size_t t = 0; t < all.size() && literal; ++t) {
            for (const Scalar& lambda : {f.zero(), f.one()}) {
                if (det_subsets(all[t] + lambda * y) != dets[t]) literal = false;
            }
        }
        const bool fast = radical_membership(y).member;
        check.that(literal == fast, [&] {
            return with_matrix(std::string("definition says ") + (literal ? "member" : "non-member") +
                                   ", mixed test says " + (fast ? "member" : "non-member"),
                               y);
        });
    }
}

void reduction_identities(Check& check, std::uint64_t seed) {
    auto both_ways = [&check](const RectMatrix& x) {
        const Scalar d = det_subsets(x);
        check.that(det_subsets(l_minus(x)) == d, [&] { return with_matrix("det(L^-(X)) != det(X)", x); });
        const RectMatrix y = l_minus(x);
        check.that(det_subsets(l_plus(y)) == det_subsets(y), [&] { return with_matrix("det(L^+(Y)) != det(Y)", y); });
        check.that(l_minus(l_plus(y)) == y, [&] { return with_matrix("L^- L^+ is not the identity", y); });
        const Field f = x.field();
        check.that(m_minus(f, x.rows()) * x == l_minus(x), [&] { return with_matrix("M^- X != L^-(X)", x); });
        check.that(m_plus(f, x.rows()) * y == l_plus(y), [&] { return with_matrix("M^+ Y != L^+(Y)", y); });
    };
    for (std::uint32_t p : {2u, 3u}) {
        for (auto [n, k] : {std::pair{2, 1}, std::pair{4, 1}, std::pair{3, 2}, std::pair{4, 3}}) {
            for_each_matrix(Field::prime(p), n, k, both_ways);
        }
    }
    for (std::uint32_t p : {5u, 7u}) {
        const Field f = Field::prime(p);
        Rng rng = Rng::derive(seed, label("acceptance.06", f, 7, 4));
        for (int s = 0; s < 500; ++s) both_ways(random_matrix(rng, f, 7, 4));
    }
}

// ---------------------------------------------------------------------------
// Criteria 7, 8, 10 share the seeded spec list.

std::vector<LinearOperator> scs_both_fields() {
    std::vector<LinearOperator> ops;
    for (std::uint32_t p : {5u, 7u}) {
        for (auto& t : all_scs(Field::prime(p), 7, 4)) ops.push_back(std::move(t));
    }
    return ops;
}

void construction_soundness(Check& check, std::uint64_t seed) {
    const auto specs = acceptance_specs(seed);
    VerifyOptions options;
    options.samples = 1000;
    std::uint64_t index = 0;
    auto verify = [&](const LinearOperator& t, const std::string& what) {
        options.seed = seed + index++;
        const auto report = verify_preserver(t, options);
        check.that(report.passed, [&] { return what + " fails verification\n" + describe(report); });
    };
    for (std::size_t s = 0; s < specs.size(); ++s) {
        verify(spec_to_operator(specs[s]), "spec #" + std::to_string(s) + " over " + specs[s].field().name());
    }
    for (const auto& t : scs_both_fields()) verify(t, "an SCS operator over " + t.field().name());
}

void decomposition_round_trip(Check& check, std::uint64_t seed) {
    std::vector<LinearOperator> ops;
    for (const auto& spec : acceptance_specs(seed)) ops.push_back(spec_to_operator(spec));
    for (auto& t : all_scs(Field::prime(7), 7, 4)) ops.push_back(std::move(t));
    DecomposeOptions options;
    options.seed = seed;
    for (std::size_t s = 0; s < ops.size(); ++s) {
        const PreserverSpec found = decompose(ops[s], options);
        check.that(spec_to_operator(found) == ops[s],
                   [&] { return "operator #" + std::to_string(s) + " is not reproduced by its decomposition"; });
    }
}

void nonuniqueness_and_rank(Check& check, std::uint64_t seed) {
    for (const Field f : {Field::prime(7), Field::rationals()}) {
        const int n = 7;
        const int k = 4;
        RectMatrix broadcast_first = RectMatrix::identity(f, n);
        for (int i = 1; i <= n; ++i) broadcast_first(i, 1) += f.one();
        const auto copy_spec = PreserverSpec::create(RectMatrix::identity(f, n), RectMatrix::identity(f, k),
                                                     row_copy_phi(f, n, k, 1));
        const auto matrix_spec = PreserverSpec::create(broadcast_first, RectMatrix::identity(f, k));
        check.that(spec_to_operator(copy_spec) == spec_to_operator(matrix_spec),
                   [&] { return "non-uniqueness pair gives different operators over " + f.name(); });

        RectMatrix phi(f, k, n * k);
        phi(1, vec_index(n, 1, 1)) = -f.one();
        const auto t_prime = spec_to_operator(
            PreserverSpec::create(RectMatrix::identity(f, n), RectMatrix::identity(f, k), phi));
        VerifyOptions options;
        options.samples = 1000;
        options.seed = seed;
        const auto report = verify_preserver(t_prime, options);
        check.that(report.passed, [&] { return "T' fails verification\n" + describe(report); });

        const RectMatrix e = RectMatrix::basis_E(f, n, k, 1, 1) + RectMatrix::basis_E(f, n, k, 1, 2);
        RectMatrix expected = RectMatrix::basis_E(f, n, k, 1, 2);
        for (int i = 2; i <= n; ++i) expected(i, 1) = -f.one();
        const RectMatrix image = t_prime.apply(e);
        check.that(rank(e) == 1, [] { return std::string("rank(E_11 + E_12) != 1"); });
        check.that(image == expected, [&] { return with_matrix("T'(E_11 + E_12) differs from the closed form", image); });
        check.that(rank(image) == 2, [&] { return with_matrix("rank(T'(E_11 + E_12)) != 2", image); });
    }
}

void waterhouse_invariants(Check& check, std::uint64_t seed) {
    std::vector<LinearOperator> ops;
    for (const auto& spec : acceptance_specs(seed)) ops.push_back(spec_to_operator(spec));
    for (auto& t : scs_both_fields()) ops.push_back(std::move(t));
    for (std::size_t s = 0; s < ops.size(); ++s) {
        const auto& t = ops[s];
        const auto w = w_basis(t.field(), t.n(), t.k());
        for (const auto& v : w) {
            check.that(in_w(t.apply(v)), [&] { return with_matrix("T(w) leaves W for operator #" + std::to_string(s), v); });
        }
        for (const auto& v : t.kernel()) {
            check.that(in_span(w, v), [&] { return with_matrix("kernel element outside W, operator #" + std::to_string(s), v); });
        }
    }
}

void negative_controls(Check& check, std::uint64_t seed) {
    const Field f = Field::prime(7);
    const auto twice = LinearOperator::two_sided(f.from_int(2) * RectMatrix::identity(f, 7), RectMatrix::identity(f, 4));
    VerifyOptions options;
    options.samples = 100;
    options.seed = seed;
    const auto report = verify_preserver(twice, options);
    check.that(!report.passed && report.witness.has_value(), [] { return std::string("X -> 2X passed verification"); });
    if (report.witness) {
        const Scalar before = det_subsets(*report.witness);
        const Scalar after = det_subsets(twice.apply(*report.witness));
        check.that(after == f.from_int(16) * before && after != before,
                   [&] { return with_matrix("witness does not separate det(2X) from det(X)", *report.witness); });
        check.note("X -> 2X over GF(7): " + report.detail + " at X =\n" + report.witness->to_string());
    }

    const Field q = Field::rationals();
    const auto two_sided = check_two_sided(RectMatrix::identity(q, 7), q.from_int(2) * RectMatrix::identity(q, 4));
    check.that(!two_sided.passed && two_sided.witness_subset == RowSubset(7, {1, 2, 3, 4}), [&] {
        return "(I_7, 2 I_4) over Q: expected failure at {1,2,3,4}\n" + describe(two_sided);
    });
    if (!two_sided.passed) check.note("(I_7, 2 I_4) over Q: " + two_sided.detail);
}

}  // namespace

std::vector<Case> acceptance_cases() {
    return {
        {"acceptance.01", "det_definition = det_subsets = det_laplace", oracle_equivalence},
        {"acceptance.02", "identity battery", identity_battery_case},
        {"acceptance.03", "structured matrix det = (-1)^(k-1) (x_1 - x_2)", xi_closed_form},
        {"acceptance.04", "n x 3 example: a_2 = a_3 = 0 and rank 2", degree_collapse},
        {"acceptance.05", "radical of det_{n,k}", radical_dimensions},
        {"acceptance.06", "L^- / L^+ reduction identities", reduction_identities},
        {"acceptance.07", "constructed preservers verify", construction_soundness},
        {"acceptance.08", "decompose round-trip", decomposition_round_trip},
        {"acceptance.09", "non-uniqueness pair and rank-increasing T'", nonuniqueness_and_rank},
        {"acceptance.10", "T(W) in W and Ker T in W", waterhouse_invariants},
        {"acceptance.11", "negative controls", negative_controls},
    };
}

}  // namespace cullis::selftest
