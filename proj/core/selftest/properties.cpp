#include <map>

#include "cullis/combinatorics.hpp"
#include "cullis/io.hpp"
#include "cullis/polynomial.hpp"
#include "cullis/radical.hpp"
#include "cullis/reduction.hpp"
#include "support.hpp"

namespace cullis::selftest {

namespace {

using detail::for_each_matrix;
using detail::label;
using detail::shape_label;
using detail::with_matrix;

void field_axioms(Check& check, std::uint64_t seed) {
    auto axioms = [&check](const Scalar& a, const Scalar& b, const Scalar& c) {
        const Field f = a.field();
        auto where = [&] { return f.name() + " at (" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")"; };
        check.that((a + b) + c == a + (b + c), [&] { return "+ not associative in " + where(); });
        check.that((a * b) * c == a * (b * c), [&] { return "* not associative in " + where(); });
        check.that(a * (b + c) == a * b + a * c, [&] { return "not distributive in " + where(); });
        check.that(a + b == b + a && a * b == b * a, [&] { return "not commutative in " + where(); });
        check.that(a + f.zero() == a && a * f.one() == a, [&] { return "identity fails in " + where(); });
        check.that((a + (-a)).is_zero() && a - b == a + (-b), [&] { return "negation fails in " + where(); });
        if (!a.is_zero()) check.that((a * a.inv()).is_one() && b / a * a == b, [&] { return "inverse fails in " + where(); });
    };
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Field f = Field::prime(p);
        for (std::uint32_t a = 0; a < p; ++a) {
            for (std::uint32_t b = 0; b < p; ++b) {
                for (std::uint32_t c = 0; c < p; ++c) axioms(f.from_int(a), f.from_int(b), f.from_int(c));
            }
        }
    }
    const Field q = Field::rationals();
    Rng rng = Rng::derive(seed, "property.field.axioms.Q");
    for (int s = 0; s < 500; ++s) axioms(random_scalar(rng, q), random_scalar(rng, q), random_scalar(rng, q));
}

void interpolation(Check& check, std::uint64_t seed) {
    for (const Field f : {Field::prime(7), Field::prime(11), Field::rationals()}) {
        Rng rng = Rng::derive(seed, "property.field.interpolate." + f.name());
        for (std::size_t bound = 0; bound <= 5; ++bound) {
            for (int s = 0; s < 40; ++s) {
                Coefficients coeffs;
                for (std::size_t d = 0; d <= bound; ++d) coeffs.push_back(random_scalar(rng, f));
                std::vector<std::pair<Scalar, Scalar>> points;
                for (std::size_t t = 0; t <= bound + 1; ++t) {
                    const Scalar x = f.from_int(static_cast<std::int64_t>(t));
                    points.emplace_back(x, evaluate(coeffs, x));
                }
                check.that(interpolate(points, bound) == coeffs, [&] {
                    return "interpolate(evaluate(p)) != p over " + f.name() + " for degree bound " + std::to_string(bound);
                });
            }
        }
    }
}

int inversion_sign(std::span<const int> values) {
    int inversions = 0;
    for (std::size_t a = 0; a < values.size(); ++a) {
        for (std::size_t b = a + 1; b < values.size(); ++b) {
            if (values[a] > values[b]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

void injection_signs(Check& check, std::uint64_t) {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= std::min(n, 4); ++k) {
            std::map<std::vector<int>, std::uint64_t> per_image;
            for_each_injection(n, k, [&](std::span<const int> sigma) {
                std::vector<int> image(sigma.begin(), sigma.end());
                std::sort(image.begin(), image.end());
                check.that(sgn_injection(sigma) == inversion_sign(sigma) * sgn_subset(image), [&] {
                    return "sgn_injection" + Injection(n, {sigma.begin(), sigma.end()}).to_string() + " disagrees";
                });
                ++per_image[image];
            });
            std::uint64_t k_factorial = falling_factorial(k, k);
            check.that(per_image.size() == binomial(n, k), [&] {
                return "injections at " + shape_label(n, k) + " hit " + std::to_string(per_image.size()) + " images";
            });
            for (const auto& [image, count] : per_image) {
                check.that(count == k_factorial, [&] {
                    return RowSubset(n, image).to_string() + " is the image of " + std::to_string(count) + " injections";
                });
                for (int bigger = n; bigger <= n + 3; ++bigger) {
                    check.that(sgn_subset(RowSubset(n, image)) == sgn_subset(RowSubset(bigger, image)),
                               [&] { return "sgn of " + RowSubset(n, image).to_string() + " depends on n"; });
                }
            }
        }
    }
}

void matrix_plumbing(Check& check, std::uint64_t seed) {
    for (const Field f : {Field::prime(5), Field::rationals()}) {
        Rng rng = Rng::derive(seed, "property.matrix." + f.name());
        for (int s = 0; s < 200; ++s) {
            const int n = static_cast<int>(rng.below(6)) + 1;
            const int k = static_cast<int>(rng.below(6)) + 1;
            const RectMatrix x = random_matrix(rng, f, n, k);
            check.that(unvec(vec(x), n, k) == x, [&] { return with_matrix("unvec(vec(X)) != X", x); });

            std::vector<int> strike_rows;
            std::vector<int> strike_cols;
            for (int i = 1; i <= n; ++i) {
                if (rng.below(3) == 0 && static_cast<int>(strike_rows.size()) < n - 1) strike_rows.push_back(i);
            }
            for (int j = 1; j <= k; ++j) {
                if (rng.below(3) == 0 && static_cast<int>(strike_cols.size()) < k - 1) strike_cols.push_back(j);
            }
            const auto keep_rows = complement(n, strike_rows);
            const auto keep_cols = complement(k, strike_cols);
            check.that(submatrix_strike(x, strike_rows, strike_cols) == submatrix_keep(x, keep_rows, keep_cols),
                       [&] { return with_matrix("A(J1|J2) != A[complement]", x); });

            const RectMatrix a = random_matrix(rng, f, n, n);
            const RectMatrix b = random_matrix(rng, f, k, k);
            check.that(rank(a * x * b) <= rank(x), [&] { return with_matrix("rank(AXB) > rank(X)", x); });
            check.that(LinearOperator::two_sided(a, b).apply(x) == a * x * b,
                       [&] { return with_matrix("B^t (x) A does not act as X -> AXB", x); });
        }
        for (int s = 0; s < 20; ++s) {
            const int n = static_cast<int>(rng.below(3)) + 1;
            const int k = static_cast<int>(rng.below(3)) + 1;
            const LinearOperator t1(n, k, random_matrix(rng, f, n * k, n * k));
            const LinearOperator t2(n, k, random_matrix(rng, f, n * k, n * k));
            const LinearOperator t3(n, k, random_matrix(rng, f, n * k, n * k));
            const auto id = LinearOperator::identity(f, n, k);
            check.that(compose(compose(t1, t2), t3) == compose(t1, compose(t2, t3)),
                       [] { return std::string("operator composition is not associative"); });
            check.that(compose(id, t1) == t1 && compose(t1, id) == t1,
                       [] { return std::string("identity operator is not neutral"); });
        }
    }
}

void lift_descend(Check& check, std::uint64_t seed) {
    const Field f = Field::prime(7);
    Rng rng = Rng::derive(seed, "property.reduction.lift-descend");
    for (auto [n, k] : {std::pair{7, 4}, std::pair{6, 3}}) {
        for (int s = 0; s < 5; ++s) {
            const TwoSidedPair even = random_even_pair(rng, f, n - 1, k);
            const LinearOperator small = LinearOperator::two_sided(even.a, even.b);
            const LinearOperator lifted = lift_operator(small);
            const TwoSidedPair pair = two_sided_lift(even.a, even.b);
            check.that(lifted == LinearOperator::two_sided(pair.a, pair.b),
                       [] { return std::string("lift_operator disagrees with two_sided_lift"); });
            check.that(descend_operator(lifted) == small, [] { return std::string("descend(lift(S)) != S"); });
            VerifyOptions options;
            options.samples = 300;
            options.seed = seed + static_cast<std::uint64_t>(s);
            const auto report = verify_preserver(lifted, options);
            check.that(report.passed, [&] { return "lifted even preserver fails at " + shape_label(n, k) + "\n" + describe(report); });
            for (int t = 0; t < 20; ++t) {
                check.that(has_zero_last_row(lifted.apply(random_matrix(rng, f, n, k))),
                           [] { return std::string("lifted operator leaves M^0"); });
            }
        }
    }
}

void scs_group(Check& check, std::uint64_t) {
    for (const Field f : {Field::prime(7), Field::rationals()}) {
        const int n = 7;
        const int k = 4;
        const auto id = LinearOperator::identity(f, n, k);
        check.that(scs(f, n, k, 1, 1) == id, [] { return std::string("SCS_{1,1} is not the identity"); });
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= k; ++j) {
                const auto t = scs(f, n, k, i, j);
                const auto pair = scs_pair(f, n, k, i, j);
                auto where = [&] { return "SCS_{" + std::to_string(i) + "," + std::to_string(j) + "} over " + f.name(); };
                check.that(t.is_invertible(), [&] { return where() + " is singular"; });
                check.that(compose(t, inverse(t)) == id, [&] { return where() + " composed with its inverse is not id"; });
                check.that(LinearOperator::two_sided(pair.a, pair.b) == t, [&] { return where() + " differs from its pair"; });
                check.that(check_two_sided(pair.a, pair.b).passed, [&] { return where() + " pair is not two-sided"; });
            }
        }
    }
}

void decompose_larger(Check& check, std::uint64_t seed) {
    const Field f = Field::prime(7);
    for (auto [n, k] : {std::pair{9, 4}, std::pair{8, 5}}) {
        std::vector<LinearOperator> ops = all_scs(f, n, k);
        Rng rng = Rng::derive(seed, label("property.preserver.decompose", f, n, k));
        for (int s = 0; s < 5; ++s) ops.push_back(spec_to_operator(random_spec(rng, f, n, k)));
        DecomposeOptions options;
        options.seed = seed;
        for (std::size_t t = 0; t < ops.size(); ++t) {
            const auto found = decompose(ops[t], options);
            check.that(spec_to_operator(found) == ops[t], [&] {
                return "operator #" + std::to_string(t) + " at " + shape_label(n, k) + " not reproduced";
            });
        }
    }
}

void even_rank_one(Check& check, std::uint64_t seed) {
    const Field f = Field::prime(5);
    const int n = 8;
    const int k = 4;
    Rng rng = Rng::derive(seed, label("property.preserver.even-rank-one", f, n, k));
    for (int p = 0; p < 5; ++p) {
        const TwoSidedPair pair = random_even_pair(rng, f, n, k);
        check.that(check_two_sided(pair.a, pair.b).passed, [] { return std::string("even pair is not two-sided"); });
        for (int s = 0; s < 500; ++s) {
            RectMatrix u = random_matrix(rng, f, n, 1);
            RectMatrix v = random_matrix(rng, f, 1, k);
            if (u.is_zero()) u(1, 1) = f.one();
            if (v.is_zero()) v(1, 1) = f.one();
            const RectMatrix x = u * v;
            check.that(rank(pair.a * x * pair.b) == 1, [&] { return with_matrix("rank-1 X maps to another rank", x); });
        }
    }
}

void radical_extras(Check& check, std::uint64_t seed) {
    for (auto [n, k] : {std::pair{4, 2}, std::pair{6, 4}, std::pair{5, 3}}) {
        const auto r = radical_basis(Field::prime(5), n, k);
        check.that(r.basis.empty(), [&] {
            return "rad at " + shape_label(n, k) + " over GF(5) has dimension " + std::to_string(r.basis.size());
        });
    }
    for (auto [n, k] : {std::pair{5, 2}, std::pair{7, 4}, std::pair{4, 3}}) {
        for (const auto& w : w_basis(Field::prime(7), n, k)) {
            check.that(radical_membership(w).member, [&] { return with_matrix("W element outside the radical", w); });
        }
    }

    // Transport along SCS maps, and closure of the members found.
    for (auto [p, n, k] : {std::array<int, 3>{7, 5, 2}, std::array<int, 3>{5, 4, 2}, std::array<int, 3>{7, 6, 3}}) {
        const Field f = Field::prime(static_cast<std::uint32_t>(p));
        Rng rng = Rng::derive(seed, label("property.radical.transport", f, n, k));
        const auto w = w_basis(f, n, k);
        std::vector<RectMatrix> members;
        for (int s = 0; s < 40; ++s) {
            RectMatrix y(f, n, k);
            for (const auto& b : w) y = y + random_scalar(rng, f) * b;
            if (s % 2 == 1) {
                RectMatrix bump(f, n, k);
                bump(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1,
                     static_cast<int>(rng.below(static_cast<std::uint64_t>(k))) + 1) = random_nonzero_scalar(rng, f);
                y = y + bump;
            }
            const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
            const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(k))) + 1;
            const bool member = radical_membership(y).member;
            check.that(member == radical_membership(apply_scs(y, i, j)).member,
                       [&] { return with_matrix("membership changes under SCS", y); });
            if (member) members.push_back(y);
        }
        for (std::size_t t = 0; t + 1 < members.size(); ++t) {
            const RectMatrix combo = random_scalar(rng, f) * members[t] + random_scalar(rng, f) * members[t + 1];
            check.that(radical_membership(combo).member, [&] { return with_matrix("members not closed", combo); });
        }
    }

    for (auto [n, k] : {std::pair{5, 2}, std::pair{7, 4}}) {
        const auto report = constant_shift_check(Field::prime(7), n, k, 100, seed);
        check.that(report.passed, [&] { return describe(report); });
    }
}

void io_round_trip(Check& check, std::uint64_t seed) {
    for (const Field f : {Field::prime(7), Field::prime(2147483647), Field::rationals()}) {
        Rng rng = Rng::derive(seed, "property.io." + f.name());
        for (int s = 0; s < 50; ++s) {
            const int n = static_cast<int>(rng.below(5)) + 1;
            const int k = static_cast<int>(rng.below(5)) + 1;
            const RectMatrix x = random_matrix(rng, f, n, k);
            const std::string text = format_matrix(x);
            check.that(parse_matrix(text) == x && format_matrix(parse_matrix(text)) == text,
                       [&] { return "matrix file does not round-trip:\n" + text; });
        }
        const LinearOperator t(2, 2, random_matrix(rng, f, 4, 4));
        const std::string text = format_operator(t);
        check.that(parse_operator(text) == t && format_operator(parse_operator(text)) == text,
                   [&] { return "operator file does not round-trip:\n" + text; });
    }
}

}  // namespace

std::vector<Case> property_cases() {
    return {
        {"property.combinatorics.signs", "injection signs, images, ambient independence", injection_signs},
        {"property.field.axioms", "field axioms", field_axioms},
        {"property.field.interpolate", "interpolate inverts evaluate", interpolation},
        {"property.io.round-trip", "matrix and operator files round-trip", io_round_trip},
        {"property.matrix.plumbing", "vec, strike/keep, rank, composition", matrix_plumbing},
        {"property.preserver.decompose-larger", "decompose round-trip at (9,4) and (8,5)", decompose_larger},
        {"property.preserver.even-rank-one", "even-case pairs keep rank 1", even_rank_one},
        {"property.preserver.scs-group", "SCS maps are invertible two-sided preservers", scs_group},
        {"property.radical.extras", "even radicals, W membership, SCS transport, closure", radical_extras},
        {"property.reduction.lift-descend", "lifting even preservers", lift_descend},
    };
}

}  // namespace cullis::selftest
