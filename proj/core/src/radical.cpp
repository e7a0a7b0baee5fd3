#include "cullis/radical.hpp"

#include <algorithm>
#include <map>

#include "cullis/combinatorics.hpp"
#include "cullis/determinant.hpp"
#include "cullis/random.hpp"

namespace cullis {

std::vector<RectMatrix> w_basis(Field f, int n, int k) {
    std::vector<RectMatrix> basis;
    for (int j = 1; j <= k; ++j) {
        RectMatrix w(f, n, k);
        for (int i = 1; i <= n; ++i) w(i, j) = f.one();
        basis.push_back(std::move(w));
    }
    return basis;
}

bool in_w(const RectMatrix& y) {
    for (int i = 2; i <= y.rows(); ++i) {
        for (int j = 1; j <= y.cols(); ++j) {
            if (y(i, j) != y(1, j)) return false;
        }
    }
    return true;
}

namespace {

// Calls visit(slots, rows) for every mixed term of the given degree, in
// lexicographic order of (slots, rows). Stops early when visit returns false.
template <typename Visit>
bool for_each_mixed_term(int n, int k, int degree, Visit&& visit) {
    bool go_on = true;
    for_each_subset(k, degree, [&](std::span<const int> slots) {
        if (!go_on) return;
        std::vector<int> rows(static_cast<std::size_t>(k), 0);
        std::vector<int> free = complement(k, slots);
        for (int j : free) rows[static_cast<std::size_t>(j - 1)] = 1;
        while (true) {
            if (!visit(slots, rows)) {
                go_on = false;
                return;
            }
            std::size_t t = free.size();
            while (t > 0) {
                auto& r = rows[static_cast<std::size_t>(free[t - 1] - 1)];
                if (++r <= n) break;
                r = 1;
                --t;
            }
            if (t == 0) break;
        }
    });
    return go_on;
}

// Inserts `row` into a fully reduced row set, keeping every pivot column
// zero in all other rows.
void add_reduced_row(std::map<int, std::vector<Scalar>>& reduced, std::vector<Scalar> row) {
    for (const auto& [pivot, basis_row] : reduced) {
        const Scalar factor = row[static_cast<std::size_t>(pivot)];
        if (factor.is_zero()) continue;
        for (std::size_t c = 0; c < row.size(); ++c) row[c] -= factor * basis_row[c];
    }
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot].is_zero()) ++pivot;
    if (pivot == row.size()) return;
    const Scalar inv = row[pivot].inv();
    for (auto& entry : row) entry = entry * inv;
    for (auto& entry : reduced) {
        auto& basis_row = entry.second;
        const Scalar factor = basis_row[pivot];
        if (factor.is_zero()) continue;
        for (std::size_t c = 0; c < row.size(); ++c) basis_row[c] -= factor * row[c];
    }
    reduced.emplace(static_cast<int>(pivot), std::move(row));
}

RectMatrix mixed_matrix(const RectMatrix& y, const std::vector<int>& rows) {
    RectMatrix m = y;
    for (int j = 1; j <= y.cols(); ++j) {
        const int r = rows[static_cast<std::size_t>(j - 1)];
        if (r == 0) continue;
        for (int i = 1; i <= y.rows(); ++i) m(i, j) = i == r ? y.field().one() : y.field().zero();
    }
    return m;
}

}  // namespace

std::optional<MixedWitness> mixed_term_witness(const RectMatrix& y, int degree) {
    const int n = y.rows();
    const int k = y.cols();
    if (n < k) throw Error(Errc::BadShape, "det_{n,k} needs n >= k");
    if (degree < 1 || degree > k) throw Error(Errc::BadDimensions, "degree must lie in [1, k]");
    std::optional<MixedWitness> found;
    for_each_mixed_term(n, k, degree, [&](std::span<const int> slots, const std::vector<int>& rows) {
        RectMatrix m = mixed_matrix(y, rows);
        Scalar value = det_subsets(m);
        if (value.is_zero()) return true;
        found = MixedWitness{std::vector<int>(slots.begin(), slots.end()), rows, std::move(value), std::move(m)};
        return false;
    });
    return found;
}

MembershipResult radical_membership(const RectMatrix& y) {
    const int n = y.rows();
    const int k = y.cols();
    if (n < k) throw Error(Errc::BadShape, "det_{n,k} needs n >= k");
    MembershipResult result;
    for (int s = 1; s <= k && result.member; ++s) {
        for_each_mixed_term(n, k, s, [&](std::span<const int> slots, const std::vector<int>& rows) {
            RectMatrix m = mixed_matrix(y, rows);
            Scalar value = det_subsets(m);
            ++result.determinant_calls;
            if (value.is_zero()) return true;
            result.member = false;
            result.witness = MixedWitness{std::vector<int>(slots.begin(), slots.end()), rows, std::move(value),
                                          std::move(m)};
            return false;
        });
    }
    return result;
}

bool in_span(const std::vector<RectMatrix>& basis, const RectMatrix& v) {
    if (basis.empty()) return v.is_zero();
    RectMatrix stacked = vec(basis.front());
    for (std::size_t t = 1; t < basis.size(); ++t) stacked = concat_cols(stacked, vec(basis[t]));
    const int before = rank(stacked);
    return rank(concat_cols(stacked, vec(v))) == before;
}

RadicalReport radical_basis(Field f, int n, int k) {
    if (n < k || k < 1) throw Error(Errc::BadShape, "det_{n,k} needs 1 <= k <= n");
    if (!f.larger_than(static_cast<std::uint64_t>(k))) {
        throw Error(Errc::FieldTooSmall, "|" + f.name() + "| <= k = " + std::to_string(k) +
                                             "; the linear test for the radical needs |F| > k");
    }
    const int unknowns = n * k;
    RadicalReport report;
    report.n = n;
    report.k = k;
    report.field = f;

    // a_1(A, Y) = sum_j det(A with column j replaced by Y_j). Term j does not
    // involve column j of A and is multilinear in the others, so distinct j
    // contribute distinct monomials in the entries of A: a_1 vanishes
    // identically iff every term vanishes on every basis assignment of the
    // remaining columns. One equation per (j, assignment).
    std::map<int, std::vector<Scalar>> reduced;  // fully reduced rows keyed by 0-based pivot
    std::vector<int> rows(static_cast<std::size_t>(k), 1);
    for (int j = 1; j <= k && static_cast<int>(reduced.size()) < unknowns; ++j) {
        std::fill(rows.begin(), rows.end(), 1);
        while (static_cast<int>(reduced.size()) < unknowns) {
            ++report.equations;
            std::vector<Scalar> row(static_cast<std::size_t>(unknowns), f.zero());
            bool nonzero = false;
            for (int rho = 1; rho <= n; ++rho) {
                rows[static_cast<std::size_t>(j - 1)] = rho;
                Scalar c = det_unit_columns(f, n, rows);
                if (c.is_zero()) continue;
                row[static_cast<std::size_t>(vec_index(n, rho, j) - 1)] = std::move(c);
                nonzero = true;
            }
            if (nonzero) add_reduced_row(reduced, std::move(row));
            // Next assignment of the slots other than j.
            std::size_t t = rows.size();
            while (t > 0) {
                if (t == static_cast<std::size_t>(j)) {
                    --t;
                    continue;
                }
                if (++rows[t - 1] <= n) break;
                rows[t - 1] = 1;
                --t;
            }
            if (t == 0) break;
        }
    }

    if (!reduced.empty()) {
        RectMatrix system(f, static_cast<int>(reduced.size()), unknowns);
        int r = 1;
        for (const auto& entry : reduced) {
            for (int c = 0; c < unknowns; ++c) system(r, c + 1) = entry.second[static_cast<std::size_t>(c)];
            ++r;
        }
        for (const auto& v : kernel_basis(system)) report.basis.push_back(unvec(v, n, k));
    } else {
        for (int c = 1; c <= unknowns; ++c) {
            RectMatrix v(f, unknowns, 1);
            v(c, 1) = f.one();
            report.basis.push_back(unvec(v, n, k));
        }
    }

    for (const auto& y : report.basis) {
        const auto check = radical_membership(y);
        if (!check.member) {
            throw Error(Errc::VerificationFailed, "kernel element fails the membership audit:\n" + y.to_string());
        }
    }

    const auto w = w_basis(f, n, k);
    bool w_inside = static_cast<int>(report.basis.size()) == k;
    for (const auto& v : w) w_inside = w_inside && in_span(report.basis, v);
    report.equals_w = w_inside;
    if ((n + k) % 2 == 1 && !report.equals_w) {
        throw Error(Errc::VerificationFailed, "radical differs from W_{n,k} although n + k is odd");
    }
    return report;
}

RectMatrix xi_test_matrix(std::span<const Scalar> x, int k) {
    const int n = static_cast<int>(x.size());
    if (k < 2 || n < k + 1) throw Error(Errc::BadShape, "test matrix needs k >= 2 and n >= k + 1");
    const Field f = x.front().field();
    RectMatrix m(f, n, k);
    for (int i = 1; i <= n; ++i) m(i, 1) = x[static_cast<std::size_t>(i - 1)];
    for (int j = 2; j <= k - 1; ++j) m(j + 1, j) = f.one();
    for (int i = 3; i <= n; ++i) m(i, k) = f.one();
    return m;
}

VerificationReport constant_shift_check(Field f, int n, int k, std::uint64_t samples, std::uint64_t seed) {
    if ((n + k) % 2 == 0 || n < k) {
        throw Error(Errc::HypothesisViolated, "constant shifts need n > k and n + k odd");
    }
    VerificationReport report;
    report.mode = VerificationReport::Mode::Sampled;
    report.samples = samples;
    report.seed = seed;
    Rng rng = Rng::derive(seed, "constant-shift");
    const auto w = w_basis(f, n, k);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const RectMatrix a = random_matrix(rng, f, n, k);
        RectMatrix shift(f, n, k);
        for (const auto& basis : w) shift = shift + random_scalar(rng, f) * basis;
        const Scalar lambda = random_scalar(rng, f);
        const Scalar before = det_subsets(a);
        const Scalar after = det_subsets(a + lambda * shift);
        ++report.evaluations;
        if (before != after) {
            report.passed = false;
            report.detail = "det(A) = " + before.to_string() + ", det(A + lambda W) = " + after.to_string();
            report.witness = a;
            return report;
        }
        if (k >= 2) {
            std::vector<Scalar> x;
            for (int i = 0; i < n; ++i) x.push_back(random_scalar(rng, f));
            const RectMatrix m = xi_test_matrix(x, k);
            const Scalar expected = signed_one(f, k % 2 == 1 ? 1 : -1) * (x[0] - x[1]);
            const Scalar got = det_subsets(m);
            ++report.evaluations;
            if (got != expected) {
                report.passed = false;
                report.detail = "test matrix det = " + got.to_string() + ", expected " + expected.to_string();
                report.witness = m;
                return report;
            }
        }
    }
    return report;
}

}  // namespace cullis
