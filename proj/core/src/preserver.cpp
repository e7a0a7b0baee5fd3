#include "cullis/preserver.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <optional>

#include "cullis/combinatorics.hpp"
#include "cullis/determinant.hpp"
#include "cullis/random.hpp"

namespace cullis {

namespace {

std::string shape(int n, int k) { return std::to_string(n) + "x" + std::to_string(k); }

void require_square(const RectMatrix& m, int size, const char* what) {
    if (m.rows() != size || m.cols() != size) {
        throw Error(Errc::BadShape, std::string(what) + " must be " + shape(size, size) + ", got " +
                                        shape(m.rows(), m.cols()));
    }
}

}  // namespace

VerificationReport check_two_sided(const RectMatrix& a, const RectMatrix& b) {
    const int n = a.rows();
    const int k = b.rows();
    require_square(a, n, "A");
    require_square(b, k, "B");
    require_same_field(a, b);
    if (n < k) throw Error(Errc::BadShape, "two-sided pair needs n >= k, got " + shape(n, k));

    VerificationReport report;
    report.mode = VerificationReport::Mode::Exhaustive;
    const Scalar det_b = det_square(b);
    const Field f = a.field();

    for_each_subset(n, k, [&](std::span<const int> d) {
        if (!report.passed) return;
        ++report.evaluations;
        std::vector<int> cols(d.begin(), d.end());
        RectMatrix minor = submatrix_keep(a, {}, cols);
        const Scalar lhs = det_subsets(minor) * det_b;
        const Scalar rhs = signed_one(f, sgn_subset(d));
        if (lhs == rhs) return;
        report.passed = false;
        report.witness_subset = RowSubset(n, cols);
        report.detail = "det(A(|" + report.witness_subset->to_string() + "]) * det(B) = " + lhs.to_string() +
                        ", expected " + rhs.to_string();
        report.witness = std::move(minor);
    });
    return report;
}

PreserverSpec PreserverSpec::create(RectMatrix a, RectMatrix b, RectMatrix phi) {
    const int n = a.rows();
    const int k = b.rows();
    require_square(a, n, "A");
    require_square(b, k, "B");
    require_same_field(a, b);
    require_same_field(a, phi);
    if (phi.rows() != k || phi.cols() != n * k) {
        throw Error(Errc::BadShape, "phi must be " + shape(k, n * k) + ", got " + shape(phi.rows(), phi.cols()));
    }
    const auto report = check_two_sided(a, b);
    if (!report.passed) throw Error(Errc::ConditionViolated, report.detail);
    return PreserverSpec(std::move(a), std::move(b), std::move(phi));
}

PreserverSpec PreserverSpec::create(RectMatrix a, RectMatrix b) {
    RectMatrix phi(a.field(), b.rows(), a.rows() * b.rows());
    return create(std::move(a), std::move(b), std::move(phi));
}

RectMatrix PreserverSpec::apply(const RectMatrix& x) const {
    if (x.rows() != n() || x.cols() != k()) throw Error(Errc::ShapeMismatch, "input must be " + shape(n(), k()));
    RectMatrix out = a_ * x * b_;
    const RectMatrix row = phi_ * vec(x);
    for (int i = 1; i <= n(); ++i) {
        for (int j = 1; j <= k(); ++j) out(i, j) += row(j, 1);
    }
    return out;
}

LinearOperator broadcast_operator(const RectMatrix& phi, int n, int k) {
    if (phi.rows() != k || phi.cols() != n * k) {
        throw Error(Errc::BadShape, "phi must be " + shape(k, n * k) + ", got " + shape(phi.rows(), phi.cols()));
    }
    RectMatrix m(phi.field(), n * k, n * k);
    for (int c = 1; c <= n * k; ++c) {
        for (int j = 1; j <= k; ++j) {
            for (int i = 1; i <= n; ++i) m(vec_index(n, i, j), c) = phi(j, c);
        }
    }
    return LinearOperator(n, k, std::move(m));
}

LinearOperator spec_to_operator(const PreserverSpec& spec) {
    return LinearOperator::two_sided(spec.a(), spec.b()) + broadcast_operator(spec.phi(), spec.n(), spec.k());
}

RectMatrix row_copy_phi(Field f, int n, int k, int row) {
    if (row < 1 || row > n) throw Error(Errc::IndexOutOfRange, "row " + std::to_string(row));
    RectMatrix phi(f, k, n * k);
    for (int j = 1; j <= k; ++j) phi(j, vec_index(n, row, j)) = f.one();
    return phi;
}

RectMatrix apply_scs(const RectMatrix& x, int i, int j) {
    const int n = x.rows();
    const int k = x.cols();
    if (i < 1 || i > n || j < 1 || j > k) {
        throw Error(Errc::IndexOutOfRange, "SCS_{" + std::to_string(i) + "," + std::to_string(j) + "} on " +
                                               shape(n, k));
    }
    const Field f = x.field();
    const Scalar overall = signed_one(f, (i + 1) % 2 == 0 ? 1 : -1);
    const Scalar first = j == 1 ? overall : -overall;
    RectMatrix out(f, n, k);
    for (int r = 1; r <= n; ++r) {
        const int src = (i - 1 + r - 1) % n + 1;
        for (int c = 1; c <= k; ++c) {
            const int from = c == 1 ? j : (c == j ? 1 : c);
            out(r, c) = (c == 1 ? first : overall) * x(src, from);
        }
    }
    return out;
}

LinearOperator scs(Field f, int n, int k, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > k) throw Error(Errc::IndexOutOfRange, "SCS indices");
    return LinearOperator::from_map(f, n, k, [&](const RectMatrix& x) { return apply_scs(x, i, j); });
}

TwoSidedPair scs_pair(Field f, int n, int k, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > k) throw Error(Errc::IndexOutOfRange, "SCS indices");
    const Scalar overall = signed_one(f, (i + 1) % 2 == 0 ? 1 : -1);
    RectMatrix a(f, n, n);
    for (int r = 1; r <= n; ++r) a(r, (i - 1 + r - 1) % n + 1) = overall;
    RectMatrix b = RectMatrix::identity(f, k);
    if (j != 1) {
        b(1, 1) = f.zero();
        b(j, j) = f.zero();
        b(j, 1) = -f.one();
        b(1, j) = f.one();
    }
    return TwoSidedPair{std::move(a), std::move(b)};
}

VerificationReport verify_preserver(const LinearOperator& t, const VerifyOptions& options) {
    const int n = t.n();
    const int k = t.k();
    const Field f = t.field();
    if (n < k) throw Error(Errc::BadShape, "det_{n,k} needs n >= k, got " + shape(n, k));

    VerificationReport report;
    report.mode = options.mode;

    auto check = [&](const RectMatrix& x) {
        const RectMatrix y = t.apply(x);
        const Scalar before = det_subsets(x);
        const Scalar after = det_subsets(y);
        ++report.evaluations;
        const bool audit = options.audit_every != 0 && report.evaluations % options.audit_every == 1;
        if (audit || before != after) {
            if (det_definition(x) != before || det_definition(y) != after) {
                throw Error(Errc::VerificationFailed, "det_subsets disagrees with det_definition on\n" + x.to_string());
            }
        }
        if (before == after) return true;
        report.passed = false;
        report.detail = "det(X) = " + before.to_string() + ", det(T(X)) = " + after.to_string();
        report.witness = x;
        return false;
    };

    if (options.mode == VerificationReport::Mode::Exhaustive) {
        if (f.is_rational()) throw Error(Errc::BudgetExceeded, "exhaustive verification over Q");
        const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(k);
        std::uint64_t total = 1;
        for (std::size_t c = 0; c < cells; ++c) {
            if (total > options.budget / f.modulus()) {
                throw Error(Errc::BudgetExceeded, "|M_{n,k}| = " + std::to_string(f.modulus()) + "^" +
                                                      std::to_string(cells) + " exceeds budget " +
                                                      std::to_string(options.budget));
            }
            total *= f.modulus();
        }
        std::vector<std::uint32_t> digits(cells, 0);
        RectMatrix x(f, n, k);
        while (true) {
            if (!check(x)) return report;
            std::size_t c = 0;
            for (; c < cells; ++c) {
                if (++digits[c] < f.modulus()) {
                    x.raw(c) = f.from_int(digits[c]);
                    break;
                }
                digits[c] = 0;
                x.raw(c) = f.zero();
            }
            if (c == cells) break;
        }
        return report;
    }

    report.samples = options.samples;
    report.seed = options.seed;
    const double per_draw = static_cast<double>(k) * max_atom_probability(f);
    report.failure_bound = per_draw >= 1.0 ? 1.0 : std::pow(per_draw, static_cast<double>(options.samples));
    Rng rng = Rng::derive(options.seed, "verify-preserver");
    for (std::uint64_t s = 0; s < options.samples; ++s) {
        if (!check(random_matrix(rng, f, n, k))) return report;
    }
    return report;
}

TwoSidedPair recover_two_sided(const LinearOperator& s) {
    const int m = s.n();
    const int k = s.k();
    const Field f = s.field();
    if (s.matrix().is_zero()) throw Error(Errc::ZeroOperator, "the zero operator has no two-sided form");

    auto at = [k](int i, int j) { return static_cast<std::size_t>((i - 1) * k + (j - 1)); };
    std::vector<RectMatrix> images;
    images.reserve(static_cast<std::size_t>(m * k));
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= k; ++j) {
            images.push_back(s.image_of_basis(i, j));
            if (rank(images.back()) > 1) {
                throw Error(Errc::NotTwoSided, "S(E_{" + std::to_string(i) + "," + std::to_string(j) +
                                                   "}) has rank > 1");
            }
        }
    }

    // Each nonzero S(E_ij) = c_ij a_i b_j for fixed representatives a_i, b_j.
    std::vector<std::optional<RectMatrix>> col_rep(static_cast<std::size_t>(m + 1));
    std::vector<std::optional<RectMatrix>> row_rep(static_cast<std::size_t>(k + 1));
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= k; ++j) {
            const RectMatrix& z = images[at(i, j)];
            if (z.is_zero()) continue;
            for (int c = 1; c <= k && !col_rep[i]; ++c) {
                RectMatrix column = z.col(c);
                if (!column.is_zero()) col_rep[i] = std::move(column);
            }
            for (int r = 1; r <= m && !row_rep[j]; ++r) {
                if (!z.row_is_zero(r)) row_rep[j] = z.row(r);
            }
        }
    }
    auto coefficient = [&](int i, int j) {
        const RectMatrix& z = images[at(i, j)];
        const RectMatrix& a = *col_rep[i];
        const RectMatrix& b = *row_rep[j];
        for (int r = 1; r <= m; ++r) {
            if (a(r, 1).is_zero()) continue;
            for (int c = 1; c <= k; ++c) {
                if (!b(1, c).is_zero()) return z(r, c) / (a(r, 1) * b(1, c));
            }
        }
        throw Error(Errc::NotTwoSided, "degenerate rank-one factor");
    };

    // Split c_ij = alpha_i beta_j along the bipartite graph of nonzero images.
    std::vector<std::optional<Scalar>> alpha(static_cast<std::size_t>(m + 1));
    std::vector<std::optional<Scalar>> beta(static_cast<std::size_t>(k + 1));
    for (int root = 1; root <= m; ++root) {
        if (!col_rep[root] || alpha[root]) continue;
        alpha[root] = f.one();
        std::deque<std::pair<bool, int>> queue{{true, root}};
        while (!queue.empty()) {
            const auto [is_row, idx] = queue.front();
            queue.pop_front();
            if (is_row) {
                for (int j = 1; j <= k; ++j) {
                    if (beta[j] || images[at(idx, j)].is_zero()) continue;
                    beta[j] = coefficient(idx, j) / *alpha[idx];
                    queue.emplace_back(false, j);
                }
            } else {
                for (int i = 1; i <= m; ++i) {
                    if (alpha[i] || images[at(i, idx)].is_zero()) continue;
                    alpha[i] = coefficient(i, idx) / *beta[idx];
                    queue.emplace_back(true, i);
                }
            }
        }
    }

    RectMatrix a_prime(f, m, m);
    RectMatrix b_prime(f, k, k);
    for (int i = 1; i <= m; ++i) {
        if (!alpha[i]) continue;
        for (int r = 1; r <= m; ++r) a_prime(r, i) = *alpha[i] * (*col_rep[i])(r, 1);
    }
    for (int j = 1; j <= k; ++j) {
        if (!beta[j]) continue;
        for (int c = 1; c <= k; ++c) b_prime(j, c) = *beta[j] * (*row_rep[j])(1, c);
    }

    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= k; ++j) {
            if (!(a_prime.col(i) * b_prime.row(j) == images[at(i, j)])) {
                throw Error(Errc::NotTwoSided, "S(E_{" + std::to_string(i) + "," + std::to_string(j) +
                                                   "}) is not A' E_ij B'");
            }
        }
    }

    for (int c = 1; c <= m; ++c) {
        for (int r = 1; r <= m; ++r) {
            if (a_prime(r, c).is_zero()) continue;
            const Scalar pivot = a_prime(r, c);
            return TwoSidedPair{pivot.inv() * a_prime, pivot * b_prime};
        }
    }
    throw Error(Errc::ZeroOperator, "recovered A' vanishes");
}

void require_decomposition_hypotheses(Field f, int n, int k) {
    std::string why;
    if (k < 4) why = "k >= 4";
    else if (n < k + 2) why = "n >= k + 2";
    else if ((n + k) % 2 == 0) why = "n + k odd";
    else if (!f.larger_than(static_cast<std::uint64_t>(k))) why = "|F| > k";
    if (!why.empty()) {
        throw Error(Errc::HypothesisViolated, "decomposition needs " + why + " (n=" + std::to_string(n) +
                                                  ", k=" + std::to_string(k) + ", F=" + f.name() + ")");
    }
}

PreserverSpec decompose(const LinearOperator& t, const DecomposeOptions& options) {
    const int n = t.n();
    const int k = t.k();
    const Field f = t.field();
    require_decomposition_hypotheses(f, n, k);

    VerifyOptions verify;
    verify.samples = options.samples;
    verify.seed = options.seed;
    const auto report = verify_preserver(t, verify);
    if (!report.passed) {
        throw Error(Errc::NotAPreserver, report.detail + " at X =\n" + report.witness->to_string());
    }

    RectMatrix phi(f, k, n * k);
    for (int j = 1; j <= k; ++j) {
        for (int i = 1; i <= n; ++i) {
            const RectMatrix image = t.image_of_basis(i, j);
            for (int s = 1; s <= k; ++s) phi(s, vec_index(n, i, j)) = image(n, s);
        }
    }
    const LinearOperator reduced = t - broadcast_operator(phi, n, k);
    const TwoSidedPair prime = recover_two_sided(descend_operator(reduced));
    TwoSidedPair lifted = two_sided_lift(prime.a, prime.b);

    std::optional<PreserverSpec> spec;
    try {
        spec = PreserverSpec::create(std::move(lifted.a), std::move(lifted.b), std::move(phi));
    } catch (const Error& e) {
        throw Error(Errc::VerificationFailed, std::string("recovered pair is not two-sided: ") + e.what());
    }
    if (!(spec_to_operator(*spec) == t)) {
        throw Error(Errc::VerificationFailed, "A X B + phi(X) does not reproduce T");
    }
    return *spec;
}

}  // namespace cullis
