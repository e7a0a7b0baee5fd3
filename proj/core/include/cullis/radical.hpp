#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cullis/matrix.hpp"
#include "cullis/report.hpp"

namespace cullis {

/// Basis of W_{n,k}, the matrices whose rows all coincide: for each column j,
/// the matrix with ones in column j.
std::vector<RectMatrix> w_basis(Field f, int n, int k);

/// All rows of `y` are equal.
bool in_w(const RectMatrix& y);

/// A mixed determinant: Y supplies the columns listed in `y_slots`, standard
/// basis vectors e_r fill the others (basis_rows[j-1] = r, or 0 for Y slots).
struct MixedWitness {
    std::vector<int> y_slots;
    std::vector<int> basis_rows;
    Scalar value;
    RectMatrix matrix;
};

/// First nonzero mixed determinant with exactly `degree` columns from Y, or
/// nothing. These are the terms whose sums over X give the coefficient of
/// lambda^degree in det_{n,k}(X + lambda Y), so all of them vanish iff that
/// coefficient is identically zero as a polynomial in X.
std::optional<MixedWitness> mixed_term_witness(const RectMatrix& y, int degree);

struct MembershipResult {
    bool member = true;
    std::optional<MixedWitness> witness;
    std::uint64_t determinant_calls = 0;
};

/// Y is in the radical iff every mixed determinant with at least one Y column
/// vanishes: sum_{s=1..k} C(k, s) n^{k-s} determinant evaluations. By
/// multilinearity this is exact over every field, including |F| <= k.
MembershipResult radical_membership(const RectMatrix& y);

struct RadicalReport {
    int n = 0;
    int k = 0;
    Field field = Field::rationals();
    std::vector<RectMatrix> basis;
    std::uint64_t equations = 0;  ///< equations generated before the rank saturated
    bool equals_w = false;
};

/// Basis of rad(det_{n,k}) from the linear conditions that make a_1(A, Y)
/// vanish identically in A: every degree-1 mixed determinant (Y in one slot,
/// standard basis columns elsewhere) is zero. Over |F| > k that kernel is the
/// radical. Every basis element is re-checked with radical_membership, and for
/// n + k odd the span is compared with W.
///
/// Throws FieldTooSmall when |F| <= k and VerificationFailed if an audit fails.
RadicalReport radical_basis(Field f, int n, int k);

/// The matrix with first column x, a single 1 in row j + 1 of column j for
/// 2 <= j <= k - 1, and ones in rows 3..n of column k. For n + k odd its
/// det_{n,k} is (-1)^{k-1} (x_1 - x_2). Needs k >= 2 and n >= k + 1.
RectMatrix xi_test_matrix(std::span<const Scalar> x, int k);

/// Random checks of det(A + lambda W) = det(A) for W in W_{n,k} and of the
/// closed form for xi_test_matrix. Needs n + k odd (HypothesisViolated).
VerificationReport constant_shift_check(Field f, int n, int k, std::uint64_t samples, std::uint64_t seed);

/// Does `v` lie in the span of `basis` (all of the same shape)?
bool in_span(const std::vector<RectMatrix>& basis, const RectMatrix& v);

}  // namespace cullis
