#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "cullis/matrix.hpp"

namespace cullis {

enum class DetAlgorithm { Definition, Subsets, Laplace };

DetAlgorithm parse_det_algorithm(std::string_view name);
std::string_view to_string(DetAlgorithm algo) noexcept;

/// Signed sum over all injections sigma: [k] -> [n] of
/// sgn_{n,k}(sigma) * x_{sigma(1),1} * ... * x_{sigma(k),k}.
/// Costs n!/(n-k)! products; intended as the reference oracle.
Scalar det_definition(const RectMatrix& x);

/// Sum over k-subsets c of the rows of sgn(c) * det(X[c|]). Default algorithm.
Scalar det_subsets(const RectMatrix& x);

/// Expansion along column `column`:
///   sum_i (-1)^{i+j} x_{ij} det_{(n-1),(k-1)}(X(i|j)),
/// recursing along the first column of each minor. For k = 1 this is the
/// alternating sum x_11 - x_21 + x_31 - ..., which is what the definition
/// gives when every injection is a single row.
Scalar det_laplace(const RectMatrix& x, int column = 1);

/// Ordinary determinant of a square matrix by Gaussian elimination.
Scalar det_square(const RectMatrix& x);

Scalar det(const RectMatrix& x, DetAlgorithm algo = DetAlgorithm::Subsets);

/// det_{n,k}(e_{r_1} | ... | e_{r_k}) for standard basis columns of F^n:
/// zero when a row repeats, otherwise the sign of the injection (r_1, ..., r_k),
/// since exactly one term of the defining sum survives.
Scalar det_unit_columns(Field f, int n, std::span<const int> rows);

/// Coefficients a_0, ..., a_k of det_{n,k}(A + lambda B) as a polynomial in lambda.
class LambdaPoly {
public:
    explicit LambdaPoly(std::vector<Scalar> coeffs);

    int degree_bound() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Scalar& operator[](int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
    const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
    Scalar operator()(const Scalar& lambda) const;

    friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

private:
    std::vector<Scalar> coeffs_;
};

/// a_d = sum over d-subsets S of the columns of det_{n,k}(A with the columns in
/// S taken from B). Computed directly, so it is valid even when |F| <= k.
LambdaPoly lambda_expand(const RectMatrix& a, const RectMatrix& b);

/// A with the columns listed in `cols` (1-based) replaced by those of B.
RectMatrix mix_columns(const RectMatrix& a, const RectMatrix& b, std::span<const int> cols);

}  // namespace cullis
