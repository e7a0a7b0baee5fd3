#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cullis/field.hpp"

namespace cullis {

/// Dense rows x cols matrix over a single field. Every index in the public
/// interface is 1-based.
class RectMatrix {
public:
    RectMatrix(Field f, int rows, int cols);

    static RectMatrix zero(Field f, int rows, int cols) { return RectMatrix(f, rows, cols); }
    static RectMatrix identity(Field f, int n);
    /// E_{ij} in M_{rows, cols}.
    static RectMatrix basis_E(Field f, int rows, int cols, int i, int j);
    /// Integer literal rows, e.g. `from_ints(f, {{1, 2}, {3, 4}})`.
    static RectMatrix from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows);
    /// Column vector (c_1, ..., c_m)^t.
    static RectMatrix column(Field f, const std::vector<std::int64_t>& entries);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    Field field() const noexcept { return field_; }

    const Scalar& operator()(int i, int j) const { return data_[offset(i, j)]; }
    Scalar& operator()(int i, int j) { return data_[offset(i, j)]; }
    void set(int i, int j, Scalar v);

    /// Unchecked 0-based row-major access for inner loops.
    const Scalar& raw(std::size_t idx) const noexcept { return data_[idx]; }
    Scalar& raw(std::size_t idx) noexcept { return data_[idx]; }

    bool is_zero() const noexcept;
    bool row_is_zero(int i) const;
    RectMatrix row(int i) const;
    RectMatrix col(int j) const;

    friend bool operator==(const RectMatrix& a, const RectMatrix& b);
    friend RectMatrix operator+(const RectMatrix& a, const RectMatrix& b);
    friend RectMatrix operator-(const RectMatrix& a, const RectMatrix& b);
    friend RectMatrix operator-(const RectMatrix& a);
    friend RectMatrix operator*(const RectMatrix& a, const RectMatrix& b);
    friend RectMatrix operator*(const Scalar& c, const RectMatrix& a);

    /// Rows separated by newlines, entries by single spaces (canonical scalars).
    std::string to_string() const;

private:
    std::size_t offset(int i, int j) const;

    Field field_;
    int rows_;
    int cols_;
    std::vector<Scalar> data_;
};

void require_same_field(const RectMatrix& a, const RectMatrix& b);
void require_same_shape(const RectMatrix& a, const RectMatrix& b);

/// A[J1|J2]: keep the listed rows and columns; an empty list keeps everything.
RectMatrix submatrix_keep(const RectMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols);
/// A(J1|J2): strike the listed rows and columns.
RectMatrix submatrix_strike(const RectMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols);

/// A|B.
RectMatrix concat_cols(const RectMatrix& a, const RectMatrix& b);
/// A stacked on top of B.
RectMatrix concat_rows(const RectMatrix& a, const RectMatrix& b);
RectMatrix transpose(const RectMatrix& a);
RectMatrix kronecker(const RectMatrix& a, const RectMatrix& b);
/// Replace column j of `a` by the single column `c`.
RectMatrix with_column(const RectMatrix& a, int j, const RectMatrix& c);

/// Column-major vectorisation (x_11, ..., x_n1, x_12, ..., x_nk)^t.
RectMatrix vec(const RectMatrix& x);
RectMatrix unvec(const RectMatrix& v, int n, int k);
/// Position of x_ij inside vec(X), 1-based.
inline int vec_index(int n, int i, int j) noexcept { return (j - 1) * n + i; }

/// Matrix of X -> M X on n x k matrices (n = M.cols()), i.e. I_k (x) M.
RectMatrix left_multiplication_matrix(const RectMatrix& m, int k);

struct Echelon {
    RectMatrix reduced;           ///< reduced row echelon form
    std::vector<int> pivot_cols;  ///< 1-based pivot columns, increasing
};
Echelon row_reduce(const RectMatrix& a);
int rank(const RectMatrix& a);
/// Basis of {v : A v = 0}, one column vector per element.
std::vector<RectMatrix> kernel_basis(const RectMatrix& a);
/// Throws ConditionViolated when `a` is singular.
RectMatrix inverse(const RectMatrix& a);

/// Linear map on M_{n,k}(F), stored as the (nk) x (nk) matrix acting on vec(X).
class LinearOperator {
public:
    LinearOperator(int n, int k, RectMatrix m);

    static LinearOperator identity(Field f, int n, int k);
    /// Builds the operator column by column from the images of every E_{ij}.
    static LinearOperator from_map(Field f, int n, int k, const std::function<RectMatrix(const RectMatrix&)>& map);
    /// X -> A X B, whose matrix is B^t (x) A.
    static LinearOperator two_sided(const RectMatrix& a, const RectMatrix& b);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    Field field() const noexcept { return m_.field(); }
    const RectMatrix& matrix() const noexcept { return m_; }

    RectMatrix apply(const RectMatrix& x) const;
    /// Image of E_{ij} without forming the basis matrix.
    RectMatrix image_of_basis(int i, int j) const;
    /// Ker T as n x k matrices.
    std::vector<RectMatrix> kernel() const;
    bool is_invertible() const;

    friend bool operator==(const LinearOperator& a, const LinearOperator& b);
    friend LinearOperator operator+(const LinearOperator& a, const LinearOperator& b);
    friend LinearOperator operator-(const LinearOperator& a, const LinearOperator& b);

private:
    int n_;
    int k_;
    RectMatrix m_;
};

/// (t1 o t2)(X) = t1(t2(X)).
LinearOperator compose(const LinearOperator& t1, const LinearOperator& t2);
LinearOperator inverse(const LinearOperator& t);

}  // namespace cullis
