#include "cullis/matrix.hpp"

#include <algorithm>

#include "cullis/combinatorics.hpp"

namespace cullis {

namespace {

std::string shape_of(const RectMatrix& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void check_indices(const std::vector<int>& idx, int bound, const char* what) {
    for (int i : idx) {
        if (i < 1 || i > bound) {
            throw Error(Errc::IndexOutOfRange,
                        std::string(what) + " index " + std::to_string(i) + " outside [1," + std::to_string(bound) + "]");
        }
    }
}

std::vector<int> all_indices(int bound) {
    std::vector<int> out(static_cast<std::size_t>(bound));
    for (int i = 0; i < bound; ++i) out[static_cast<std::size_t>(i)] = i + 1;
    return out;
}

}  // namespace

RectMatrix::RectMatrix(Field f, int rows, int cols) : field_(f), rows_(rows), cols_(cols), data_() {
    if (rows < 1 || cols < 1) {
        throw Error(Errc::BadShape, "matrix shape must be positive, got " + std::to_string(rows) + "x" +
                                        std::to_string(cols));
    }
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), f.zero());
}

RectMatrix RectMatrix::identity(Field f, int n) {
    RectMatrix m(f, n, n);
    for (int i = 1; i <= n; ++i) m(i, i) = f.one();
    return m;
}

RectMatrix RectMatrix::basis_E(Field f, int rows, int cols, int i, int j) {
    RectMatrix m(f, rows, cols);
    m.set(i, j, f.one());
    return m;
}

RectMatrix RectMatrix::from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty() || rows.front().empty()) throw Error(Errc::BadShape, "empty literal");
    RectMatrix m(f, static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 1; i <= m.rows(); ++i) {
        const auto& r = rows[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(r.size()) != m.cols()) throw Error(Errc::ShapeMismatch, "ragged literal");
        for (int j = 1; j <= m.cols(); ++j) m(i, j) = f.from_int(r[static_cast<std::size_t>(j - 1)]);
    }
    return m;
}

RectMatrix RectMatrix::column(Field f, const std::vector<std::int64_t>& entries) {
    RectMatrix m(f, static_cast<int>(entries.size()), 1);
    for (int i = 1; i <= m.rows(); ++i) m(i, 1) = f.from_int(entries[static_cast<std::size_t>(i - 1)]);
    return m;
}

std::size_t RectMatrix::offset(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
        throw Error(Errc::IndexOutOfRange, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                               ") outside " + shape_of(*this));
    }
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j - 1);
}

void RectMatrix::set(int i, int j, Scalar v) {
    if (!(v.field() == field_)) throw Error(Errc::MixedFields, "entry from " + v.field().name() + " in " + field_.name());
    data_[offset(i, j)] = std::move(v);
}

bool RectMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool RectMatrix::row_is_zero(int i) const {
    for (int j = 1; j <= cols_; ++j) {
        if (!(*this)(i, j).is_zero()) return false;
    }
    return true;
}

RectMatrix RectMatrix::row(int i) const { return submatrix_keep(*this, {i}, {}); }
RectMatrix RectMatrix::col(int j) const { return submatrix_keep(*this, {}, {j}); }

void require_same_field(const RectMatrix& a, const RectMatrix& b) {
    if (!(a.field() == b.field())) {
        throw Error(Errc::MixedFields, "matrices over " + a.field().name() + " and " + b.field().name());
    }
}

void require_same_shape(const RectMatrix& a, const RectMatrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(Errc::ShapeMismatch, shape_of(a) + " vs " + shape_of(b));
    }
}

bool operator==(const RectMatrix& a, const RectMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RectMatrix operator+(const RectMatrix& a, const RectMatrix& b) {
    require_same_shape(a, b);
    RectMatrix r = a;
    for (std::size_t t = 0; t < r.data_.size(); ++t) r.data_[t] += b.data_[t];
    return r;
}

RectMatrix operator-(const RectMatrix& a, const RectMatrix& b) {
    require_same_shape(a, b);
    RectMatrix r = a;
    for (std::size_t t = 0; t < r.data_.size(); ++t) r.data_[t] -= b.data_[t];
    return r;
}

RectMatrix operator-(const RectMatrix& a) {
    RectMatrix r = a;
    for (auto& s : r.data_) s = -s;
    return r;
}

RectMatrix operator*(const RectMatrix& a, const RectMatrix& b) {
    require_same_field(a, b);
    if (a.cols_ != b.rows_) throw Error(Errc::ShapeMismatch, "product of " + shape_of(a) + " and " + shape_of(b));
    RectMatrix r(a.field_, a.rows_, b.cols_);
    const auto n = static_cast<std::size_t>(a.rows_), m = static_cast<std::size_t>(a.cols_),
               p = static_cast<std::size_t>(b.cols_);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < m; ++t) {
            const Scalar& lhs = a.data_[i * m + t];
            if (lhs.is_zero()) continue;
            for (std::size_t j = 0; j < p; ++j) {
                const Scalar& rhs = b.data_[t * p + j];
                if (!rhs.is_zero()) r.data_[i * p + j] += lhs * rhs;
            }
        }
    }
    return r;
}

RectMatrix operator*(const Scalar& c, const RectMatrix& a) {
    if (!(c.field() == a.field_)) throw Error(Errc::MixedFields, "scalar from " + c.field().name());
    RectMatrix r = a;
    for (auto& s : r.data_) s = c * s;
    return r;
}

std::string RectMatrix::to_string() const {
    std::string out;
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) {
            if (j > 1) out += ' ';
            out += (*this)(i, j).to_string();
        }
        out += '\n';
    }
    return out;
}

RectMatrix submatrix_keep(const RectMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    check_indices(rows, a.rows(), "row");
    check_indices(cols, a.cols(), "column");
    const auto r = rows.empty() ? all_indices(a.rows()) : rows;
    const auto c = cols.empty() ? all_indices(a.cols()) : cols;
    RectMatrix out(a.field(), static_cast<int>(r.size()), static_cast<int>(c.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            out(static_cast<int>(i + 1), static_cast<int>(j + 1)) = a(r[i], c[j]);
        }
    }
    return out;
}

RectMatrix submatrix_strike(const RectMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    check_indices(rows, a.rows(), "row");
    check_indices(cols, a.cols(), "column");
    const auto r = complement(a.rows(), rows);
    const auto c = complement(a.cols(), cols);
    if (r.empty() || c.empty()) throw Error(Errc::EmptyResult, "striking removes every row or column");
    return submatrix_keep(a, r, c);
}

RectMatrix concat_cols(const RectMatrix& a, const RectMatrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) throw Error(Errc::ShapeMismatch, "A|B with " + shape_of(a) + " and " + shape_of(b));
    RectMatrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (int i = 1; i <= a.rows(); ++i) {
        for (int j = 1; j <= a.cols(); ++j) out(i, j) = a(i, j);
        for (int j = 1; j <= b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

RectMatrix concat_rows(const RectMatrix& a, const RectMatrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) throw Error(Errc::ShapeMismatch, "stacking " + shape_of(a) + " on " + shape_of(b));
    RectMatrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (int j = 1; j <= a.cols(); ++j) {
        for (int i = 1; i <= a.rows(); ++i) out(i, j) = a(i, j);
        for (int i = 1; i <= b.rows(); ++i) out(a.rows() + i, j) = b(i, j);
    }
    return out;
}

RectMatrix transpose(const RectMatrix& a) {
    RectMatrix out(a.field(), a.cols(), a.rows());
    for (int i = 1; i <= a.rows(); ++i) {
        for (int j = 1; j <= a.cols(); ++j) out(j, i) = a(i, j);
    }
    return out;
}

RectMatrix kronecker(const RectMatrix& a, const RectMatrix& b) {
    require_same_field(a, b);
    RectMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 1; i <= a.rows(); ++i) {
        for (int j = 1; j <= a.cols(); ++j) {
            const Scalar& aij = a(i, j);
            if (aij.is_zero()) continue;
            for (int r = 1; r <= b.rows(); ++r) {
                for (int c = 1; c <= b.cols(); ++c) {
                    out((i - 1) * b.rows() + r, (j - 1) * b.cols() + c) = aij * b(r, c);
                }
            }
        }
    }
    return out;
}

RectMatrix with_column(const RectMatrix& a, int j, const RectMatrix& c) {
    require_same_field(a, c);
    if (c.cols() != 1 || c.rows() != a.rows()) throw Error(Errc::ShapeMismatch, "replacement column has shape " + shape_of(c));
    if (j < 1 || j > a.cols()) throw Error(Errc::IndexOutOfRange, "column " + std::to_string(j));
    RectMatrix out = a;
    for (int i = 1; i <= a.rows(); ++i) out(i, j) = c(i, 1);
    return out;
}

RectMatrix vec(const RectMatrix& x) {
    RectMatrix v(x.field(), x.rows() * x.cols(), 1);
    for (int j = 1; j <= x.cols(); ++j) {
        for (int i = 1; i <= x.rows(); ++i) v(vec_index(x.rows(), i, j), 1) = x(i, j);
    }
    return v;
}

RectMatrix unvec(const RectMatrix& v, int n, int k) {
    if (v.cols() != 1 || v.rows() != n * k) {
        throw Error(Errc::ShapeMismatch, "cannot unvec " + shape_of(v) + " into " + std::to_string(n) + "x" +
                                             std::to_string(k));
    }
    RectMatrix x(v.field(), n, k);
    for (int j = 1; j <= k; ++j) {
        for (int i = 1; i <= n; ++i) x(i, j) = v(vec_index(n, i, j), 1);
    }
    return x;
}

RectMatrix left_multiplication_matrix(const RectMatrix& m, int k) {
    return kronecker(RectMatrix::identity(m.field(), k), m);
}

Echelon row_reduce(const RectMatrix& a) {
    RectMatrix r = a;
    std::vector<int> pivots;
    int lead_row = 1;
    for (int col = 1; col <= r.cols() && lead_row <= r.rows(); ++col) {
        int pivot = 0;
        for (int i = lead_row; i <= r.rows(); ++i) {
            if (!r(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == 0) continue;
        if (pivot != lead_row) {
            for (int j = 1; j <= r.cols(); ++j) std::swap(r(pivot, j), r(lead_row, j));
        }
        const Scalar inv = r(lead_row, col).inv();
        for (int j = col; j <= r.cols(); ++j) r(lead_row, j) = r(lead_row, j) * inv;
        for (int i = 1; i <= r.rows(); ++i) {
            if (i == lead_row || r(i, col).is_zero()) continue;
            const Scalar factor = r(i, col);
            for (int j = col; j <= r.cols(); ++j) r(i, j) -= factor * r(lead_row, j);
        }
        pivots.push_back(col);
        ++lead_row;
    }
    return Echelon{std::move(r), std::move(pivots)};
}

int rank(const RectMatrix& a) { return static_cast<int>(row_reduce(a).pivot_cols.size()); }

std::vector<RectMatrix> kernel_basis(const RectMatrix& a) {
    const Echelon e = row_reduce(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()) + 1, false);
    for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<RectMatrix> basis;
    for (int free = 1; free <= a.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        RectMatrix v(a.field(), a.cols(), 1);
        v(free, 1) = a.field().one();
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
            v(e.pivot_cols[r], 1) = -e.reduced(static_cast<int>(r + 1), free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RectMatrix inverse(const RectMatrix& a) {
    if (a.rows() != a.cols()) throw Error(Errc::BadShape, "inverse of non-square " + shape_of(a));
    const int n = a.rows();
    const Echelon e = row_reduce(concat_cols(a, RectMatrix::identity(a.field(), n)));
    if (static_cast<int>(e.pivot_cols.size()) < n || e.pivot_cols[static_cast<std::size_t>(n - 1)] != n) {
        throw Error(Errc::ConditionViolated, "matrix is singular");
    }
    std::vector<int> right(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) right[static_cast<std::size_t>(j)] = n + j + 1;
    return submatrix_keep(e.reduced, {}, right);
}

LinearOperator::LinearOperator(int n, int k, RectMatrix m) : n_(n), k_(k), m_(std::move(m)) {
    if (n < 1 || k < 1) throw Error(Errc::BadShape, "operand shape must be positive");
    if (m_.rows() != n * k || m_.cols() != n * k) {
        throw Error(Errc::ShapeMismatch, "operator on " + std::to_string(n) + "x" + std::to_string(k) +
                                             " matrices needs a square matrix of size " + std::to_string(n * k));
    }
}

LinearOperator LinearOperator::identity(Field f, int n, int k) {
    return LinearOperator(n, k, RectMatrix::identity(f, n * k));
}

LinearOperator LinearOperator::from_map(Field f, int n, int k,
                                        const std::function<RectMatrix(const RectMatrix&)>& map) {
    RectMatrix m(f, n * k, n * k);
    for (int j = 1; j <= k; ++j) {
        for (int i = 1; i <= n; ++i) {
            const RectMatrix image = map(RectMatrix::basis_E(f, n, k, i, j));
            if (image.rows() != n || image.cols() != k || !(image.field() == f)) {
                throw Error(Errc::ShapeMismatch, "map does not land in M_{n,k}");
            }
            const int c = vec_index(n, i, j);
            for (int jj = 1; jj <= k; ++jj) {
                for (int ii = 1; ii <= n; ++ii) m(vec_index(n, ii, jj), c) = image(ii, jj);
            }
        }
    }
    return LinearOperator(n, k, std::move(m));
}

LinearOperator LinearOperator::two_sided(const RectMatrix& a, const RectMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols()) throw Error(Errc::BadShape, "A and B must be square");
    return LinearOperator(a.rows(), b.rows(), kronecker(transpose(b), a));
}

RectMatrix LinearOperator::apply(const RectMatrix& x) const {
    if (x.rows() != n_ || x.cols() != k_) {
        throw Error(Errc::ShapeMismatch, "operator on " + std::to_string(n_) + "x" + std::to_string(k_) +
                                             " applied to " + shape_of(x));
    }
    return unvec(m_ * vec(x), n_, k_);
}

RectMatrix LinearOperator::image_of_basis(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > k_) throw Error(Errc::IndexOutOfRange, "basis index");
    return unvec(m_.col(vec_index(n_, i, j)), n_, k_);
}

std::vector<RectMatrix> LinearOperator::kernel() const {
    std::vector<RectMatrix> out;
    for (const auto& v : kernel_basis(m_)) out.push_back(unvec(v, n_, k_));
    return out;
}

bool LinearOperator::is_invertible() const { return rank(m_) == n_ * k_; }

bool operator==(const LinearOperator& a, const LinearOperator& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.m_ == b.m_;
}

LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
    if (a.n_ != b.n_ || a.k_ != b.k_) throw Error(Errc::ShapeMismatch, "operators on different spaces");
    return LinearOperator(a.n_, a.k_, a.m_ + b.m_);
}

LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
    if (a.n_ != b.n_ || a.k_ != b.k_) throw Error(Errc::ShapeMismatch, "operators on different spaces");
    return LinearOperator(a.n_, a.k_, a.m_ - b.m_);
}

LinearOperator compose(const LinearOperator& t1, const LinearOperator& t2) {
    if (t1.n() != t2.n() || t1.k() != t2.k()) throw Error(Errc::ShapeMismatch, "operators on different spaces");
    return LinearOperator(t1.n(), t1.k(), t1.matrix() * t2.matrix());
}

LinearOperator inverse(const LinearOperator& t) { return LinearOperator(t.n(), t.k(), inverse(t.matrix())); }

}  // namespace cullis
