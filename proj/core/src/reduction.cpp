#include "cullis/reduction.hpp"

namespace cullis {

RectMatrix l_minus(const RectMatrix& x) {
    const int n = x.rows();
    if (n < 2) throw Error(Errc::BadShape, "L^- needs at least two rows");
    RectMatrix out(x.field(), n - 1, x.cols());
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j <= x.cols(); ++j) out(i, j) = x(i, j) - x(n, j);
    }
    return out;
}

RectMatrix l_plus(const RectMatrix& y) { return concat_rows(y, RectMatrix::zero(y.field(), 1, y.cols())); }

RectMatrix m_minus(Field f, int n) {
    if (n < 2) throw Error(Errc::BadShape, "M^- needs n >= 2");
    RectMatrix m(f, n - 1, n);
    for (int i = 1; i < n; ++i) {
        m(i, i) = f.one();
        m(i, n) = -f.one();
    }
    return m;
}

RectMatrix m_plus(Field f, int n) {
    if (n < 2) throw Error(Errc::BadShape, "M^+ needs n >= 2");
    RectMatrix m(f, n, n - 1);
    for (int i = 1; i < n; ++i) m(i, i) = f.one();
    return m;
}

bool has_zero_last_row(const RectMatrix& x) { return x.row_is_zero(x.rows()); }

LinearOperator descend_operator(const LinearOperator& t) {
    const int n = t.n();
    const int k = t.k();
    if (n - 1 < k || n < 2) throw Error(Errc::BadShape, "descending needs n - 1 >= k");
    const Field f = t.field();
    const RectMatrix down = left_multiplication_matrix(m_minus(f, n), k);
    const RectMatrix up = left_multiplication_matrix(m_plus(f, n), k);
    return LinearOperator(n - 1, k, down * t.matrix() * up);
}

LinearOperator lift_operator(const LinearOperator& s) {
    const int n = s.n() + 1;
    const int k = s.k();
    if (s.n() < k) throw Error(Errc::BadShape, "lifting needs n >= k");
    const Field f = s.field();
    const RectMatrix up = left_multiplication_matrix(m_plus(f, n), k);
    const RectMatrix down = left_multiplication_matrix(m_minus(f, n), k);
    return LinearOperator(n, k, up * s.matrix() * down);
}

TwoSidedPair two_sided_lift(const RectMatrix& a_prime, const RectMatrix& b_prime) {
    if (a_prime.rows() != a_prime.cols() || b_prime.rows() != b_prime.cols()) {
        throw Error(Errc::BadShape, "A' and B' must be square");
    }
    require_same_field(a_prime, b_prime);
    const int n = a_prime.rows() + 1;
    const Field f = a_prime.field();
    return TwoSidedPair{m_plus(f, n) * a_prime * m_minus(f, n), b_prime};
}

}  // namespace cullis
