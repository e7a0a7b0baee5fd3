#pragma once

#include "cullis/matrix.hpp"

namespace cullis {

/// Row i of the result is X[i|) - X[n|), for i < n. Needs n >= 2.
///
/// For n + k odd, det_{(n-1),k}(l_minus(X)) = det_{n,k}(X).
RectMatrix l_minus(const RectMatrix& x);

/// Appends a zero last row; det_{n,k}(l_plus(Y)) = det_{(n-1),k}(Y).
RectMatrix l_plus(const RectMatrix& y);

/// M^- = (I_{n-1} | -1) in M_{(n-1),n}, so l_minus(X) = M^- X.
RectMatrix m_minus(Field f, int n);
/// M^+ = (I_{n-1} over a zero row) in M_{n,(n-1)}, so l_plus(Y) = M^+ Y.
RectMatrix m_plus(Field f, int n);

/// Membership in M^0_{n,k}: the last row vanishes.
bool has_zero_last_row(const RectMatrix& x);

/// S = L^- o T o L^+, an operator on M_{(n-1),k}.
LinearOperator descend_operator(const LinearOperator& t);

/// T = L^+ o S o L^-, an operator on M_{(n+1),k} whose image lies in M^0.
///
/// The right-hand factor is L^-, not L^+: S acts on M_{n,k}, so it has to be
/// fed L^-(X) for X in M_{(n+1),k}. If S preserves det_{n,k} and n + 1 + k is
/// odd, T preserves det_{(n+1),k}.
LinearOperator lift_operator(const LinearOperator& s);

struct TwoSidedPair {
    RectMatrix a;
    RectMatrix b;
};

/// (A', B') on M_{(n-1),k} -> (M^+ A' M^-, B') on M_{n,k}.
TwoSidedPair two_sided_lift(const RectMatrix& a_prime, const RectMatrix& b_prime);

}  // namespace cullis
