#pragma once

#include <cstdint>

#include "cullis/matrix.hpp"
#include "cullis/reduction.hpp"
#include "cullis/report.hpp"

namespace cullis {

/// Checks det_{n,k}(A(|d]) * det_k(B) = sgn(d) for every k-subset d of [n].
/// A is n x n, B is k x k. A failing report names the first offending d in
/// lexicographic order and carries A(|d] as its witness matrix.
VerificationReport check_two_sided(const RectMatrix& a, const RectMatrix& b);

/// X -> A X B + phi(X), where phi: M_{n,k} -> F^k is stored as a k x nk
/// matrix acting on vec(X) and phi(X) is broadcast to every row.
///
/// Only pairs (A, B) passing check_two_sided can be wrapped; any phi is allowed.
class PreserverSpec {
public:
    /// Throws ConditionViolated when (A, B) is not two-sided.
    static PreserverSpec create(RectMatrix a, RectMatrix b, RectMatrix phi);
    static PreserverSpec create(RectMatrix a, RectMatrix b);

    int n() const noexcept { return a_.rows(); }
    int k() const noexcept { return b_.rows(); }
    Field field() const noexcept { return a_.field(); }
    const RectMatrix& a() const noexcept { return a_; }
    const RectMatrix& b() const noexcept { return b_; }
    const RectMatrix& phi() const noexcept { return phi_; }

    RectMatrix apply(const RectMatrix& x) const;

private:
    PreserverSpec(RectMatrix a, RectMatrix b, RectMatrix phi)
        : a_(std::move(a)), b_(std::move(b)), phi_(std::move(phi)) {}

    RectMatrix a_;
    RectMatrix b_;
    RectMatrix phi_;
};

LinearOperator spec_to_operator(const PreserverSpec& spec);

/// The operator X -> (phi vec(X))^t copied into all n rows.
LinearOperator broadcast_operator(const RectMatrix& phi, int n, int k);

/// phi matrix for X -> X[row|), the functional that copies one row of X.
RectMatrix row_copy_phi(Field f, int n, int k, int row);

/// Cyclic row shift bringing row i to the top, swap of columns 1 and j, the new
/// first column scaled by (-1)^{1 - delta_{1j}}, everything by (-1)^{i+1}.
RectMatrix apply_scs(const RectMatrix& x, int i, int j);
LinearOperator scs(Field f, int n, int k, int i, int j);
/// The same map as a two-sided pair (A, B) with A a signed cyclic permutation.
TwoSidedPair scs_pair(Field f, int n, int k, int i, int j);

struct VerifyOptions {
    VerificationReport::Mode mode = VerificationReport::Mode::Sampled;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    /// Exhaustive mode refuses to enumerate more matrices than this.
    std::uint64_t budget = 10'000'000;
    /// Every audit_every-th evaluation is recomputed with det_definition.
    std::uint64_t audit_every = 64;
};

/// Tests det_{n,k}(T(X)) = det_{n,k}(X), either on every X in M_{n,k}(GF(p))
/// (BudgetExceeded if p^{nk} > budget, always over Q) or on random X.
///
/// The sampled failure bound is (k * max_atom)^samples: a non-preserver makes
/// det(T(X)) - det(X) a nonzero polynomial of degree <= k, which vanishes at a
/// random point with probability at most k * max_atom.
VerificationReport verify_preserver(const LinearOperator& t, const VerifyOptions& options = {});

/// Factors S = (X -> A' X B') when possible. A' and B' are fixed up to
/// (c A', c^{-1} B'); the representative returned has the first nonzero entry
/// of the first nonzero column of A' equal to 1.
///
/// Throws ZeroOperator for S = 0 and NotTwoSided when no factorisation exists.
TwoSidedPair recover_two_sided(const LinearOperator& s);

/// Throws HypothesisViolated unless k >= 4, n >= k + 2, n + k odd and |F| > k.
void require_decomposition_hypotheses(Field f, int n, int k);

struct DecomposeOptions {
    std::uint64_t samples = 200;
    std::uint64_t seed = 0;
};

/// Recovers (A, B, phi) from a det_{n,k} preserver T:
///   phi   = row n of T(X),
///   S     = L^- o (T - broadcast(phi)) o L^+,
///   A', B' from recover_two_sided(S), (A, B) = two_sided_lift(A', B').
/// The result is re-checked: spec_to_operator(result) == T exactly.
///
/// Throws HypothesisViolated, NotAPreserver (sampled check failed, witness in
/// the message), NotTwoSided, or VerificationFailed.
PreserverSpec decompose(const LinearOperator& t, const DecomposeOptions& options = {});

}  // namespace cullis
