#include "cullis/selftest.hpp"

#include "cullis/determinant.hpp"
#include "cullis/reduction.hpp"

namespace cullis::selftest {

namespace {

// B * diag(c^{-k}, 1, ..., 1) pairs with c * A.
TwoSidedPair scale_pair(const TwoSidedPair& pair, const Scalar& c) {
    const int k = pair.b.rows();
    Scalar inv_power = pair.b.field().one();
    for (int t = 0; t < k; ++t) inv_power = inv_power * c.inv();
    RectMatrix diag = RectMatrix::identity(pair.b.field(), k);
    diag(1, 1) = inv_power;
    return TwoSidedPair{c * pair.a, pair.b * diag};
}

// (A1, B1) after (A2, B2): X -> A1 A2 X B2 B1.
TwoSidedPair compose_pairs(const TwoSidedPair& first, const TwoSidedPair& second) {
    return TwoSidedPair{first.a * second.a, second.b * first.b};
}

}  // namespace

RectMatrix random_det_one(Rng& rng, Field f, int k) {
    RectMatrix m = RectMatrix::identity(f, k);
    if (k == 1) return m;
    const int shears = 2 * k;
    for (int s = 0; s < shears; ++s) {
        const int to = static_cast<int>(rng.below(static_cast<std::uint64_t>(k))) + 1;
        int from = static_cast<int>(rng.below(static_cast<std::uint64_t>(k - 1))) + 1;
        if (from >= to) ++from;
        const Scalar c = random_scalar(rng, f);
        for (int i = 1; i <= k; ++i) m(i, to) += c * m(i, from);
    }
    return m;
}

TwoSidedPair random_scs_product(Rng& rng, Field f, int n, int k) {
    TwoSidedPair pair{RectMatrix::identity(f, n), RectMatrix::identity(f, k)};
    const auto factors = 1 + rng.below(3);
    for (std::uint64_t t = 0; t < factors; ++t) {
        const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
        const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(k))) + 1;
        pair = compose_pairs(scs_pair(f, n, k, i, j), pair);
    }
    pair = scale_pair(pair, random_nonzero_scalar(rng, f));
    pair.b = pair.b * random_det_one(rng, f, k);
    return pair;
}

TwoSidedPair random_even_pair(Rng& rng, Field f, int m, int k) {
    const TwoSidedPair odd = random_scs_product(rng, f, m + 1, k);
    TwoSidedPair pair{m_minus(f, m + 1) * odd.a * m_plus(f, m + 1), odd.b};
    pair = scale_pair(pair, random_nonzero_scalar(rng, f));
    pair.b = random_det_one(rng, f, k) * pair.b;
    return pair;
}

TwoSidedPair random_odd_pair(Rng& rng, Field f, int n, int k) {
    switch (rng.below(3)) {
        case 0:
            return random_scs_product(rng, f, n, k);
        case 1: {
            const TwoSidedPair even = random_even_pair(rng, f, n - 1, k);
            return two_sided_lift(even.a, even.b);
        }
        default: {
            const TwoSidedPair even = random_even_pair(rng, f, n - 1, k);
            const TwoSidedPair lifted = two_sided_lift(even.a, even.b);
            return compose_pairs(random_scs_product(rng, f, n, k), lifted);
        }
    }
}

PreserverSpec random_spec(Rng& rng, Field f, int n, int k) {
    TwoSidedPair pair = random_odd_pair(rng, f, n, k);
    RectMatrix phi = random_matrix(rng, f, k, n * k);
    return PreserverSpec::create(std::move(pair.a), std::move(pair.b), std::move(phi));
}

std::vector<PreserverSpec> acceptance_specs(std::uint64_t seed) {
    std::vector<PreserverSpec> specs;
    for (std::uint32_t p : {5u, 7u}) {
        const Field f = Field::prime(p);
        Rng rng = Rng::derive(seed, "acceptance.specs." + f.name());
        for (int t = 0; t < 50; ++t) specs.push_back(random_spec(rng, f, 7, 4));
    }
    return specs;
}

std::vector<LinearOperator> all_scs(Field f, int n, int k) {
    std::vector<LinearOperator> ops;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= k; ++j) ops.push_back(scs(f, n, k, i, j));
    }
    return ops;
}

}  // namespace cullis::selftest
