#pragma once

// Reference implementations written independently of the library, used only to
// cross-check it.

#include <algorithm>
#include <vector>

#include "cullis/matrix.hpp"

namespace oracle {

// Parity of the number of inversions of `v`.
inline int inversion_sign(const std::vector<int>& v) {
    int inversions = 0;
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b)
            if (v[a] > v[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

inline int subset_sign(std::vector<int> rows) {
    std::sort(rows.begin(), rows.end());
    int exponent = 0;
    for (std::size_t a = 0; a < rows.size(); ++a) exponent += rows[a] - static_cast<int>(a + 1);
    return exponent % 2 == 0 ? 1 : -1;
}

inline void injections(int n, int k, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(prefix.size()) == k) {
        out.push_back(prefix);
        return;
    }
    for (int r = 1; r <= n; ++r) {
        if (std::find(prefix.begin(), prefix.end(), r) != prefix.end()) continue;
        prefix.push_back(r);
        injections(n, k, prefix, out);
        prefix.pop_back();
    }
}

// Straight from the signed sum over injections.
inline cullis::Scalar det(const cullis::RectMatrix& x) {
    const int n = x.rows();
    const int k = x.cols();
    std::vector<std::vector<int>> all;
    std::vector<int> prefix;
    injections(n, k, prefix, all);
    cullis::Scalar total = x.field().zero();
    for (const auto& sigma : all) {
        cullis::Scalar term = x.field().from_int(inversion_sign(sigma) * subset_sign(sigma));
        for (int alpha = 1; alpha <= k; ++alpha) term *= x(sigma[static_cast<std::size_t>(alpha - 1)], alpha);
        total += term;
    }
    return total;
}

}  // namespace oracle
