#pragma once

// Helpers shared by criteria.cpp and properties.cpp.

#include <string>

#include "cullis/determinant.hpp"
#include "cullis/matrix.hpp"
#include "cullis/selftest.hpp"

namespace cullis::selftest::detail {

/// Visits every n x k matrix over the finite field f (the visitor may keep a copy).
template <typename Visit>
void for_each_matrix(Field f, int n, int k, Visit&& visit) {
    const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(k);
    std::vector<std::uint32_t> digits(cells, 0);
    RectMatrix x(f, n, k);
    while (true) {
        visit(static_cast<const RectMatrix&>(x));
        std::size_t c = 0;
        for (; c < cells; ++c) {
            if (++digits[c] < f.modulus()) {
                x.raw(c) = f.from_int(digits[c]);
                break;
            }
            digits[c] = 0;
            x.raw(c) = f.zero();
        }
        if (c == cells) return;
    }
}

inline std::string shape_label(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

inline std::string label(const std::string& prefix, Field f, int n, int k) {
    return prefix + "." + f.name() + "." + shape_label(n, k);
}

/// "name = value" lines plus the matrix, for failure messages.
inline std::string with_matrix(const std::string& what, const RectMatrix& x) { return what + " at\n" + x.to_string(); }

}  // namespace cullis::selftest::detail
