#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cullis/field.hpp"

namespace cullis {

/// Coefficients low-to-high: `coeffs[d]` multiplies x^d.
using Coefficients = std::vector<Scalar>;

Scalar evaluate(std::span<const Scalar> coeffs, const Scalar& x);

/// The unique polynomial of degree <= `degree_bound` through `points`.
///
/// Needs at least degree_bound + 1 points with pairwise-distinct abscissae in
/// a field with more than degree_bound elements. Surplus points must lie on
/// the same polynomial. The result always has degree_bound + 1 entries.
Coefficients interpolate(std::span<const std::pair<Scalar, Scalar>> points, std::size_t degree_bound);

}  // namespace cullis
